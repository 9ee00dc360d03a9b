#include "plethy/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "plethy/error.hpp"
#include "plethy/rational.hpp"

namespace plethy {

long long z_order(const CycleType& mu) {
    long long z = 1;
    int run_part = 0, run_len = 0;
    auto flush = [&] {
        for (int i = 1; i <= run_len; ++i) z *= static_cast<long long>(run_part) * i;
    };
    for (int p : mu.parts()) {
        if (p == run_part) {
            ++run_len;
        } else {
            flush();
            run_part = p;
            run_len = 1;
        }
    }
    flush();
    return z;
}

namespace {

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<MemoKey, long long> g_mn_memo;
std::mutex g_mn_mutex;

// Border strips of size r spanning rows i..j correspond to replacements
//   parts[t] <- parts[t+1] - 1   for i <= t < j,
//   parts[j] <- parts[i] - r + (j - i),
// valid exactly when the result is again a partition. Height is j - i.
long long mn_rec(std::vector<int> shape, std::vector<int> cycles) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (cycles.empty()) return shape.empty() ? 1 : 0;
    if (shape.empty()) return 0;

    {
        std::lock_guard<std::mutex> lock(g_mn_mutex);
        auto it = g_mn_memo.find(MemoKey{shape, cycles});
        if (it != g_mn_memo.end()) return it->second;
    }

    const int r = cycles.front();
    std::vector<int> rest(cycles.begin() + 1, cycles.end());
    const int len = static_cast<int>(shape.size());
    long long total = 0;
    for (int i = 0; i < len; ++i) {
        for (int j = i; j < len; ++j) {
            std::vector<int> next = shape;
            for (int t = i; t < j; ++t) next[static_cast<size_t>(t)] = shape[static_cast<size_t>(t + 1)] - 1;
            next[static_cast<size_t>(j)] = shape[static_cast<size_t>(i)] - r + (j - i);
            bool ok = next[static_cast<size_t>(j)] >= 0;
            for (int t = 0; ok && t + 1 < len; ++t)
                ok = next[static_cast<size_t>(t)] >= next[static_cast<size_t>(t + 1)];
            if (!ok) continue;
            const long long sub = mn_rec(next, rest);
            total += ((j - i) % 2 == 0) ? sub : -sub;
        }
    }

    std::lock_guard<std::mutex> lock(g_mn_mutex);
    g_mn_memo.emplace(MemoKey{std::move(shape), std::move(cycles)}, total);
    return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const CycleType& mu) {
    if (lambda.size() != mu.size())
        throw domain_error("character: |lambda| must equal |mu|");
    return mn_rec(lambda.parts(), mu.parts());
}

CycleType square_class(const CycleType& mu) {
    std::vector<int> parts;
    for (int p : mu.parts()) {
        if (p % 2 == 1) {
            parts.push_back(p);
        } else {
            parts.push_back(p / 2);
            parts.push_back(p / 2);
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return CycleType(std::move(parts));
}

long long kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int q = lambda.size();
    if (mu.size() != q || nu.size() != q)
        throw domain_error("kronecker: partitions must have equal size");
    Rational sum = 0;
    for (const Partition& rho : enumerate_partitions(q, q)) {
        const long long prod = mn_character(lambda, rho) * mn_character(mu, rho) * mn_character(nu, rho);
        if (prod != 0) sum += make_rational(prod, z_order(rho));
    }
    if (sum.get_den() != 1 || sum < 0)
        throw std::logic_error("kronecker: non-integral or negative multiplicity");
    return sum.get_num().get_si();
}

long long symmetric_kronecker(const Partition& lambda, const Partition& mu) {
    const int q = lambda.size();
    if (mu.size() != q)
        throw domain_error("symmetric_kronecker: partitions must have equal size");
    Rational sum = 0;
    for (const Partition& rho : enumerate_partitions(q, q)) {
        const long long cl = mn_character(lambda, rho);
        if (cl == 0) continue;
        const long long cm = mn_character(mu, rho);
        const long long cm2 = mn_character(mu, square_class(rho));
        sum += make_rational(cl * (cm * cm + cm2), 2 * z_order(rho));
    }
    if (sum.get_den() != 1 || sum < 0)
        throw std::logic_error("symmetric_kronecker: non-integral or negative multiplicity");
    return sum.get_num().get_si();
}

}  // namespace plethy
