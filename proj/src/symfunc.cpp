#include "plethy/symfunc.hpp"

#include <algorithm>
#include <functional>

#include "plethy/characters.hpp"
#include "plethy/error.hpp"
#include "plethy/tableaux.hpp"

namespace plethy {

Rational PExpr::coefficient(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PExpr::add(const Partition& mu, const Rational& c) {
    if (c == 0) return;
    if (mu.size() != degree_)
        throw domain_error("PExpr::add: index partition has the wrong degree");
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PExpr& PExpr::operator+=(const PExpr& other) {
    if (other.degree_ != degree_)
        throw domain_error("PExpr: degree mismatch in sum");
    for (const auto& [mu, c] : other.terms_) add(mu, c);
    return *this;
}

PExpr PExpr::operator*(const PExpr& other) const {
    PExpr out(degree_ + other.degree_);
    for (const auto& [mu, c] : terms_) {
        for (const auto& [nu, e] : other.terms_) {
            std::vector<int> parts = mu.parts();
            parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            out.add(Partition(std::move(parts)), c * e);
        }
    }
    return out;
}

PExpr PExpr::scaled(const Rational& c) const {
    PExpr out(degree_);
    if (c == 0) return out;
    for (const auto& [mu, coef] : terms_) out.add(mu, coef * c);
    return out;
}

PExpr h_in_p(int m) {
    if (m < 0) throw domain_error("h_in_p: negative degree");
    PExpr out(m);
    for (const Partition& mu : enumerate_partitions(m, m))
        out.add(mu, make_rational(1, z_order(mu)));
    return out;
}

PExpr plethysm_p_into(int r, const PExpr& f) {
    if (r < 1) throw domain_error("plethysm_p_into: r must be positive");
    PExpr out(r * f.degree());
    for (const auto& [mu, c] : f.terms()) {
        std::vector<int> parts = mu.parts();
        for (int& p : parts) p *= r;
        out.add(Partition(std::move(parts)), c);
    }
    return out;
}

PExpr plethysm_h(int k, int m, int degree_limit) {
    if (k < 1 || m < 1) throw domain_error("plethysm_h: k and m must be positive");
    if (static_cast<long long>(k) * m > degree_limit)
        throw resource_error("plethysm_h: degree " + std::to_string(k * m) +
                             " exceeds the limit " + std::to_string(degree_limit));
    const PExpr hm = h_in_p(m);
    PExpr out(k * m);
    for (const Partition& nu : enumerate_partitions(k, k)) {
        PExpr prod(0);
        prod.add(Partition(), 1);
        for (int r : nu.parts()) prod = prod * plethysm_p_into(r, hm);
        out += prod.scaled(make_rational(1, z_order(nu)));
    }
    return out;
}

Rational schur_coefficient(const PExpr& f, const Partition& lambda) {
    if (lambda.size() != f.degree())
        throw domain_error("schur_coefficient: |lambda| must equal the degree of f");
    Rational sum = 0;
    for (const auto& [mu, c] : f.terms()) sum += c * make_integer(mn_character(lambda, mu));
    return sum;
}

namespace {

long long to_nonneg_integer(const Rational& value, const char* what) {
    if (value.get_den() != 1 || value < 0)
        throw std::logic_error(std::string(what) + ": expected a nonnegative integer, got " +
                               value.get_str());
    return value.get_num().get_si();
}

}  // namespace

long long plethysm_coefficient(const Partition& lambda, int k, int m, int degree_limit) {
    if (lambda.size() != k * m)
        throw domain_error("plethysm_coefficient: |lambda| must equal k*m");
    return to_nonneg_integer(schur_coefficient(plethysm_h(k, m, degree_limit), lambda),
                             "plethysm_coefficient");
}

std::vector<std::pair<Partition, long long>> schur_decomposition(int k, int m, int degree_limit) {
    const PExpr f = plethysm_h(k, m, degree_limit);
    // Components of Sym^k(...) have at most k rows.
    std::vector<std::pair<Partition, long long>> out;
    for (const Partition& lambda : enumerate_partitions(k * m, k)) {
        const long long mult = to_nonneg_integer(schur_coefficient(f, lambda), "schur_decomposition");
        if (mult > 0) out.emplace_back(lambda, mult);
    }
    return out;
}

Integer weyl_dim(const Partition& lambda, int d) {
    if (d < 1) throw domain_error("weyl_dim: d must be positive");
    if (lambda.length() > d) return 0;
    const Partition conj = conjugate(lambda);
    Integer num = 1, den = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.part(i); ++j) {
            num *= d + j - i;                                        // content
            den *= lambda.part(i) - j + conj.part(j) - i - 1;        // hook length
        }
    }
    Integer dim = num / den;
    if (dim * den != num) throw std::logic_error("weyl_dim: hook content product not integral");
    return dim;
}

namespace {

// Degree-m exponent vectors in d variables, lexicographic.
void monomials_rec(int d, int remaining, std::vector<int>& exp, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(exp.size()) == d - 1) {
        exp.push_back(remaining);
        out.push_back(exp);
        exp.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exp.push_back(e);
        monomials_rec(d, remaining - e, exp, out);
        exp.pop_back();
    }
}

}  // namespace

long long brute_force_plethysm(const Partition& lambda, int k, int m, int d) {
    if (k < 1 || m < 1 || d < 1) throw domain_error("brute_force_plethysm: bad parameters");
    if (lambda.size() != k * m) throw domain_error("brute_force_plethysm: |lambda| must equal k*m");
    if (lambda.length() > d) throw domain_error("brute_force_plethysm: need d >= length(lambda)");
    if (k * m > 10) throw resource_error("brute_force_plethysm: k*m > 10");

    std::vector<std::vector<int>> monos;
    std::vector<int> scratch;
    monomials_rec(d, m, scratch, monos);
    const long long n_monos = static_cast<long long>(monos.size());
    if (binomial(n_monos + k - 1, k) > 2'000'000)
        throw resource_error("brute_force_plethysm: multiset count over the limit");

    // Weight table of Sym^k(Sym^m C^d). The character is symmetric, so only
    // the dominant weights (weakly decreasing totals) are tallied; their
    // permutations carry the same multiplicity and never enter the peel.
    std::map<Partition, long long> weight_count;
    std::vector<int> total(static_cast<size_t>(d), 0);
    std::function<void(int, int)> multisets = [&](int start, int left) {
        if (left == 0) {
            if (std::is_sorted(total.rbegin(), total.rend())) ++weight_count[Partition(total)];
            return;
        }
        for (int i = start; i < static_cast<int>(monos.size()); ++i) {
            for (int t = 0; t < d; ++t) total[static_cast<size_t>(t)] += monos[static_cast<size_t>(i)][static_cast<size_t>(t)];
            multisets(i, left - 1);
            for (int t = 0; t < d; ++t) total[static_cast<size_t>(t)] -= monos[static_cast<size_t>(i)][static_cast<size_t>(t)];
        }
    };
    multisets(0, k);

    // Peel Schur polynomials from the top of the dominance order. Decreasing
    // lexicographic order is a linear extension of dominance, so by the time
    // mu is reached every lambda with K_{lambda,mu} > 0 and c_lambda unknown
    // has already been peeled.
    std::map<Partition, long long> mult;
    std::vector<Partition> shapes = enumerate_partitions(k * m, d);
    for (auto it = shapes.begin(); it != shapes.end(); ++it) {
        const Partition& mu = *it;
        auto wc = weight_count.find(mu);
        long long c = (wc == weight_count.end()) ? 0 : wc->second;
        for (auto prev = shapes.begin(); prev != it; ++prev) {
            const long long cm = mult[*prev];
            if (cm != 0) c -= cm * kostka(*prev, mu.parts());
        }
        if (c < 0) throw std::logic_error("brute_force_plethysm: negative multiplicity");
        mult[mu] = c;
    }
    auto it = mult.find(lambda);
    return it == mult.end() ? 0 : it->second;
}

}  // namespace plethy
