#include "plethy/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "plethy/error.hpp"

namespace plethy {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw domain_error("partition part must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw domain_error("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::from_string(const std::string& s) {
    std::vector<int> parts;
    if (!s.empty()) {
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw domain_error("malformed partition string: '" + s + "'");
            }
            if (pos != tok.size())
                throw domain_error("malformed partition string: '" + s + "'");
            parts.push_back(v);
        }
        if (s.back() == ',')
            throw domain_error("malformed partition string: '" + s + "'");
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    const int cols = lambda.part(0);
    parts.reserve(static_cast<size_t>(cols));
    for (int j = 1; j <= cols; ++j) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= j) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw domain_error("dominance is defined for partitions of equal size");
    const int len = std::max(lambda.length(), mu.length());
    int sl = 0, sm = 0;
    for (int i = 0; i < len; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sm > sl) return false;
    }
    return true;
}

namespace {

void enumerate_rec(int total, int max_parts, int max_part, std::vector<int>& stack,
                   std::vector<Partition>& out) {
    if (total == 0) {
        out.emplace_back(stack);
        return;
    }
    if (max_parts == 0) return;
    // Largest first part first gives decreasing lexicographic output order.
    for (int p = std::min(total, max_part); p >= 1; --p) {
        if (static_cast<long long>(p) * max_parts < total) break;  // cannot fit the rest
        stack.push_back(p);
        enumerate_rec(total - p, max_parts - 1, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int total, int max_parts) {
    if (total < 0) throw domain_error("enumerate_partitions: negative total");
    if (max_parts < 0) throw domain_error("enumerate_partitions: negative max_parts");
    std::vector<Partition> out;
    std::vector<int> stack;
    enumerate_rec(total, max_parts, total, stack, out);
    return out;
}

Partition scale(const Partition& lambda, int c) {
    if (c < 1) throw domain_error("scale: factor must be positive");
    std::vector<int> parts = lambda.parts();
    for (int& p : parts) p *= c;
    return Partition(std::move(parts));
}

Partition rectangle(int part, int count) {
    if (part < 0 || count < 0) throw domain_error("rectangle: negative argument");
    if (part == 0) return Partition();
    return Partition(std::vector<int>(static_cast<size_t>(count), part));
}

}  // namespace plethy
