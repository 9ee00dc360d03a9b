#ifndef PLETHY_PARTITION_HPP
#define PLETHY_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

namespace plethy {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// Canonical form stores no zeros; trailing zeros supplied on input are
/// dropped. Comparison is lexicographic on the part vector, so sorted
/// containers iterate partitions in increasing lexicographic order.
class Partition {
public:
    Partition() = default;

    /// Validates weakly-decreasing nonnegative input and drops trailing
    /// zeros. Throws domain_error on a negative part or an increase.
    explicit Partition(std::vector<int> parts);

    /// Parses "4,2,1". The empty string is the empty partition.
    static Partition from_string(const std::string& s);

    const std::vector<int>& parts() const { return parts_; }

    /// i-th part, 0-based, with implicit zeros past the end.
    int part(int i) const {
        return (i >= 0 && i < static_cast<int>(parts_.size())) ? parts_[static_cast<size_t>(i)] : 0;
    }

    /// |lambda|: the sum of the parts.
    int size() const;

    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }

    bool empty() const { return parts_.empty(); }

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Conjugate (transposed diagram): lambda'_j = #{i : lambda_i >= j}.
Partition conjugate(const Partition& lambda);

/// Dominance order: every prefix sum of lambda is >= the one of mu.
/// Requires |lambda| = |mu|; throws domain_error otherwise.
bool dominates(const Partition& lambda, const Partition& mu);

/// All partitions of `total` with at most `max_parts` parts, in decreasing
/// lexicographic order. enumerate_partitions(0, k) = { () }.
std::vector<Partition> enumerate_partitions(int total, int max_parts);

/// Multiplies every part by c (c >= 1).
Partition scale(const Partition& lambda, int c);

/// The rectangle (part, part, ..., part) with `count` rows.
Partition rectangle(int part, int count);

}  // namespace plethy

#endif
