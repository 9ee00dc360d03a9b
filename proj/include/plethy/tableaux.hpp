#ifndef PLETHY_TABLEAUX_HPP
#define PLETHY_TABLEAUX_HPP

#include <vector>

#include "plethy/partition.hpp"

namespace plethy {

/// Semistandard Young tableau: rows weakly increase left to right, columns
/// strictly increase top to bottom.
struct Tableau {
    std::vector<std::vector<int>> rows;

    bool operator==(const Tableau&) const = default;
};

/// All SSYT of the given shape whose entry i appears content[i-1] times
/// (entries range over 1..content.size(); zeros in content are allowed).
/// Output is sorted by the row reading word, lexicographically.
/// Throws domain_error unless sum(content) = |shape|.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& content);

/// Kostka number K_{shape,content}: the count of the tableaux above,
/// computed by the same backtracking without materializing them.
long long kostka(const Partition& shape, const std::vector<int>& content);

}  // namespace plethy

#endif
