#ifndef PLETHY_GCT_HPP
#define PLETHY_GCT_HPP

#include <optional>

#include "plethy/partition.hpp"

namespace plethy {

/// Occurrence query for the coordinate ring of the d x d permanent orbit
/// closure: lambda of size ell*d, evaluated at toy scale.
struct GctQuery {
    Partition lambda;
    int d = 1;
    int ell = 1;
};

struct GctWitness {
    Partition mu;
    Partition nu;
};

/// Scans pairs mu, nu of size ell*d with at most d parts for
///   (1) kronecker(lambda,mu,nu) > 0, strengthened to
///       symmetric_kronecker(lambda,mu) > 0 when mu = nu, and
///   (2) plethysm multiplicity of both mu and nu in Sym^d(Sym^ell) > 0,
/// returning the first witness in enumeration order (nu scanned from mu up;
/// the conditions are symmetric under swapping mu and nu).
/// Requires ell*d <= 10; throws resource_error past `search_limit` pairs.
std::optional<GctWitness> perorbit_occurs(const GctQuery& query, long long search_limit = 1'000'000);

}  // namespace plethy

#endif
