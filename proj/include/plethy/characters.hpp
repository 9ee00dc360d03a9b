#ifndef PLETHY_CHARACTERS_HPP
#define PLETHY_CHARACTERS_HPP

#include "plethy/partition.hpp"

namespace plethy {

/// A cycle type is a partition of q read as a conjugacy class of the
/// symmetric group on q letters.
using CycleType = Partition;

/// Centralizer order z_mu = prod_r r^{m_r} m_r! where m_r is the number of
/// parts equal to r. The class has q!/z_mu elements.
long long z_order(const CycleType& mu);

/// Irreducible character chi^lambda(mu) by the Murnaghan-Nakayama rule,
/// memoized on (shape, remaining cycle type). Requires |lambda| = |mu|.
long long mn_character(const Partition& lambda, const CycleType& mu);

/// Cycle type of g^2 for g of cycle type mu: an odd part r stays one part r,
/// an even part r splits into two parts r/2.
CycleType square_class(const CycleType& mu);

/// Kronecker coefficient g(lambda,mu,nu): multiplicity of the trivial
/// representation in the triple tensor product of Specht modules,
/// sum_rho chi^lambda(rho) chi^mu(rho) chi^nu(rho) / z_rho.
long long kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Multiplicity of the trivial representation in
/// Specht(lambda) (x) Sym^2 Specht(mu), via the symmetrized character
/// (chi^mu(g)^2 + chi^mu(g^2)) / 2.
long long symmetric_kronecker(const Partition& lambda, const Partition& mu);

}  // namespace plethy

#endif
