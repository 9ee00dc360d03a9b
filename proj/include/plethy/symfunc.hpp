#ifndef PLETHY_SYMFUNC_HPP
#define PLETHY_SYMFUNC_HPP

#include <map>
#include <utility>
#include <vector>

#include "plethy/partition.hpp"
#include "plethy/rational.hpp"

namespace plethy {

/// Homogeneous symmetric function written in the power-sum basis: a sparse
/// map from the index partition of p_mu to its rational coefficient. Only
/// nonzero coefficients are stored, and every index partition has the same
/// size (the degree).
class PExpr {
public:
    explicit PExpr(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Partition& mu) const;

    /// Adds c * p_mu, merging and dropping a resulting zero.
    void add(const Partition& mu, const Rational& c);

    PExpr& operator+=(const PExpr& other);
    PExpr operator*(const PExpr& other) const;
    PExpr scaled(const Rational& c) const;

    bool operator==(const PExpr&) const = default;

private:
    int degree_ = 0;
    std::map<Partition, Rational> terms_;
};

/// Degree guard for plethysm expansion; the CLI can override it through
/// the PLETHYRS_DEGREE_LIMIT environment variable.
inline constexpr int kDefaultDegreeLimit = 16;

/// p-expansion of the complete homogeneous function: h_m = sum_{mu |- m} p_mu / z_mu.
PExpr h_in_p(int m);

/// Plethysm by a power sum on the left: every index part of f is multiplied
/// by r, coefficients unchanged (p_r[p_s] = p_{rs}).
PExpr plethysm_p_into(int r, const PExpr& f);

/// h_k[h_m] = sum_{nu |- k} (1/z_nu) prod_{r in nu} p_r[h_m].
/// Throws resource_error when k*m exceeds degree_limit.
PExpr plethysm_h(int k, int m, int degree_limit = kDefaultDegreeLimit);

/// Coefficient of the Schur function s_lambda in f:
/// <f, s_lambda> = sum_mu f_mu chi^lambda(mu). Requires |lambda| = deg f.
Rational schur_coefficient(const PExpr& f, const Partition& lambda);

/// Multiplicity of the Weyl module lambda in Sym^k(Sym^m C^d) for any
/// d >= length(lambda). Throws logic_error if the rational result is not a
/// nonnegative integer.
long long plethysm_coefficient(const Partition& lambda, int k, int m,
                               int degree_limit = kDefaultDegreeLimit);

/// Full Schur decomposition of a plethysm h_k[h_m]: the nonzero
/// multiplicities, sorted by decreasing lexicographic order of lambda
/// (a refinement of decreasing dominance).
std::vector<std::pair<Partition, long long>> schur_decomposition(int k, int m,
                                                                 int degree_limit = kDefaultDegreeLimit);

/// Dimension of the Weyl module lambda over C^d by the hook content formula;
/// 0 when length(lambda) > d.
Integer weyl_dim(const Partition& lambda, int d);

/// Independent oracle for plethysm_coefficient: expands the character of
/// Sym^k(Sym^m C^d) over multisets of degree-m monomials in d variables and
/// peels Schur polynomials off the weight table by dominance triangularity
/// (using Kostka numbers, not characters). Agrees with plethysm_coefficient
/// whenever d >= k. Requires d >= length(lambda) and k*m <= 10.
long long brute_force_plethysm(const Partition& lambda, int k, int m, int d);

}  // namespace plethy

#endif
