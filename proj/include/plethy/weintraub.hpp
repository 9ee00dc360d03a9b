#ifndef PLETHY_WEINTRAUB_HPP
#define PLETHY_WEINTRAUB_HPP

#include <optional>
#include <string>
#include <vector>

#include "plethy/partition.hpp"
#include "plethy/rational.hpp"
#include "plethy/symfunc.hpp"
#include "plethy/tensor.hpp"

namespace plethy {

/// Witness that the even-weight component 2*lambda occurs in
/// Sym^k(Sym^{2n} C^d): an invertible rational matrix a and an arrangement
/// word x with <a v_lambda | x> != 0, together with the strictly positive
/// sum-of-squares value it forces.
struct Certificate {
    Partition lambda;
    int k = 0, n = 0, d = 0;
    RationalMatrix a{1};
    std::vector<int> arrangement;   // rearrangement of 1^n 2^n ... k^n
    PermutationMap pi{std::vector<int>{}};  // canonical map: base word -> arrangement
    Rational overlap;               // <a v_lambda | arrangement>, nonzero
    Rational sum_of_squares;        // > 0, >= overlap^2
    int attempts = 0;               // matrices tried, identity included
};

enum class CaseStatus { Verified, Exhausted, Failed };

const char* to_string(CaseStatus s);

/// Computational transcript of one case: certificate (or exhaustion), the
/// independent oracle multiplicity of 2*lambda in the plethysm, and the
/// optional exact projector cross-check.
struct VerificationReport {
    Partition lambda;
    int k = 0, n = 0, d = 0;
    CaseStatus status = CaseStatus::Exhausted;
    std::optional<Certificate> certificate;
    long long oracle_multiplicity = 0;
    bool projector_checked = false;
    std::string failure;            // populated when status == Failed
    double elapsed_ms = 0.0;
};

/// All distinct rearrangements of the base word 1^n 2^n ... k^n in
/// lexicographic order (the base word comes first).
std::vector<std::vector<int>> arrangement_words(int k, int n);

/// The lexicographically least position bijection sending the base word to
/// `arrangement`, stable within equal letters. Throws domain_error when the
/// arrangement is not a rearrangement of the base word.
PermutationMap canonical_pi(const std::vector<int>& arrangement, int k, int n);

/// The base word 1^n 2^n ... k^n.
std::vector<int> base_word(int k, int n);

/// Interleaving permutation on 2*nk positions with images
/// (1,3,5,...,2nk-1,2,4,6,...,2nk).
PermutationMap interleave_sigma(int nk);

/// |phi>^{(x) k} with |phi> = sum_{i=1}^d |i>^{(x) 2n}.
SparseKet phi_power_ket(int d, int n, int k);

/// sum over (i_1..i_k) in [d]^k of <a v_lambda | pi (i_1^n ... i_k^n)>^2.
/// Exact and nonnegative by construction.
Rational sum_of_squares(const Partition& lambda, const RationalMatrix& a, const PermutationMap& pi,
                        int d, int k, int n);

/// Searches for a certificate: the identity matrix first, then seeded
/// pseudorandom invertible matrices with entries in {-3..3}; for each matrix
/// the arrangement words are scanned in order and the first nonzero overlap
/// wins. Returns nullopt after `budget` matrices (this indicts the budget,
/// not the theorem).
std::optional<Certificate> find_certificate(const Partition& lambda, int k, int n, int d,
                                            unsigned long long seed, int budget);

/// find_certificate plus the oracle multiplicity of 2*lambda in
/// Sym^k(Sym^{2n}), plus (when requested and 2nk <= 8) the exact isotypic
/// membership and inner-product cross-checks against the literal vectors.
VerificationReport verify_case(const Partition& lambda, int k, int n, int d,
                               unsigned long long seed, int budget, bool check_projector,
                               int degree_limit = kDefaultDegreeLimit);

/// verify_case over every k <= d <= d_max (k <= k_max), n <= n_max, and
/// every lambda of size kn with at most k parts, in that nesting order.
std::vector<VerificationReport> sweep(int k_max, int n_max, int d_max, unsigned long long seed,
                                      int budget, bool check_projector = false,
                                      int degree_limit = kDefaultDegreeLimit);

}  // namespace plethy

#endif
