#ifndef PLETHY_TENSOR_HPP
#define PLETHY_TENSOR_HPP

#include <map>
#include <vector>

#include "plethy/partition.hpp"
#include "plethy/rational.hpp"

namespace plethy {

/// A computational-basis word: letters w_1..w_q in {1..d}.
struct Word {
    std::vector<int> letters;
    int d = 1;

    int q() const { return static_cast<int>(letters.size()); }
    bool operator==(const Word&) const = default;
};

/// Letter-multiplicity vector of length d; the torus weight of a word.
struct Weight {
    std::vector<int> counts;

    int sum() const;
    bool operator==(const Weight&) const = default;
};

Weight weight_of(const Word& w);

/// Bijection on tensor positions {0..q-1} (0-based internally).
class PermutationMap {
public:
    static PermutationMap identity(int q);

    /// images[i] = pi(i); throws domain_error unless a bijection.
    explicit PermutationMap(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int map(int i) const { return images_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    PermutationMap inverse() const;
    Partition cycle_type() const;

    /// Position action on a word: out[pi(i)] = w[i].
    std::vector<int> apply_to_word(const std::vector<int>& w) const;

    bool operator==(const PermutationMap&) const = default;

private:
    std::vector<int> images_;
};

/// Square matrix with exact rational entries.
class RationalMatrix {
public:
    explicit RationalMatrix(int n);
    static RationalMatrix identity(int n);

    int dim() const { return n_; }
    Rational& at(int i, int j) { return entries_[static_cast<size_t>(i * n_ + j)]; }
    const Rational& at(int i, int j) const { return entries_[static_cast<size_t>(i * n_ + j)]; }

    /// Exact determinant by fraction-free elimination on a copy.
    Rational det() const;

    bool operator==(const RationalMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<Rational> entries_;
};

/// Exact sparse vector in (C^d)^{(x) q}, keyed by words in lexicographic
/// order; zero coefficients are never stored.
class SparseKet {
public:
    SparseKet(int d, int q);

    /// The basis ket |word>.
    static SparseKet basis(int d, std::vector<int> word);

    int d() const { return d_; }
    int q() const { return q_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    Rational coeff(const std::vector<int>& word) const;
    void add(const std::vector<int>& word, const Rational& c);

    SparseKet operator+(const SparseKet& other) const;
    SparseKet operator-(const SparseKet& other) const;
    SparseKet scaled(const Rational& c) const;

    bool operator==(const SparseKet&) const = default;

private:
    int d_ = 1;
    int q_ = 0;
    std::map<std::vector<int>, Rational> terms_;
};

/// Symmetric-group action: the letter at position pi^{-1}(j) moves to j.
SparseKet permute(const PermutationMap& pi, const SparseKet& v);

/// Diagonal GL action a^{(x) q}. Guarded: refuses d^q beyond the dense
/// limit; large-q pipelines go through overlap_with_matrix instead.
SparseKet apply_matrix(const RationalMatrix& a, const SparseKet& v);

/// Real inner product sum_w u(w) v(w) (coefficients are rational, so
/// conjugation is the identity).
Rational inner(const SparseKet& u, const SparseKet& v);

SparseKet tensor(const SparseKet& u, const SparseKet& v);

/// Antisymmetrized column word sum_pi sgn(pi) pi|12..k>; k! terms with
/// coefficients +-1. Requires k <= d.
SparseKet slater(int k, int d);

/// Explicit highest weight vector of weight lambda: the tensor product of
/// slater(lambda'_j, d) over the columns j = 1..lambda_1, left factor first.
SparseKet highest_weight_vector(const Partition& lambda, int d);

/// Restriction of v to the words of the given content.
SparseKet weight_component(const SparseKet& v, const Weight& mu);

/// Raising operator E_{i,i+1} acting as a derivation across positions
/// (sends letter i+1 to i at one position per summand). Requires 1 <= i < d.
SparseKet raising_apply(int i, const SparseKet& v);

/// Central idempotent of type lambda applied to v:
/// (f^lambda / q!) sum_{pi in S_q} chi^lambda(pi) pi(v).
/// Guarded at q <= 8 (the sum runs over all of S_q).
SparseKet isotypic_project(const Partition& lambda, const SparseKet& v);

/// <a v_lambda | x> evaluated lazily from the support of v_lambda:
/// sum_z c_z prod_j a[x_j][z_j]. Never materializes a^{(x) q} v.
Rational overlap_with_matrix(const SparseKet& v, const RationalMatrix& a, const std::vector<int>& x);

}  // namespace plethy

#endif
