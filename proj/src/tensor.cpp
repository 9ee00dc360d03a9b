#include "plethy/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "plethy/characters.hpp"
#include "plethy/error.hpp"

namespace plethy {

namespace {

// Dense a^{(x)q} expansion refuses above this many basis words.
constexpr long long kDenseGuard = 60'000;
constexpr int kIsotypicMaxQ = 8;

long long pow_ll(int base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > 4 * kDenseGuard) return r;  // saturate early, callers only compare
    }
    return r;
}

void check_word(const std::vector<int>& word, int d, int q) {
    if (static_cast<int>(word.size()) != q)
        throw domain_error("word length does not match q");
    for (int letter : word)
        if (letter < 1 || letter > d) throw domain_error("word letter out of range 1..d");
}

}  // namespace

int Weight::sum() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

Weight weight_of(const Word& w) {
    Weight out{std::vector<int>(static_cast<size_t>(w.d), 0)};
    for (int letter : w.letters) {
        if (letter < 1 || letter > w.d) throw domain_error("word letter out of range 1..d");
        ++out.counts[static_cast<size_t>(letter - 1)];
    }
    return out;
}

PermutationMap PermutationMap::identity(int q) {
    std::vector<int> images(static_cast<size_t>(q));
    std::iota(images.begin(), images.end(), 0);
    return PermutationMap(std::move(images));
}

PermutationMap::PermutationMap(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<size_t>(v)])
            throw domain_error("permutation images are not a bijection");
        seen[static_cast<size_t>(v)] = true;
    }
}

PermutationMap PermutationMap::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
    return PermutationMap(std::move(inv));
}

Partition PermutationMap::cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lens;
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            j = images_[static_cast<size_t>(j)];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

std::vector<int> PermutationMap::apply_to_word(const std::vector<int>& w) const {
    if (w.size() != images_.size()) throw domain_error("permutation degree does not match word length");
    std::vector<int> out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[static_cast<size_t>(images_[i])] = w[i];
    return out;
}

RationalMatrix::RationalMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n, Rational(0)) {
    if (n < 1) throw domain_error("matrix dimension must be positive");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational RationalMatrix::det() const {
    std::vector<Rational> a = entries_;
    Rational det = 1;
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (a[static_cast<size_t>(r * n_ + col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n_; ++j)
                std::swap(a[static_cast<size_t>(pivot * n_ + j)], a[static_cast<size_t>(col * n_ + j)]);
            det = -det;
        }
        const Rational& p = a[static_cast<size_t>(col * n_ + col)];
        det *= p;
        for (int r = col + 1; r < n_; ++r) {
            Rational factor = a[static_cast<size_t>(r * n_ + col)] / p;
            if (factor == 0) continue;
            for (int j = col; j < n_; ++j)
                a[static_cast<size_t>(r * n_ + j)] -= factor * a[static_cast<size_t>(col * n_ + j)];
        }
    }
    return det;
}

SparseKet::SparseKet(int d, int q) : d_(d), q_(q) {
    if (d < 1) throw domain_error("SparseKet: d must be positive");
    if (q < 0) throw domain_error("SparseKet: q must be nonnegative");
}

SparseKet SparseKet::basis(int d, std::vector<int> word) {
    SparseKet out(d, static_cast<int>(word.size()));
    out.add(word, 1);
    return out;
}

Rational SparseKet::coeff(const std::vector<int>& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparseKet::add(const std::vector<int>& word, const Rational& c) {
    if (c == 0) return;
    check_word(word, d_, q_);
    auto [it, inserted] = terms_.emplace(word, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparseKet SparseKet::operator+(const SparseKet& other) const {
    if (other.d_ != d_ || other.q_ != q_) throw domain_error("ket shape mismatch");
    SparseKet out = *this;
    for (const auto& [w, c] : other.terms_) out.add(w, c);
    return out;
}

SparseKet SparseKet::operator-(const SparseKet& other) const {
    if (other.d_ != d_ || other.q_ != q_) throw domain_error("ket shape mismatch");
    SparseKet out = *this;
    for (const auto& [w, c] : other.terms_) out.add(w, -c);
    return out;
}

SparseKet SparseKet::scaled(const Rational& c) const {
    SparseKet out(d_, q_);
    if (c == 0) return out;
    for (const auto& [w, coef] : terms_) out.terms_.emplace(w, coef * c);
    return out;
}

SparseKet permute(const PermutationMap& pi, const SparseKet& v) {
    if (pi.degree() != v.q()) throw domain_error("permute: degree mismatch");
    SparseKet out(v.d(), v.q());
    for (const auto& [w, c] : v.terms()) out.add(pi.apply_to_word(w), c);
    return out;
}

SparseKet apply_matrix(const RationalMatrix& a, const SparseKet& v) {
    if (a.dim() != v.d()) throw domain_error("apply_matrix: matrix dimension mismatch");
    if (pow_ll(v.d(), v.q()) > kDenseGuard)
        throw resource_error("apply_matrix: d^q exceeds the dense guard");
    SparseKet out(v.d(), v.q());
    std::vector<int> target(static_cast<size_t>(v.q()));
    for (const auto& [z, c] : v.terms()) {
        // Expand a|z_1> (x) ... (x) a|z_q>, pruning zero branches eagerly.
        std::function<void(int, const Rational&)> expand = [&](int pos, const Rational& partial) {
            if (pos == v.q()) {
                out.add(target, partial);
                return;
            }
            for (int x = 1; x <= v.d(); ++x) {
                const Rational& entry = a.at(x - 1, z[static_cast<size_t>(pos)] - 1);
                if (entry == 0) continue;
                target[static_cast<size_t>(pos)] = x;
                expand(pos + 1, partial * entry);
            }
        };
        expand(0, c);
    }
    return out;
}

Rational inner(const SparseKet& u, const SparseKet& v) {
    if (u.d() != v.d() || u.q() != v.q()) throw domain_error("inner: ket shape mismatch");
    const SparseKet& small = u.support_size() <= v.support_size() ? u : v;
    const SparseKet& big = u.support_size() <= v.support_size() ? v : u;
    Rational sum = 0;
    for (const auto& [w, c] : small.terms()) {
        const Rational other = big.coeff(w);
        if (other != 0) sum += c * other;
    }
    return sum;
}

SparseKet tensor(const SparseKet& u, const SparseKet& v) {
    if (u.d() != v.d()) throw domain_error("tensor: alphabet mismatch");
    SparseKet out(u.d(), u.q() + v.q());
    for (const auto& [wu, cu] : u.terms()) {
        for (const auto& [wv, cv] : v.terms()) {
            std::vector<int> w = wu;
            w.insert(w.end(), wv.begin(), wv.end());
            out.add(std::move(w), cu * cv);
        }
    }
    return out;
}

SparseKet slater(int k, int d) {
    if (k < 1) throw domain_error("slater: k must be positive");
    if (k > d) throw domain_error("slater: k must not exceed d");
    SparseKet out(d, k);
    std::vector<int> word(static_cast<size_t>(k));
    std::iota(word.begin(), word.end(), 1);
    // Coefficient of each rearrangement is the sign of the word read as a
    // permutation of 1..k.
    std::vector<int> perm = word;
    do {
        std::vector<bool> seen(static_cast<size_t>(k), false);
        int transpositions = 0;
        for (int i = 0; i < k; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            int len = 0, j = i;
            while (!seen[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = true;
                j = perm[static_cast<size_t>(j)] - 1;
                ++len;
            }
            transpositions += len - 1;
        }
        out.add(perm, (transpositions % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SparseKet highest_weight_vector(const Partition& lambda, int d) {
    if (lambda.length() > d)
        throw domain_error("highest_weight_vector: lambda has more than d parts");
    const Partition cols = conjugate(lambda);
    SparseKet out(d, 0);
    out.add({}, 1);
    for (int j = 0; j < cols.length(); ++j) out = tensor(out, slater(cols.part(j), d));
    return out;
}

SparseKet weight_component(const SparseKet& v, const Weight& mu) {
    if (static_cast<int>(mu.counts.size()) != v.d())
        throw domain_error("weight_component: weight length must equal d");
    SparseKet out(v.d(), v.q());
    for (const auto& [w, c] : v.terms()) {
        if (weight_of(Word{w, v.d()}) == mu) out.add(w, c);
    }
    return out;
}

SparseKet raising_apply(int i, const SparseKet& v) {
    if (i < 1 || i >= v.d()) throw domain_error("raising_apply: need 1 <= i < d");
    SparseKet out(v.d(), v.q());
    for (const auto& [w, c] : v.terms()) {
        for (int pos = 0; pos < v.q(); ++pos) {
            if (w[static_cast<size_t>(pos)] == i + 1) {
                std::vector<int> w2 = w;
                w2[static_cast<size_t>(pos)] = i;
                out.add(std::move(w2), c);
            }
        }
    }
    return out;
}

namespace {

// Group-algebra averaging over all of S_q. A dense int64 accumulator handles
// the common case (integral numerators after clearing one denominator, with
// a proven bound below 2^62); anything larger takes the generic map path.
SparseKet project_dense_int(const Partition& lambda, const SparseKet& v, const Integer& denom,
                            const std::vector<long long>& nums) {
    const int q = v.q(), d = v.d();
    const long long space = pow_ll(d, q);
    std::vector<long long> acc(static_cast<size_t>(space), 0);

    std::vector<std::vector<int>> letters;
    letters.reserve(v.support_size());
    for (const auto& [w, c] : v.terms()) letters.push_back(w);

    std::vector<long long> weight_of_target(static_cast<size_t>(q));
    std::map<Partition, long long> chi_cache;
    std::vector<int> perm(static_cast<size_t>(q));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const Partition type = PermutationMap(perm).cycle_type();
        auto it = chi_cache.find(type);
        if (it == chi_cache.end()) it = chi_cache.emplace(type, mn_character(lambda, type)).first;
        const long long chi = it->second;
        if (chi == 0) continue;
        // code(pi(w)) = sum_i w[i] * d^{q-1-pi(i)}; precompute the weights.
        long long w = 1;
        for (int pos = q - 1; pos >= 0; --pos) {
            weight_of_target[static_cast<size_t>(pos)] = w;
            w *= d;
        }
        for (size_t s = 0; s < letters.size(); ++s) {
            long long code = 0;
            for (int i = 0; i < q; ++i)
                code += static_cast<long long>(letters[s][static_cast<size_t>(i)] - 1) *
                        weight_of_target[static_cast<size_t>(perm[static_cast<size_t>(i)])];
            acc[static_cast<size_t>(code)] += chi * nums[s];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    const long long f_lambda = mn_character(lambda, rectangle(1, q));
    const Rational scale = Rational(make_integer(f_lambda)) / (factorial(q) * denom);
    SparseKet out(d, q);
    std::vector<int> word(static_cast<size_t>(q));
    for (long long code = 0; code < space; ++code) {
        if (acc[static_cast<size_t>(code)] == 0) continue;
        long long rest = code;
        for (int pos = q - 1; pos >= 0; --pos) {
            word[static_cast<size_t>(pos)] = static_cast<int>(rest % d) + 1;
            rest /= d;
        }
        Rational coef = Rational(make_integer(acc[static_cast<size_t>(code)])) * scale;
        out.add(word, coef);
    }
    return out;
}

SparseKet project_generic(const Partition& lambda, const SparseKet& v) {
    const int q = v.q();
    std::map<Partition, long long> chi_cache;
    std::map<std::vector<int>, Rational> acc;
    std::vector<int> perm(static_cast<size_t>(q));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const PermutationMap pi(perm);
        const Partition type = pi.cycle_type();
        auto it = chi_cache.find(type);
        if (it == chi_cache.end()) it = chi_cache.emplace(type, mn_character(lambda, type)).first;
        if (it->second == 0) continue;
        const Rational chi(make_integer(it->second));
        for (const auto& [w, c] : v.terms()) acc[pi.apply_to_word(w)] += chi * c;
    } while (std::next_permutation(perm.begin(), perm.end()));

    const long long f_lambda = mn_character(lambda, rectangle(1, q));
    const Rational scale = Rational(make_integer(f_lambda)) / factorial(q);
    SparseKet out(v.d(), q);
    for (const auto& [w, c] : acc) out.add(w, c * scale);
    return out;
}

}  // namespace

SparseKet isotypic_project(const Partition& lambda, const SparseKet& v) {
    const int q = v.q();
    if (lambda.size() != q) throw domain_error("isotypic_project: |lambda| must equal q");
    if (q > kIsotypicMaxQ)
        throw resource_error("isotypic_project: q > 8 sums over too large a symmetric group");
    if (v.is_zero()) return SparseKet(v.d(), q);

    // Try to clear denominators into int64 with headroom for the q! sum.
    if (pow_ll(v.d(), q) <= kDenseGuard) {
        Integer denom = 1;
        for (const auto& [w, c] : v.terms()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
        Integer max_abs = 0;
        std::vector<long long> nums;
        nums.reserve(v.support_size());
        bool fits = true;
        for (const auto& [w, c] : v.terms()) {
            Integer n = c.get_num() * (denom / c.get_den());
            if (!n.fits_slong_p()) {
                fits = false;
                break;
            }
            nums.push_back(n.get_si());
            Integer a = abs(n);
            if (a > max_abs) max_abs = a;
        }
        if (fits) {
            // |acc| <= (sum_pi |chi|) * max|n| <= q! * f^lambda * max|n|.
            Integer bound = factorial(q) * make_integer(mn_character(lambda, rectangle(1, q))) * max_abs;
            if (bound < Integer(1) << 62) return project_dense_int(lambda, v, denom, nums);
        }
    }
    return project_generic(lambda, v);
}

Rational overlap_with_matrix(const SparseKet& v, const RationalMatrix& a, const std::vector<int>& x) {
    if (a.dim() != v.d()) throw domain_error("overlap_with_matrix: matrix dimension mismatch");
    check_word(x, v.d(), v.q());
    Rational sum = 0;
    for (const auto& [z, c] : v.terms()) {
        Rational prod = c;
        for (int j = 0; j < v.q() && prod != 0; ++j)
            prod *= a.at(x[static_cast<size_t>(j)] - 1, z[static_cast<size_t>(j)] - 1);
        sum += prod;
    }
    return sum;
}

}  // namespace plethy
