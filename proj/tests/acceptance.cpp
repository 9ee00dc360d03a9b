// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Everything is exact arithmetic; every check is equality or
// strict positivity, no tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "plethy/characters.hpp"
#include "plethy/partition.hpp"
#include "plethy/rational.hpp"
#include "plethy/symfunc.hpp"
#include "plethy/tableaux.hpp"
#include "plethy/tensor.hpp"
#include "plethy/weintraub.hpp"

using namespace plethy;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// 1. Every case of the sweep k <= d <= 3, n in {1,2}, plus k=2, n=3,
//    d in {2,3}: certificate with S > 0 and oracle multiplicity >= 1;
//    zero Exhausted, zero Failed.
bool criterion_sweep(std::string& detail) {
    std::vector<VerificationReport> reports = sweep(3, 2, 3, 0, 64);
    for (int d = 2; d <= 3; ++d)
        for (const Partition& lambda : enumerate_partitions(6, 2))
            reports.push_back(verify_case(lambda, 2, 3, d, 0, 64, false));
    int verified = 0;
    for (const auto& r : reports) {
        const bool ok = r.status == CaseStatus::Verified && r.certificate.has_value() &&
                        r.certificate->sum_of_squares > 0 && r.oracle_multiplicity >= 1;
        if (!ok) {
            detail = "case k=" + std::to_string(r.k) + " n=" + std::to_string(r.n) +
                     " d=" + std::to_string(r.d) + " lambda=(" + r.lambda.to_string() +
                     ") status=" + to_string(r.status);
            return false;
        }
        ++verified;
    }
    detail = std::to_string(verified) + " cases verified";
    return true;
}

// 2. plethysm_coefficient agrees with the monomial-multiset oracle for every
//    lambda of km <= 8 over every factorization (k,m), at d = km.
bool criterion_oracle(std::string& detail) {
    long long checked = 0;
    for (int k = 1; k <= 8; ++k) {
        for (int m = 1; k * m <= 8; ++m) {
            for (const Partition& lambda : enumerate_partitions(k * m, k * m)) {
                if (plethysm_coefficient(lambda, k, m) != brute_force_plethysm(lambda, k, m, k * m)) {
                    detail = "mismatch at lambda=(" + lambda.to_string() + ") k=" +
                             std::to_string(k) + " m=" + std::to_string(m);
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " coefficients agree";
    return true;
}

// 3. sum of mult * dim equals dim Sym^k(Sym^m C^d) for km <= 12, d <= 3.
bool criterion_dimension(std::string& detail) {
    long long checked = 0;
    for (int d = 1; d <= 3; ++d) {
        for (int k = 1; k <= 12; ++k) {
            for (int m = 1; k * m <= 12; ++m) {
                const PExpr f = plethysm_h(k, m);
                Integer total = 0;
                for (const Partition& lambda : enumerate_partitions(k * m, k)) {
                    const Rational c = schur_coefficient(f, lambda);
                    if (c.get_den() != 1 || c < 0) {
                        detail = "non-integral multiplicity at (" + lambda.to_string() + ")";
                        return false;
                    }
                    total += c.get_num() * weyl_dim(lambda, d);
                }
                const Integer inner_dim = binomial(m + d - 1, d - 1);
                if (total != binomial(inner_dim.get_si() + k - 1, k)) {
                    detail = "dimension mismatch at k=" + std::to_string(k) +
                             " m=" + std::to_string(m) + " d=" + std::to_string(d);
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " identities hold";
    return true;
}

// 4. Raising operators annihilate every hwv of size <= 8 for d <= 4, and
//    tensor products of hwvs are hwvs of the summed weight for sizes <= 4.
bool criterion_highest_weight(std::string& detail) {
    long long checked = 0;
    for (int d = 1; d <= 4; ++d) {
        for (int q = 1; q <= 8; ++q) {
            for (const Partition& lambda : enumerate_partitions(q, d)) {
                const SparseKet v = highest_weight_vector(lambda, d);
                for (int i = 1; i < d; ++i) {
                    if (!raising_apply(i, v).is_zero()) {
                        detail = "raising operator " + std::to_string(i) + " does not kill (" +
                                 lambda.to_string() + ") at d=" + std::to_string(d);
                        return false;
                    }
                    ++checked;
                }
            }
        }
    }
    const int d = 4;
    for (int p = 1; p <= 4; ++p) {
        for (int q = 1; q <= 4; ++q) {
            for (const Partition& lambda : enumerate_partitions(p, d)) {
                for (const Partition& mu : enumerate_partitions(q, d)) {
                    const SparseKet prod = tensor(highest_weight_vector(lambda, d),
                                                  highest_weight_vector(mu, d));
                    for (int i = 1; i < d; ++i) {
                        if (!raising_apply(i, prod).is_zero()) {
                            detail = "tensor (" + lambda.to_string() + ") x (" + mu.to_string() +
                                     ") is not highest weight";
                            return false;
                        }
                    }
                    std::vector<int> expected(static_cast<size_t>(d));
                    for (int i = 0; i < d; ++i) expected[static_cast<size_t>(i)] = lambda.part(i) + mu.part(i);
                    for (const auto& [w, c] : prod.terms()) {
                        if (!(weight_of(Word{w, d}) == Weight{expected})) {
                            detail = "tensor weight is not the sum at (" + lambda.to_string() +
                                     ") x (" + mu.to_string() + ")";
                            return false;
                        }
                    }
                    ++checked;
                }
            }
        }
    }
    detail = std::to_string(checked) + " annihilation/tensor checks";
    return true;
}

// 5. For every sweep case with 2nk <= 8: sigma(w (x) w) is fixed by the
//    isotypic projector of 2*lambda, and its inner product with phi^(x)k
//    equals the lazily computed sum of squares.
bool criterion_isotypic(std::string& detail) {
    long long checked = 0;
    for (int k = 1; k <= 3; ++k) {
        for (int d = k; d <= 3; ++d) {
            for (int n = 1; n <= 2; ++n) {
                if (2 * n * k > 8) continue;
                for (const Partition& lambda : enumerate_partitions(k * n, k)) {
                    const auto cert = find_certificate(lambda, k, n, d, 0, 64);
                    if (!cert) {
                        detail = "no certificate for (" + lambda.to_string() + ") k=" +
                                 std::to_string(k) + " n=" + std::to_string(n) +
                                 " d=" + std::to_string(d);
                        return false;
                    }
                    const SparseKet w = permute(cert->pi.inverse(),
                                                apply_matrix(cert->a, highest_weight_vector(lambda, d)));
                    const SparseKet v = permute(interleave_sigma(k * n), tensor(w, w));
                    if (isotypic_project(scale(lambda, 2), v) != v) {
                        detail = "projector moves sigma(w x w) at (" + lambda.to_string() + ") d=" +
                                 std::to_string(d);
                        return false;
                    }
                    if (inner(v, phi_power_ket(d, n, k)) != cert->sum_of_squares) {
                        detail = "inner product mismatch at (" + lambda.to_string() + ") d=" +
                                 std::to_string(d);
                        return false;
                    }
                    ++checked;
                }
            }
        }
    }
    detail = std::to_string(checked) + " membership checks";
    return true;
}

// 6. Kostka positivity matches dominance for all pairs of size q <= 8.
bool criterion_kostka(std::string& detail) {
    long long checked = 0;
    for (int q = 1; q <= 8; ++q) {
        const auto ps = enumerate_partitions(q, q);
        for (const Partition& lambda : ps) {
            for (const Partition& mu : ps) {
                if ((kostka(lambda, mu.parts()) > 0) != dominates(lambda, mu)) {
                    detail = "law fails at lambda=(" + lambda.to_string() + ") mu=(" +
                             mu.to_string() + ")";
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " pairs";
    return true;
}

// 7. Character orthogonality for q <= 8; Kronecker symmetric in all six
//    argument orders for q <= 5.
bool criterion_characters(std::string& detail) {
    long long checked = 0;
    for (int q = 1; q <= 8; ++q) {
        const auto ps = enumerate_partitions(q, q);
        for (const Partition& lambda : ps) {
            for (const Partition& kappa : ps) {
                Rational sum = 0;
                for (const CycleType& mu : ps)
                    sum += make_rational(mn_character(lambda, mu) * mn_character(kappa, mu),
                                         z_order(mu));
                if (sum != (lambda == kappa ? 1 : 0)) {
                    detail = "orthogonality fails at (" + lambda.to_string() + "),(" +
                             kappa.to_string() + ")";
                    return false;
                }
                ++checked;
            }
        }
    }
    for (int q = 1; q <= 5; ++q) {
        const auto ps = enumerate_partitions(q, q);
        for (const Partition& a : ps)
            for (const Partition& b : ps)
                for (const Partition& c : ps) {
                    const long long g = kronecker(a, b, c);
                    if (kronecker(a, c, b) != g || kronecker(b, a, c) != g ||
                        kronecker(b, c, a) != g || kronecker(c, a, b) != g ||
                        kronecker(c, b, a) != g) {
                        detail = "kronecker symmetry fails at (" + a.to_string() + "),(" +
                                 b.to_string() + "),(" + c.to_string() + ")";
                        return false;
                    }
                    ++checked;
                }
    }
    detail = std::to_string(checked) + " identities";
    return true;
}

// 8. Negative controls: odd components of h_2[h_2] stay at zero.
bool criterion_negative(std::string& detail) {
    if (plethysm_coefficient(P({3, 1}), 2, 2) != 0) {
        detail = "(3,1) over-reported";
        return false;
    }
    if (plethysm_coefficient(P({2, 1, 1}), 2, 2) != 0) {
        detail = "(2,1,1) over-reported";
        return false;
    }
    detail = "both stay zero";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"main theorem sweep (k <= d <= 3, n <= 2, plus k=2 n=3)", criterion_sweep},
        {"oracle equivalence (km <= 8, d = km)", criterion_oracle},
        {"dimension identity (km <= 12, d <= 3)", criterion_dimension},
        {"highest-weight suite (size <= 8, d <= 4; tensors <= 4)", criterion_highest_weight},
        {"isotypic membership and inner product (2nk <= 8)", criterion_isotypic},
        {"kostka positivity = dominance (q <= 8)", criterion_kostka},
        {"character orthogonality (q <= 8) and kronecker symmetry (q <= 5)", criterion_characters},
        {"negative controls (3,1) and (2,1,1) in h_2[h_2]", criterion_negative},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %zu: %s -- %s (%.2fs)\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0) std::printf("all %zu criteria passed\n", criteria.size());
    else std::printf("%d criteria FAILED\n", failures);
    return failures;
}
