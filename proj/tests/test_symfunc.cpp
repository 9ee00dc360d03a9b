#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "plethy/characters.hpp"
#include "plethy/error.hpp"
#include "plethy/symfunc.hpp"
#include "plethy/tableaux.hpp"

using namespace plethy;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Polynomial in `nvars` variables as a sparse exponent-vector map; just
// enough to expand power sums and to cross-check p-basis identities
// independently of the PExpr machinery.
using Poly = std::map<std::vector<int>, Rational>;

Poly poly_one(int nvars) { return {{std::vector<int>(static_cast<size_t>(nvars), 0), 1}}; }

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            auto [it, inserted] = out.emplace(std::move(e), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

Poly power_sum_poly(int r, int nvars) {
    Poly out;
    for (int v = 0; v < nvars; ++v) {
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(v)] = r;
        out.emplace(std::move(e), 1);
    }
    return out;
}

Poly expand_pexpr(const PExpr& f, int nvars) {
    Poly out;
    for (const auto& [mu, c] : f.terms()) {
        Poly term = poly_one(nvars);
        for (int r : mu.parts()) term = poly_mul(term, power_sum_poly(r, nvars));
        for (auto& [e, coef] : term) {
            auto [it, inserted] = out.emplace(e, coef * c);
            if (!inserted) {
                it->second += coef * c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

Poly complete_homogeneous_poly(int m, int nvars) {
    // sum over all monomials of degree m
    Poly out;
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            e[static_cast<size_t>(var)] = left;
            out.emplace(e, 1);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[static_cast<size_t>(var)] = x;
            self(self, var + 1, left - x);
        }
    };
    rec(rec, 0, m);
    return out;
}

}  // namespace

TEST_CASE("h_in_p values") {
    const PExpr h1 = h_in_p(1);
    CHECK(h1.terms().size() == 1);
    CHECK(h1.coefficient(P({1})) == 1);

    const PExpr h2 = h_in_p(2);
    CHECK(h2.terms().size() == 2);
    CHECK(h2.coefficient(P({1, 1})) == make_rational(1, 2));
    CHECK(h2.coefficient(P({2})) == make_rational(1, 2));

    for (int m = 1; m <= 8; ++m)
        CHECK(h_in_p(m).coefficient(P({m})) == make_rational(1, m));
}

TEST_CASE("h_in_p expands to the complete homogeneous polynomial") {
    // the stated oracle in two variables, plus full m-variable confirmation
    for (int m = 1; m <= 8; ++m)
        CHECK(expand_pexpr(h_in_p(m), 2) == complete_homogeneous_poly(m, 2));
    for (int m = 1; m <= 5; ++m)
        CHECK(expand_pexpr(h_in_p(m), m) == complete_homogeneous_poly(m, m));
}

TEST_CASE("plethysm_p_into") {
    PExpr p1(1);
    p1.add(P({1}), 1);
    const PExpr doubled = plethysm_p_into(2, p1);
    CHECK(doubled.coefficient(P({2})) == 1);
    CHECK(doubled.terms().size() == 1);

    const PExpr f = h_in_p(3);
    CHECK(plethysm_p_into(1, f) == f);

    const PExpr g = plethysm_p_into(2, h_in_p(2));
    CHECK(g.coefficient(P({2, 2})) == make_rational(1, 2));
    CHECK(g.coefficient(P({4})) == make_rational(1, 2));
    CHECK(g.degree() == 4);
}

TEST_CASE("plethysm_h small cases") {
    for (int m = 1; m <= 5; ++m) CHECK(plethysm_h(1, m) == h_in_p(m));

    SUBCASE("h_2[h_2] = s4 + s22") {
        const PExpr f = plethysm_h(2, 2);
        CHECK(schur_coefficient(f, P({4})) == 1);
        CHECK(schur_coefficient(f, P({3, 1})) == 0);
        CHECK(schur_coefficient(f, P({2, 2})) == 1);
        CHECK(schur_coefficient(f, P({2, 1, 1})) == 0);
        CHECK(schur_coefficient(f, P({1, 1, 1, 1})) == 0);
    }

    SUBCASE("h_2[h_3] = s6 + s42") {
        const PExpr f = plethysm_h(2, 3);
        for (const Partition& lambda : enumerate_partitions(6, 6)) {
            const Rational expected = (lambda == P({6}) || lambda == P({4, 2})) ? 1 : 0;
            CHECK(schur_coefficient(f, lambda) == expected);
        }
        // dimension check at d = 2: 7 + 3 = dim Sym^2(Sym^3 C^2) = 10
        CHECK(weyl_dim(P({6}), 2) == 7);
        CHECK(weyl_dim(P({4, 2}), 2) == 3);
    }

    CHECK_THROWS_AS(plethysm_h(5, 4), resource_error);
    CHECK_THROWS_AS(plethysm_h(2, 4, 6), resource_error);
}

TEST_CASE("schur_coefficient") {
    PExpr p1sq(2);
    p1sq.add(P({1, 1}), 1);  // p_1^2
    CHECK(schur_coefficient(p1sq, P({2})) == 1);
    CHECK(schur_coefficient(p1sq, P({1, 1})) == 1);
    for (int m = 1; m <= 6; ++m) CHECK(schur_coefficient(h_in_p(m), P({m})) == 1);
    CHECK_THROWS_AS(schur_coefficient(h_in_p(2), P({3})), domain_error);
}

TEST_CASE("plethysm_coefficient") {
    CHECK(plethysm_coefficient(P({4}), 2, 2) == 1);
    CHECK(plethysm_coefficient(P({3, 1}), 2, 2) == 0);
    CHECK(plethysm_coefficient(P({2, 2}), 2, 2) == 1);
    CHECK(plethysm_coefficient(P({2, 1, 1}), 2, 2) == 0);
    CHECK_THROWS_AS(plethysm_coefficient(P({3}), 2, 2), domain_error);

    SUBCASE("single-row component always occurs exactly once") {
        for (int k = 1; k <= 12; ++k)
            for (int m = 1; k * m <= 12; ++m)
                CHECK(plethysm_coefficient(P({k * m}), k, m) == 1);
    }
}

TEST_CASE("schur_decomposition ordering and content") {
    const auto terms = schur_decomposition(2, 4);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0] == std::pair{P({8}), 1LL});
    CHECK(terms[1] == std::pair{P({6, 2}), 1LL});
    CHECK(terms[2] == std::pair{P({4, 4}), 1LL});
    for (size_t i = 0; i + 1 < terms.size(); ++i) CHECK(terms[i].first > terms[i + 1].first);
}

TEST_CASE("weyl_dim") {
    for (int d = 1; d <= 4; ++d)
        for (int m = 0; m <= 6; ++m)
            CHECK(weyl_dim(P({m}), d) == binomial(m + d - 1, d - 1));
    CHECK(weyl_dim(P({1, 1}), 2) == 1);
    CHECK(weyl_dim(P({2, 2}), 2) == 1);
    CHECK(weyl_dim(P({2, 1}), 3) == 8);
    CHECK(weyl_dim(P({1, 1, 1}), 2) == 0);

    SUBCASE("agrees with counting semistandard tableaux") {
        // independent count: sum of Kostka numbers over all contents
        for (int d = 1; d <= 3; ++d) {
            for (int q = 1; q <= 6; ++q) {
                for (const Partition& lambda : enumerate_partitions(q, q)) {
                    long long count = 0;
                    std::vector<int> content(static_cast<size_t>(d), 0);
                    auto rec = [&](auto&& self, int var, int left) -> void {
                        if (var == d - 1) {
                            content[static_cast<size_t>(var)] = left;
                            count += kostka(lambda, content);
                            return;
                        }
                        for (int x = 0; x <= left; ++x) {
                            content[static_cast<size_t>(var)] = x;
                            self(self, var + 1, left - x);
                        }
                    };
                    rec(rec, 0, q);
                    CHECK(weyl_dim(lambda, d) == make_integer(count));
                }
            }
        }
    }
}

TEST_CASE("brute_force_plethysm") {
    CHECK(brute_force_plethysm(P({4}), 2, 2, 2) == 1);
    CHECK(brute_force_plethysm(P({2, 2}), 2, 2, 2) == 1);
    CHECK(brute_force_plethysm(P({2, 1, 1}), 2, 2, 3) == 0);
    CHECK_THROWS_AS(brute_force_plethysm(P({2, 1, 1}), 2, 2, 2), domain_error);
    CHECK_THROWS_AS(brute_force_plethysm(P({12}), 3, 4, 3), resource_error);

    SUBCASE("agrees with the character route for km <= 6") {
        for (int k = 1; k <= 6; ++k)
            for (int m = 1; k * m <= 6; ++m)
                for (const Partition& lambda : enumerate_partitions(k * m, k * m))
                    CHECK(plethysm_coefficient(lambda, k, m) ==
                          brute_force_plethysm(lambda, k, m, k * m));
    }
}

TEST_CASE("dimension identity for km <= 8 at d <= 3 (acceptance runs 12)") {
    for (int d = 1; d <= 3; ++d) {
        for (int k = 1; k <= 8; ++k) {
            for (int m = 1; k * m <= 8; ++m) {
                Integer total = 0;
                for (const Partition& lambda : enumerate_partitions(k * m, k))
                    total += make_integer(plethysm_coefficient(lambda, k, m)) * weyl_dim(lambda, d);
                const Integer inner_dim = binomial(m + d - 1, d - 1);
                CHECK(total == binomial(inner_dim.get_si() + k - 1, k));
            }
        }
    }
}

TEST_CASE("even components occur: every 2*lambda shows up in h_k[h_2n], kn <= 6") {
    for (int k = 1; k <= 6; ++k)
        for (int n = 1; k * n <= 6; ++n)
            for (const Partition& lambda : enumerate_partitions(k * n, k))
                CHECK(schur_coefficient(plethysm_h(k, 2 * n), scale(lambda, 2)) >= 1);
}
