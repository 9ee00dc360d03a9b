#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plethy/characters.hpp"
#include "plethy/error.hpp"
#include "plethy/gct.hpp"
#include "plethy/symfunc.hpp"

using namespace plethy;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Literal restatement of the two conditions, used to cross-check the
// witness scan including its "first in enumeration order" promise.
bool conditions_hold(const Partition& lambda, const Partition& mu, const Partition& nu,
                     int d, int ell) {
    if (plethysm_coefficient(mu, d, ell) < 1 || plethysm_coefficient(nu, d, ell) < 1) return false;
    return (mu == nu) ? symmetric_kronecker(lambda, mu) > 0 : kronecker(lambda, mu, nu) > 0;
}

}  // namespace

TEST_CASE("single-row lambda occurs with the trivial witness") {
    const auto witness = perorbit_occurs(GctQuery{P({4}), 2, 2});
    REQUIRE(witness.has_value());
    CHECK(witness->mu == P({4}));
    CHECK(witness->nu == P({4}));
}

TEST_CASE("the sign column does not occur at d=2, ell=2") {
    CHECK_FALSE(perorbit_occurs(GctQuery{P({1, 1, 1, 1}), 2, 2}).has_value());
}

TEST_CASE("domain and resource errors") {
    CHECK_THROWS_AS(perorbit_occurs(GctQuery{P({3, 2}), 2, 2}), domain_error);
    CHECK_THROWS_AS(perorbit_occurs(GctQuery{P({12}), 3, 4}), resource_error);  // 12 > 10
    CHECK_THROWS_AS(perorbit_occurs(GctQuery{P({4}), 2, 2}, 0), resource_error);
}

TEST_CASE("witness agrees with a direct exhaustive evaluation") {
    for (int d = 2; d <= 3; ++d) {
        const int ell = 2;
        for (const Partition& lambda : enumerate_partitions(ell * d, ell * d)) {
            const auto witness = perorbit_occurs(GctQuery{lambda, d, ell});
            bool any = false;
            const auto cands = enumerate_partitions(ell * d, d);
            for (size_t i = 0; i < cands.size() && !any; ++i)
                for (size_t j = i; j < cands.size() && !any; ++j)
                    if (conditions_hold(lambda, cands[i], cands[j], d, ell)) {
                        any = true;
                        REQUIRE(witness.has_value());
                        CHECK(witness->mu == cands[i]);  // first in enumeration order
                        CHECK(witness->nu == cands[j]);
                    }
            CHECK(witness.has_value() == any);
        }
    }
}

TEST_CASE("witnesses never disappear with a larger search limit") {
    const GctQuery query{P({4}), 2, 2};
    const auto small = perorbit_occurs(query, 10);
    const auto large = perorbit_occurs(query, 1'000'000);
    REQUIRE(small.has_value());
    REQUIRE(large.has_value());
    CHECK(small->mu == large->mu);
    CHECK(small->nu == large->nu);
}

TEST_CASE("even partitions always satisfy condition 2") {
    // scaled partitions 2*kappa occur in Sym^d(Sym^2) by the certified sweep
    for (int d = 2; d <= 3; ++d)
        for (const Partition& kappa : enumerate_partitions(d, d))
            CHECK(plethysm_coefficient(scale(kappa, 2), d, 2) >= 1);
}
