#include <doctest.h>

#include "supercong/divisibility.hpp"
#include "supercong/error.hpp"
#include "supercong/identities.hpp"
#include "supercong/sequences.hpp"

using namespace supercong;

TEST_CASE("thm3_value examples")
{
    CHECK(thm3_value(1, 1) == Integer(1));
    CHECK(thm3_value(2, 1) == Integer(10));
    CHECK(thm3_value(2, -1) == Integer(2));
    CHECK_THROWS_AS(thm3_value(0, 1), Error);
    CHECK_THROWS_AS(thm3_value(3, 2), Error);
}

TEST_CASE("normalized sums are positive integers and match the Franel forms")
{
    for (std::int64_t n = 1; n <= 60; ++n) {
        for (const int sign : {1, -1}) {
            const auto s = evaluate_thm3(n, sign);
            REQUIRE(s.holds());
            const auto e = check_e_full(sign > 0 ? IdentityId::e1 : IdentityId::e2, n);
            REQUIRE(Rational(thm3_value(n, sign)) == e.rhs);
        }
    }
}

TEST_CASE("a fractional normalized sum is reported, not floored")
{
    // n = 3, base 8: 64 + 3*4*8 + 5*28 = 300
    const auto s = evaluate_thm3(3, 1);
    CHECK(s.sum == Integer(300));
    CHECK(s.value == Rational(100));
    CHECK(s.integral());
    const NormalizedDombSum fake{3, 1, Integer(301), Rational(Integer(301), Integer(3))};
    CHECK_FALSE(fake.holds());
}

TEST_CASE("ratio monotonicity")
{
    const auto small = check_ratio_monotone(3);
    CHECK(small.holds);
    CHECK(Rational(domb(1), domb(0)) == Rational(4));
    CHECK(Rational(domb(2), domb(1)) == Rational(7));
    CHECK(Rational(domb(3), domb(2)) == Rational(Integer(64), Integer(7)));
    CHECK(check_ratio_monotone(50).holds);
    const auto big = check_ratio_monotone(200);
    CHECK(big.holds);
    CHECK_FALSE(big.first_failure.has_value());
    CHECK(big.ratio_comparisons == 200);
    CHECK(big.bound_comparisons == 199);
    CHECK(big.weighted_comparisons == 201);
    // a_0 = 1 < a_1 = 3/2
    CHECK(Rational(Integer(3) * domb(1), Integer(8)) == Rational(Integer(3), Integer(2)));
    CHECK_THROWS_AS(check_ratio_monotone(2), Error);
}

TEST_CASE("alternating positivity")
{
    CHECK(alternating_domb_sum(1) == Integer(1));
    CHECK(alternating_domb_sum(2) == Integer(4));
    CHECK(check_alternating_positivity(6));
    for (std::int64_t n = 1; n <= 100; ++n) {
        REQUIRE(check_alternating_positivity(n));
    }
}
