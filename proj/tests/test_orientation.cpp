#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stunted/orientation.hpp"

using namespace stunted;

TEST_CASE("nu_p basics") {
    CHECK(nu_p(8, 2) == 3);
    CHECK(nu_p(10, 3) == 0);
    CHECK(nu_p(50, 5) == 2);
    CHECK(nu_p(1, 7) == 0);
    CHECK_THROWS_AS(nu_p(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(nu_p(-4, 2), std::invalid_argument);
    CHECK_THROWS_AS(nu_p(10, 4), std::invalid_argument);
}

TEST_CASE("nu_p is additive on products") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> dist(1, 1000000);
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int trial = 0; trial < 50; ++trial) {
            long long a = dist(rng), b = dist(rng);
            CHECK(nu_p(a * b, p) == nu_p(a, p) + nu_p(b, p));
        }
}

TEST_CASE("sphere valuation formula") {
    CHECK(theta_sphere_valuation(2, 1) == 1);
    CHECK(theta_sphere_valuation(2, 3) == 3);  // max{1, 2+1, 3}
    CHECK(theta_sphere_valuation(5, 3) == 0);  // p > n + 1 branch
    CHECK(theta_sphere_valuation(3, 5) == 2);  // max{1, 2} over r <= 2
    CHECK(theta_sphere_valuation(3, 1) == 0);  // p > n + 1
    CHECK(theta_sphere_valuation(3, 2) == 1);  // r <= 1
    CHECK_THROWS_AS(theta_sphere_valuation(2, 0), std::invalid_argument);
}

TEST_CASE("sphere valuation is nondecreasing in n") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        long long prev = 0;
        for (long long n = 1; n <= 120; ++n) {
            long long v = theta_sphere_valuation(p, n);
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("eo_bound evaluates the identity at beta_hat - 1") {
    auto rep = eo_bound(2, 1);
    CHECK(rep.n == 1);
    CHECK(rep.sphere_valuation == 1);
    CHECK(rep.bound_order_exponent == 1);
    CHECK(power_decimal(rep.p, rep.bound_order_exponent) == "2");

    rep = eo_bound(2, 2);
    CHECK(rep.n == 3);
    CHECK(rep.sphere_valuation == 3);  // max{1, 3, 3}
    CHECK(power_decimal(2, rep.bound_order_exponent) == "8");

    rep = eo_bound(3, 1);
    CHECK(rep.n == 5);
    CHECK(rep.sphere_valuation == 2);
    CHECK(power_decimal(3, rep.bound_order_exponent) == "9");

    rep = eo_bound(5, 1);
    CHECK(rep.n == 19);
    CHECK(rep.sphere_valuation == 4);

    for (auto& r : {eo_bound(2, 3), eo_bound(7, 1), eo_bound(3, 2)})
        CHECK(r.conjecture_valuation <= r.bound_valuation);
}

TEST_CASE("known orders table") {
    auto t = known_orders_report(3, 1);
    CHECK(t.bound_valuation == 2);
    REQUIRE(t.known_valuation.has_value());
    CHECK(*t.known_valuation == 1);
    CHECK(t.conjecture_valuation == 1);
    CHECK(t.divisibility_ok);

    t = known_orders_report(2, 3);
    CHECK(t.bound_valuation == 7);
    REQUIRE(t.known_valuation.has_value());
    CHECK(*t.known_valuation == 3);
    CHECK(t.conjecture_valuation == 3);
    CHECK(t.divisibility_ok);

    t = known_orders_report(5, 1);
    CHECK(t.bound_valuation == 4);
    REQUIRE(t.known_valuation.has_value());
    CHECK(*t.known_valuation == 1);
    CHECK(t.divisibility_ok);

    t = known_orders_report(2, 2);
    CHECK(t.bound_valuation == 3);
    CHECK(*t.known_valuation == 2);
    CHECK(t.divisibility_ok);

    // No exact comparison value at odd primes with k > 1.
    t = known_orders_report(7, 2);
    CHECK_FALSE(t.known_valuation.has_value());
    CHECK(t.divisibility_ok);

    t = known_orders_report(5, 1, 19);
    REQUIRE(t.override_sphere_valuation.has_value());
    CHECK(*t.override_sphere_valuation == 4);
}

TEST_CASE("decimal rendering of p^e") {
    CHECK(power_decimal(2, 0) == "1");
    CHECK(power_decimal(2, 1) == "2");
    CHECK(power_decimal(2, 7) == "128");
    CHECK(power_decimal(3, 2) == "9");
    CHECK(power_decimal(2, 30) == "1073741824");
    CHECK(power_decimal(2, 63) == "9223372036854775808");
    // The order bound at (2, 6) needs 63 bits; at (2, 7) it no longer fits a
    // machine word and must still render exactly.
    CHECK(power_decimal(2, 127) == "170141183460469231731687303715884105728");
}

TEST_CASE("divisibility chain p^k | p^(p^k - 1) for k up to 6") {
    for (std::uint32_t p : {2u, 3u})
        for (std::uint32_t k = 1; k <= 6; ++k) {
            auto t = known_orders_report(p, k);
            CHECK(t.conjecture_valuation <= t.bound_valuation);
        }
}
