#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stunted/endo.hpp"

using namespace stunted;

namespace {

EndoElement random_element(const EndoRing& ring, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(
        0, static_cast<std::uint32_t>(ring.residue_field().order() - 1));
    std::vector<std::uint32_t> d(ring.t_precision());
    for (auto& v : d)
        v = dist(rng);
    return ring.from_digits(std::move(d));
}

}  // namespace

TEST_CASE("Witt ring: Teichmuller lifts") {
    WittRing w(3, 2, 5);
    const auto& f = w.residue_field();
    for (std::uint32_t a = 0; a < f.order(); ++a) {
        const auto& t = w.teichmuller(a);
        CHECK(w.pow(t, f.order()) == t);  // tau(a)^(p^m) = tau(a)
        CHECK(w.residue(t) == a);         // tau(a) = a mod p
        for (std::uint32_t b = 0; b < f.order(); ++b)
            CHECK(w.mul(w.teichmuller(a), w.teichmuller(b)) ==
                  w.teichmuller(f.mul(a, b)));  // multiplicative
    }
}

TEST_CASE("Witt ring: Frobenius is a ring automorphism lifting x -> x^p") {
    WittRing w(3, 2, 5);
    const auto& f = w.residue_field();
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint64_t> dist(0, w.p_power_modulus() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        WittRing::Elem a{dist(rng), dist(rng)}, b{dist(rng), dist(rng)};
        CHECK(w.frobenius(w.add(a, b)) == w.add(w.frobenius(a), w.frobenius(b)));
        CHECK(w.frobenius(w.mul(a, b)) == w.mul(w.frobenius(a), w.frobenius(b)));
        CHECK(w.frobenius(w.frobenius(a)) == a);  // order m = 2
    }
    for (std::uint32_t a = 0; a < f.order(); ++a)
        CHECK(w.frobenius(w.teichmuller(a)) == w.teichmuller(f.frobenius(a)));
    CHECK(w.frobenius(w.from_int(7)) == w.from_int(7));  // fixes the prime subring
}

TEST_CASE("Witt ring: digit extraction inverts digit assembly") {
    WittRing w(2, 2, 6);
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::uint32_t> dist(0, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::uint32_t> digits(5);
        for (auto& d : digits)
            d = dist(rng);
        auto elem = w.from_teichmuller_digits(digits);
        CHECK(w.teichmuller_digits(elem, 5) == digits);
    }
}

TEST_CASE("endo ring: precision interlock and parameter checks") {
    EndoRing ring(2, 1, 8);
    CHECK(ring.witt().precision() == 9);  // ceil(8/1) + 1
    EndoRing ring2(3, 2, 6);
    CHECK(ring2.witt().precision() == 4);  // ceil(6/2) + 1
    CHECK_THROWS_AS(EndoRing(4, 1, 8), std::invalid_argument);

    EndoRing other(2, 1, 6);
    CHECK_THROWS_AS(endo_mul(ring.one(), other.one()), std::invalid_argument);
}

TEST_CASE("commutation relation: T tau(a) = tau(a^p) T") {
    for (auto [p, n, M] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{3, 2, 6},
                           {2, 2, 8},
                           {5, 4, 6}}) {
        EndoRing ring(p, n, M);
        const auto& f = ring.residue_field();
        for (std::uint32_t a = 0; a < std::min<std::uint64_t>(f.order(), 30); ++a) {
            auto lhs = endo_mul(ring.t_power(1), ring.from_digits({a}));
            auto rhs = endo_mul(ring.from_digits({f.frobenius(a)}), ring.t_power(1));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("T^n equals the digit expansion of p") {
    for (auto [p, n, M] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{2, 1, 8},
                           {3, 2, 6},
                           {2, 3, 9}}) {
        EndoRing ring(p, n, M);
        auto tn = endo_pow(ring.t_power(1), n);
        CHECK(tn == ring.from_int(p));
        CHECK(tn.digits()[n] == 1);  // single Teichmuller digit at T^n
        CHECK(t_valuation(tn).equals_fraction(1, 1));
    }
}

TEST_CASE("left multiplication by T twists digits by Frobenius") {
    std::mt19937 rng(77);
    for (auto [p, n, M] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{2, 2, 8},
                           {3, 2, 6}}) {
        EndoRing ring(p, n, M);
        const auto& f = ring.residue_field();
        for (int trial = 0; trial < 25; ++trial) {
            auto x = random_element(ring, rng);
            auto twisted = x.digits();
            for (auto& d : twisted)
                d = f.frobenius(d);
            CHECK(endo_mul(ring.t_power(1), x) ==
                  endo_mul(ring.from_digits(twisted), ring.t_power(1)));
        }
    }
}

TEST_CASE("(tau(a) T)(tau(b) T) = tau(a b^p) T^2") {
    EndoRing ring(3, 2, 6);
    const auto& f = ring.residue_field();
    for (std::uint32_t a = 1; a < 9; ++a)
        for (std::uint32_t b = 1; b < 9; ++b) {
            auto lhs = endo_mul(ring.from_digits({0, a}), ring.from_digits({0, b}));
            std::vector<std::uint32_t> expect(ring.t_precision(), 0);
            expect[2] = f.mul(a, f.frobenius(b));
            CHECK(lhs == ring.from_digits(expect));
        }
}

TEST_CASE("ring axioms to precision on random triples") {
    std::mt19937 rng(101);
    for (auto [p, n, M] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{2, 1, 8},
                           {2, 2, 8},
                           {3, 2, 6}}) {
        EndoRing ring(p, n, M);
        for (int trial = 0; trial < 100; ++trial) {
            auto x = random_element(ring, rng);
            auto y = random_element(ring, rng);
            auto z = random_element(ring, rng);
            CHECK(endo_mul(endo_mul(x, y), z) == endo_mul(x, endo_mul(y, z)));
            CHECK(endo_mul(x, endo_add(y, z)) == endo_add(endo_mul(x, y), endo_mul(x, z)));
            CHECK(endo_mul(endo_add(x, y), z) == endo_add(endo_mul(x, z), endo_mul(y, z)));
        }
    }
}

TEST_CASE("valuations") {
    EndoRing ring(3, 2, 6);
    CHECK(t_valuation(ring.from_int(3)).equals_fraction(1, 1));  // v(p) = 1
    CHECK(t_valuation(ring.t_power(1)).equals_fraction(1, 2));   // v(T) = 1/n
    CHECK(t_valuation(ring.zero()).infinite);

    std::mt19937 rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        auto x = random_element(ring, rng);
        auto y = random_element(ring, rng);
        auto vx = t_valuation(x), vy = t_valuation(y);
        if (vx.infinite || vy.infinite)
            continue;
        if (vx.num + vy.num >= ring.t_precision())
            continue;  // below the truncation horizon nothing is asserted
        auto vxy = t_valuation(endo_mul(x, y));
        CHECK_FALSE(vxy.infinite);
        CHECK(vxy.num == vx.num + vy.num);
    }
}

TEST_CASE("order-p unit at p = 2 is -1") {
    auto zeta = find_order_p_unit(2, 1, 8);
    CHECK(zeta == zeta.ring().from_int(-1));
    CHECK(zeta.digits() == std::vector<std::uint32_t>{1, 1, 1, 1, 1, 1, 1, 1});

    // At n = 2 the digit expansion of -2 lands on T-powers divisible by 2.
    auto zeta22 = find_order_p_unit(2, 2, 8);
    CHECK(zeta22 == zeta22.ring().from_int(-1));
    CHECK(zeta22.digits() == std::vector<std::uint32_t>{1, 0, 1, 0, 1, 0, 1, 0});
}

TEST_CASE("order-p unit at (3,1): leading digit solves x^4 = -1") {
    auto zeta = find_order_p_unit(3, 1, 6);
    const auto& ring = zeta.ring();
    const auto& f = ring.residue_field();
    CHECK(endo_pow(zeta, 3) == ring.one());
    CHECK_FALSE(zeta == ring.one());
    std::uint32_t a1 = tbar_coefficients(zeta)[0];
    CHECK(a1 != 0);
    CHECK(f.pow(a1, 4) == f.neg(f.one()));
    CHECK(t_valuation(endo_sub(zeta, ring.one())).equals_fraction(1, 2));

    // Deterministic search order: a second run returns the same element.
    CHECK(find_order_p_unit(3, 1, 6) == zeta);
}

TEST_CASE("find_order_p_unit validates parameters") {
    CHECK_THROWS_AS(find_order_p_unit(4, 1, 8), std::invalid_argument);
    CHECK_THROWS_AS(find_order_p_unit(2, 1, 1), std::invalid_argument);
    // Residue field beyond the exhaustive-search budget.
    CHECK_THROWS_AS(find_order_p_unit(7, 2, 30), std::invalid_argument);
}

TEST_CASE("tbar_coefficients rejects non-units") {
    EndoRing ring(2, 1, 6);
    CHECK_THROWS_AS(tbar_coefficients(ring.t_power(1)), std::invalid_argument);
}

TEST_CASE("tk lemma reports") {
    auto rep = verify_tk_lemma(2, 1, 8);
    CHECK(rep.pass());
    CHECK(rep.v_zeta_minus_1.equals_fraction(1, 1));
    for (auto d : rep.tbar_digits)
        CHECK(d == 1);

    rep = verify_tk_lemma(3, 1, 6);
    CHECK(rep.pass());
    CHECK(rep.v_zeta_minus_1.equals_fraction(1, 2));
    CHECK(rep.tbar_digits[0] != 0);

    rep = verify_tk_lemma(2, 2, 8);
    CHECK(rep.pass());
    CHECK(rep.v_zeta_minus_1.equals_fraction(1, 1));  // v(T^2) at n = 2
    CHECK(rep.tbar_digits[0] == 0);                   // a_1 = 0
    CHECK(rep.tbar_digits[1] != 0);                   // a_2 is a unit
}

TEST_CASE("the returned unit squares/cubes to one under digit arithmetic") {
    for (auto [p, k, M] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{2, 1, 8},
                           {2, 2, 8},
                           {3, 1, 6}}) {
        auto zeta = find_order_p_unit(p, k, M);
        CHECK(endo_pow(zeta, p) == zeta.ring().one());
        CHECK(t_valuation(endo_sub(zeta, zeta.ring().one()))
                  .equals_fraction(1, p - 1));  // v(zeta - 1) = 1/(p-1)
    }
}
