#include <doctest.h>

#include "cosmetic/homology.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

using namespace cosmetic;

namespace {

Slope slope(long a, long b) { return canonicalize_slope(a, b); }

std::set<Integer> ints(std::initializer_list<long> values) {
    std::set<Integer> out;
    for (const long v : values) {
        out.insert(v);
    }
    return out;
}

}  // namespace

TEST_CASE("h1_order_watson") {
    for (long p = -12; p <= 12; ++p) {
        CHECK(h1_order_watson({1, FramingShift{p}}, slope(-1, 1)) == std::abs(p - 1));
    }
    CHECK(h1_order_watson({1, FramingShift{0}}, Slope::longitude()) == 0);
    CHECK(h1_order_watson({2, FramingShift{0}}, slope(3, 1)) == 6);
    CHECK(h1_order_watson({1, FramingShift{17}}, Slope::meridian()) == 1);
    CHECK_THROWS_AS(h1_order_watson({0, FramingShift{0}}, slope(3, 1)), std::invalid_argument);
}

TEST_CASE("link_surgery_h1") {
    for (long a = -20; a <= 20; ++a) {
        for (long b : {1L, 3L, 7L}) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            const Slope t = slope(a, b);
            CHECK(link_surgery_h1({slope(2, 1), t, 0}) == 2 * std::abs(a));
            CHECK(link_surgery_h1({slope(-5, 2), t, 0}) == 5 * std::abs(a));
            CHECK(link_surgery_h1({slope(-5, 1), t, 0}) == 5 * std::abs(a));
        }
    }
    CHECK(link_surgery_h1({slope(1, 1), slope(1, 1), 0}) == 1);
    // Hopf-like linking: |a1 a2 - b1 b2 lk^2|
    CHECK(link_surgery_h1({slope(0, 1), slope(0, 1), 1}) == 1);
    CHECK(link_surgery_h1({slope(3, 2), slope(5, 1), 2}) == 7);
}

TEST_CASE("link_surgery_h1 symmetry and lk = 0 formula") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coeff(-30, 30);
    for (int trial = 0; trial < 1000; ++trial) {
        long a1 = coeff(rng), b1 = coeff(rng), a2 = coeff(rng), b2 = coeff(rng);
        if ((a1 == 0 && b1 == 0) || (a2 == 0 && b2 == 0)) {
            continue;
        }
        const Slope f1 = slope(a1, b1);
        const Slope f2 = slope(a2, b2);
        const Integer lk = coeff(rng) % 4;
        CHECK(link_surgery_h1({f1, f2, lk}) == link_surgery_h1({f2, f1, lk}));
        CHECK(link_surgery_h1({f1, f2, 0}) == abs(Integer(f1.a() * f2.a())));
    }
}

TEST_CASE("solve_framing_shift") {
    CHECK(solve_framing_shift(4) == ints({5, -3}));
    CHECK(solve_framing_shift(8) == ints({9, -7}));
    CHECK(solve_framing_shift(0) == ints({1}));
    for (long n = 0; n <= 30; ++n) {
        for (const auto& p : solve_framing_shift(n)) {
            CHECK(h1_order_watson({1, FramingShift{p}}, slope(-1, 1)) == n);
        }
    }
    CHECK(solve_framing_shift(3, slope(1, 2)) == ints({1, -2}));
    CHECK(solve_framing_shift(4, slope(1, 2)).empty());
    CHECK(solve_framing_shift(4, Slope::meridian()).empty());
    CHECK_THROWS_AS(solve_framing_shift(1, Slope::meridian()), std::invalid_argument);
    CHECK_THROWS_AS(solve_framing_shift(-1), std::invalid_argument);
}

TEST_CASE("deduced_filling_orders") {
    const auto m8 = solve_framing_shift(4);
    const auto m9 = solve_framing_shift(8);
    CHECK(deduced_filling_orders(m8, Slope::longitude()) == ints({5, 3}));
    CHECK(deduced_filling_orders(m8, Slope::parse("-5/4")) == ints({15, 17}));
    CHECK(deduced_filling_orders(m9, Slope::longitude()) == ints({9, 7}));
    CHECK(deduced_filling_orders(m9, Slope::parse("-4/3")) == ints({23, 25}));

    for (const auto* text : {"0", "-5/4", "-4/3"}) {
        const auto a = deduced_filling_orders(m8, Slope::parse(text));
        const auto b = deduced_filling_orders(m9, Slope::parse(text));
        for (const auto& x : a) {
            CHECK_FALSE(b.contains(x));
        }
    }
}
