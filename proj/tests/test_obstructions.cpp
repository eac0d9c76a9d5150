#include <doctest.h>

#include "cosmetic/obstructions.hpp"
#include "oracles.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

using namespace cosmetic;

TEST_CASE("unit_squares_mod") {
    CHECK(unit_squares_mod(7) == std::set<std::uint64_t>{1, 2, 4});
    CHECK(unit_squares_mod(5) == std::set<std::uint64_t>{1, 4});
    CHECK(unit_squares_mod(4) == std::set<std::uint64_t>{1});
    CHECK(unit_squares_mod(3) == std::set<std::uint64_t>{1});
    CHECK(unit_squares_mod(2) == std::set<std::uint64_t>{1});
    CHECK(unit_squares_mod(1) == std::set<std::uint64_t>{0});
    CHECK(unit_squares_mod(8) == std::set<std::uint64_t>{1});
    CHECK_THROWS_AS(unit_squares_mod(0), std::invalid_argument);
}

TEST_CASE("unit squares form a subgroup") {
    for (std::uint64_t p = 1; p <= 200; ++p) {
        const auto squares = unit_squares_mod(p);
        for (const auto a : squares) {
            CHECK(std::gcd(a, p) == 1);
            for (const auto b : squares) {
                CHECK(squares.contains(a * b % p));
            }
        }
    }
}

TEST_CASE("half the units of an odd prime are squares") {
    for (std::uint64_t p = 3; p < 200; ++p) {
        if (oracle::is_prime(static_cast<std::int64_t>(p))) {
            CHECK(unit_squares_mod(p).size() == (p - 1) / 2);
        }
    }
}

TEST_CASE("linking_congruence examples") {
    const auto v = linking_congruence(5, 2, 3);
    CHECK(v.passed);
    REQUIRE(v.witness);
    CHECK(v.witness->starts_with("u = 2"));
    CHECK(linking_unit(5, 2, 3) == 2u);

    for (long q = -10; q <= 10; ++q) {
        if (q % 3 != 0 && (q + 1) % 3 != 0) {
            const auto w = linking_congruence(3, q, q + 1);
            CHECK_FALSE(w.passed);
            CHECK(w.witness.has_value());
        }
        CHECK(linking_congruence(1, q, q + 5).passed);
    }
    CHECK_THROWS_AS(linking_congruence(4, 2, 3), std::invalid_argument);
}

TEST_CASE("linking_congruence agrees with exhaustive search, p <= 50") {
    for (std::int64_t p = 1; p <= 50; ++p) {
        for (std::int64_t q = 0; q < p; ++q) {
            for (std::int64_t q2 = 0; q2 < p; ++q2) {
                if (std::gcd(q, p) != 1 || std::gcd(q2, p) != 1) {
                    continue;
                }
                const bool expected = oracle::congruent_by_search(p, q, q2);
                CHECK(linking_congruence(static_cast<std::uint64_t>(p), static_cast<long>(q),
                                         static_cast<long>(q2))
                          .passed == expected);
            }
        }
    }
}

TEST_CASE("congruence witnesses are inverse under swapping, p <= 50") {
    for (std::uint64_t p = 2; p <= 50; ++p) {
        for (std::uint64_t q = 0; q < p; ++q) {
            for (std::uint64_t q2 = 0; q2 < p; ++q2) {
                if (std::gcd(q, p) != 1 || std::gcd(q2, p) != 1) {
                    continue;
                }
                const auto u = linking_unit(p, static_cast<unsigned long>(q), static_cast<unsigned long>(q2));
                const auto v = linking_unit(p, static_cast<unsigned long>(q2), static_cast<unsigned long>(q));
                REQUIRE(u.has_value() == v.has_value());
                if (u) {
                    CHECK((q2 * *u % p) * *u % p == q);
                    CHECK((q * *v % p) * *v % p == q2);
                    CHECK(*u * *v % p == 1);
                }
            }
        }
    }
}

TEST_CASE("witnesses reduce arbitrary representatives") {
    const Integer big = parse_integer("100000000000000000000");  // 0 mod 5
    CHECK(linking_unit(5, big + 2, big + 3) == 2u);
    CHECK(linking_unit(5, -3, -2) == linking_unit(5, 2, 3));
}

TEST_CASE("distance_cap") {
    CHECK(distance_cap(GeometryClass::reducible) == 1);
    CHECK(distance_cap(GeometryClass::seifert_toroidal) == 1);
    CHECK(distance_cap(GeometryClass::toroidal_irreducible_non_seifert) == 3);
    CHECK(distance_cap(GeometryClass::finite_pi1) == 3);
    CHECK(distance_cap(GeometryClass::small_seifert_infinite) == 8);
    CHECK(distance_cap(GeometryClass::exceptional_generic) == 8);
}

TEST_CASE("geometry class names round-trip") {
    for (const auto g : {GeometryClass::reducible, GeometryClass::seifert_toroidal,
                         GeometryClass::small_seifert_infinite, GeometryClass::toroidal_irreducible_non_seifert,
                         GeometryClass::finite_pi1, GeometryClass::exceptional_generic}) {
        CHECK(parse_geometry_class(to_string(g)) == g);
    }
    CHECK_THROWS_AS(parse_geometry_class("hyperbolic"), std::invalid_argument);
}

TEST_CASE("parity_filter") {
    for (long q = -20; q <= 20; ++q) {
        CHECK_FALSE(parity_filter(6, q, q + 1).passed);
        CHECK_FALSE(parity_filter(8, q, q + 1).passed);
    }
    CHECK(parity_filter(2, 1, 3).passed);
    const auto v = parity_filter(8, 3, 4);
    CHECK_FALSE(v.passed);
    REQUIRE(v.witness);
    CHECK(v.witness->starts_with("gcd(4,8) = 4"));
}

TEST_CASE("distance_filter") {
    CHECK(distance_filter(2, 4).passed);
    CHECK_FALSE(distance_filter(3, 3).passed);
    CHECK_FALSE(distance_filter(1, 4, 3).passed);
    CHECK(distance_filter(1, 3, 3).passed);
}
