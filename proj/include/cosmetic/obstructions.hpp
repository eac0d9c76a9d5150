#pragma once

// Arithmetic filters on a pair of surgery slopes p/q, p/q2 with the same
// numerator p > 0:
//
//   parity_filter       both coefficients coprime to p
//   linking_congruence  q = q2 * u^2 (mod p) for some unit u, from the
//                       isomorphism of linking forms
//   distance_cap        the largest slope distance a pair of fillings of a
//                       given geometric type may have
//
// p = 1 passes every congruence vacuously.

#include "cosmetic/rational.hpp"
#include "cosmetic/verdict.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace cosmetic {

enum class GeometryClass {
    reducible,
    seifert_toroidal,
    small_seifert_infinite,
    toroidal_irreducible_non_seifert,
    finite_pi1,
    exceptional_generic,
};

std::string_view to_string(GeometryClass g);

/// Inverse of to_string. Throws std::invalid_argument.
GeometryClass parse_geometry_class(std::string_view name);

/// { u^2 mod p : gcd(u, p) = 1 }. Returns {0} for p = 1.
/// Throws std::invalid_argument for p < 1.
std::set<std::uint64_t> unit_squares_mod(std::uint64_t p);

/// Unit u in [1, p) with q = q2 * u^2 (mod p), or nullopt.
///
/// The choice is canonical: swapping q and q2 returns u^{-1} mod p. When
/// both are admissible, the smallest root is taken for the ordered pair with
/// the smaller residue of q and the other direction gets its inverse.
std::optional<std::uint64_t> linking_unit(std::uint64_t p, const Integer& q, const Integer& q2);

/// Throws std::invalid_argument if gcd(q, p) != 1 or gcd(q2, p) != 1.
ObstructionVerdict linking_congruence(std::uint64_t p, const Integer& q, const Integer& q2);

/// Hard-coded caps from the cited classification theorems:
/// reducible 1, Seifert toroidal 1, toroidal non-Seifert 3, finite pi_1 3,
/// small Seifert and generic exceptional 8.
unsigned distance_cap(GeometryClass g);

/// Fails iff gcd(q, p) != 1 or gcd(q2, p) != 1.
ObstructionVerdict parity_filter(const Integer& p, const Integer& q, const Integer& q2);

/// Passes iff p * |q2 - q| <= cap, the bound on exceptional slope distance.
ObstructionVerdict distance_filter(const Integer& p, const Integer& gap, unsigned cap = 8);

}  // namespace cosmetic
