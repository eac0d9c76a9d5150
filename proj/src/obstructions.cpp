#include "cosmetic/obstructions.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace cosmetic {

namespace {

// The unit group is enumerated explicitly, so the modulus has to stay small.
constexpr std::uint64_t kMaxModulus = 100'000'000;

void require_modulus(std::uint64_t p) {
    if (p < 1) {
        throw std::invalid_argument("modulus must be >= 1");
    }
    if (p > kMaxModulus) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " too large for unit enumeration");
    }
}

std::uint64_t residue(const Integer& x, std::uint64_t p) {
    return floor_mod(x, Integer(static_cast<unsigned long>(p))).get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    Integer inv;
    const Integer ia(static_cast<unsigned long>(a));
    const Integer ip(static_cast<unsigned long>(p));
    if (mpz_invert(inv.get_mpz_t(), ia.get_mpz_t(), ip.get_mpz_t()) == 0) {
        throw std::invalid_argument(std::to_string(a) + " is not a unit mod " + std::to_string(p));
    }
    return inv.get_ui();
}

// Smallest unit u with u^2 = target (mod p).
std::optional<std::uint64_t> smallest_unit_root(std::uint64_t target, std::uint64_t p) {
    for (std::uint64_t u = 1; u < p; ++u) {
        if (std::gcd(u, p) == 1 && mul_mod(u, u, p) == target) {
            return u;
        }
    }
    return std::nullopt;
}

constexpr std::array kGeometryNames{
    std::pair{GeometryClass::reducible, std::string_view("reducible")},
    std::pair{GeometryClass::seifert_toroidal, std::string_view("seifert_toroidal")},
    std::pair{GeometryClass::small_seifert_infinite, std::string_view("small_seifert_infinite")},
    std::pair{GeometryClass::toroidal_irreducible_non_seifert, std::string_view("toroidal_irreducible_non_seifert")},
    std::pair{GeometryClass::finite_pi1, std::string_view("finite_pi1")},
    std::pair{GeometryClass::exceptional_generic, std::string_view("exceptional_generic")},
};

}  // namespace

std::string_view to_string(GeometryClass g) {
    for (const auto& [tag, name] : kGeometryNames) {
        if (tag == g) {
            return name;
        }
    }
    return "unknown";
}

GeometryClass parse_geometry_class(std::string_view name) {
    for (const auto& [tag, tag_name] : kGeometryNames) {
        if (tag_name == name) {
            return tag;
        }
    }
    throw std::invalid_argument("unknown geometry class '" + std::string(name) + "'");
}

std::set<std::uint64_t> unit_squares_mod(std::uint64_t p) {
    require_modulus(p);
    if (p == 1) {
        return {0};
    }
    std::set<std::uint64_t> squares;
    for (std::uint64_t u = 1; u < p; ++u) {
        if (std::gcd(u, p) == 1) {
            squares.insert(mul_mod(u, u, p));
        }
    }
    return squares;
}

std::optional<std::uint64_t> linking_unit(std::uint64_t p, const Integer& q, const Integer& q2) {
    require_modulus(p);
    if (p == 1) {
        return 0;
    }
    const std::uint64_t r = residue(q, p);
    const std::uint64_t r2 = residue(q2, p);
    if (r > r2) {
        const auto v = linking_unit(p, q2, q);
        if (!v) {
            return std::nullopt;
        }
        return inverse_mod(*v, p);
    }
    // q = q2 * u^2  <=>  u^2 = q * q2^{-1}.
    return smallest_unit_root(mul_mod(r, inverse_mod(r2, p), p), p);
}

ObstructionVerdict linking_congruence(std::uint64_t p, const Integer& q, const Integer& q2) {
    require_modulus(p);
    const Integer ip(static_cast<unsigned long>(p));
    if (gcd(q, ip) != 1 || gcd(q2, ip) != 1) {
        throw std::invalid_argument("linking congruence needs gcd(q, p) = gcd(q', p) = 1");
    }
    const std::string relation = to_string(q) + " = " + to_string(q2) + " * u^2 (mod " + std::to_string(p) + ")";
    if (p == 1) {
        return {"congruence", true, "u = 0: every congruence holds mod 1"};
    }
    if (const auto u = linking_unit(p, q, q2)) {
        return {"congruence", true, "u = " + std::to_string(*u) + ": " + relation};
    }
    std::string squares;
    for (const auto s : unit_squares_mod(p)) {
        squares += (squares.empty() ? "" : ",") + std::to_string(s);
    }
    return {"congruence", false, "no unit u with " + relation + "; unit squares mod " + std::to_string(p) + " = {" +
                                     squares + "}"};
}

unsigned distance_cap(GeometryClass g) {
    switch (g) {
        case GeometryClass::reducible:
            return 1;  // Gordon-Luecke
        case GeometryClass::seifert_toroidal:
            return 1;
        case GeometryClass::toroidal_irreducible_non_seifert:
            return 3;
        case GeometryClass::finite_pi1:
            return 3;  // distance between finite fillings
        case GeometryClass::small_seifert_infinite:
        case GeometryClass::exceptional_generic:
            return 8;  // Lackenby-Meyerhoff
    }
    throw std::invalid_argument("invalid geometry class");
}

ObstructionVerdict parity_filter(const Integer& p, const Integer& q, const Integer& q2) {
    const Integer g1 = gcd(q, p);
    const Integer g2 = gcd(q2, p);
    if (g1 == 1 && g2 == 1) {
        return {"parity", true, std::nullopt};
    }
    const Integer& bad_q = g1 != 1 ? q : q2;
    const Integer& bad_g = g1 != 1 ? g1 : g2;
    return {"parity", false,
            "gcd(" + to_string(bad_q) + "," + to_string(p) + ") = " + to_string(bad_g) + ": " + to_string(p) + "/" +
                to_string(bad_q) + " is not a slope"};
}

ObstructionVerdict distance_filter(const Integer& p, const Integer& gap, unsigned cap) {
    const Integer distance = abs(Integer(p * gap));
    const std::string text = "Delta = " + to_string(p) + "*" + to_string(abs(gap)) + " = " + to_string(distance);
    if (distance <= cap) {
        return {"distance", true, text + " <= " + std::to_string(cap)};
    }
    return {"distance", false, text + " > " + std::to_string(cap)};
}

}  // namespace cosmetic
