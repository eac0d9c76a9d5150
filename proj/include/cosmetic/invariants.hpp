#pragma once

// Casson invariants of lens spaces and surgeries, and the Alexander-polynomial
// data the cosmetic-surgery obstructions consume.
//
// Orientation convention: lambda(L(p,q)) = -s(q,p)/2. Sources that orient
// L(p,q) the other way get the opposite sign. Every formula in this module
// assumes this convention; do not mix values across conventions.

#include "cosmetic/rational.hpp"
#include "cosmetic/slope.hpp"
#include "cosmetic/verdict.hpp"

#include <map>
#include <string_view>

namespace cosmetic {

/// L(p, q) with p >= 1 and q reduced into [1, p-1] (q = 0 when p = 1, S^3).
class LensSpace {
public:
    /// Throws std::invalid_argument if p < 1 or gcd(p, q) != 1.
    LensSpace(const Integer& p, const Integer& q);

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }

    std::string to_string() const;

    friend bool operator==(const LensSpace&, const LensSpace&) = default;

private:
    Integer p_;
    Integer q_;
};

/// Symmetric Laurent polynomial with value 1 at t = 1. Input with value -1
/// is negated, so {"-1":1, "0":-3, "1":1} is the figure-eight polynomial.
class AlexanderPolynomial {
public:
    /// Throws std::invalid_argument unless a_k = a_{-k} and sum a_k = +-1.
    explicit AlexanderPolynomial(std::map<long, Integer> coefficients);

    /// Reads {"-1": 1, "0": -3, "1": 1}. Exponents are JSON object keys.
    static AlexanderPolynomial from_json(std::string_view text);

    const std::map<long, Integer>& coefficients() const { return coefficients_; }

private:
    std::map<long, Integer> coefficients_;
};

struct SurgeryCassonInput {
    Rational lambda_y;  // Casson invariant of the ambient homology sphere
    Integer delta2;     // second derivative of the Alexander polynomial at 1
    Slope slope;        // p/q with p > 0
};

Rational casson_lens(const LensSpace& lens);

/// lambda(Y) + lambda(L(p,q)) + (q / 2p) * delta2.
/// Throws std::invalid_argument for slopes with p = 0 (infinite H_1).
Rational casson_surgery(const SurgeryCassonInput& in);

/// sum_k k (k - 1) a_k. Always even on valid input.
Integer alexander_second_derivative_at_1(const AlexanderPolynomial& poly);

/// Orientation-preserving cosmetic surgeries force delta2 = 0.
ObstructionVerdict alexander_obstruction(const Integer& delta2);

/// Fails iff s(q, p) != s(q2, p), so Y_K(p/q) and Y_K(p/q2) cannot be
/// orientation-preservingly homeomorphic. Throws on non-coprime input.
ObstructionVerdict cosmetic_dedekind_obstruction(const Integer& p, const Integer& q, const Integer& q2);

}  // namespace cosmetic
