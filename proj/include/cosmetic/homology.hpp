#pragma once

// First homology orders of Dehn fillings.
//
// Orders are non-negative integers; 0 stands for infinite H_1.

#include "cosmetic/rational.hpp"
#include "cosmetic/slope.hpp"

#include <set>

namespace cosmetic {

/// |H_1(M(s))| = c_M * Delta(s, lambda_M) for a manifold with one torus
/// boundary, where c_M = l * a (order of the rational longitude times the
/// torsion of H_1(M)) and `shift` converts the slope's framing to
/// {mu, lambda_M}.
struct WatsonData {
    Integer c_m = 1;
    FramingShift shift;
};

/// Throws std::invalid_argument if c_m < 1.
Integer h1_order_watson(const WatsonData& data, const Slope& s);

/// Surgery on a two-component link with rational framings a_i/b_i.
///
/// For linking number 0 this is the usual |a_1 a_2|. For nonzero linking
/// number the off-diagonal entries are taken to be b_i * lk, which is an
/// extrapolation from the lk = 0 case and should be treated as such.
struct LinkSurgeryData {
    Slope framing1;
    Slope framing2;
    Integer linking_number = 0;
};

/// |det [[a_1, b_1 lk], [b_2 lk, a_2]]|.
Integer link_surgery_h1(const LinkSurgeryData& data);

/// Shifts p (with l = a = 1) for which the -1 slope in the shifted framing
/// fills to homology of the given order: { p : |p - 1| = lens_order }.
std::set<Integer> solve_framing_shift(const Integer& lens_order);

/// General form: { p : |a + b p| = lens_order } for the lens slope a/b, again
/// with c_M = 1. The meridian 1/0 never depends on the shift and yields either
/// no solution or every shift; the latter throws std::invalid_argument.
std::set<Integer> solve_framing_shift(const Integer& lens_order, const Slope& lens_slope);

/// { h1_order_watson({1, p}, s) : p in shift_candidates }.
std::set<Integer> deduced_filling_orders(const std::set<Integer>& shift_candidates, const Slope& s);

}  // namespace cosmetic
