#pragma once

// Slopes on a torus boundary component.
//
// A slope is a primitive class +-(a*mu + b*lambda). We store the canonical
// representative: a > 0, or (a, b) = (0, 1). The surgery coefficient p/q is
// the slope (p, q); the meridian is 1/0 and the longitude is 0/1.

#include "cosmetic/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace cosmetic {

class Slope {
public:
    /// Meridian coefficient.
    const Integer& a() const { return a_; }
    /// Longitude coefficient.
    const Integer& b() const { return b_; }

    /// Canonical "a/b", e.g. "1/0", "5/-2", "0/1".
    std::string to_string() const;

    /// Parses "a/b" or an integer "a" (meaning a/1). Non-canonical input is
    /// canonicalized.
    static Slope parse(std::string_view text);

    static Slope meridian();
    static Slope longitude();

    friend bool operator==(const Slope&, const Slope&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Slope& s);

private:
    Slope(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}
    friend Slope canonicalize_slope(const Integer& a, const Integer& b);

    Integer a_;
    Integer b_;
};

/// Integer p with lambda_pub = p*mu + lambda_M: relates a published framing
/// to the meridian / rational-longitude basis.
struct FramingShift {
    Integer shift;

    friend bool operator==(const FramingShift&, const FramingShift&) = default;
};

/// Divides by gcd and fixes the sign. Throws std::invalid_argument on (0, 0).
Slope canonicalize_slope(const Integer& a, const Integer& b);

/// Minimal geometric intersection |a_r b_s - b_r a_s|.
Integer slope_distance(const Slope& r, const Slope& s);

/// Rewrites a slope given in a shifted framing into the {mu, lambda_M} basis:
/// (a, b) -> (a + b*shift, b).
Slope reframe_slope(const Slope& s, const FramingShift& f);

}  // namespace cosmetic
