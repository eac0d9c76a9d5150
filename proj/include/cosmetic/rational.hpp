#pragma once

// Exact arithmetic value types shared by every module.
//
// Integer is GMP's mpz_class. Rational wraps mpq_class and keeps it in
// canonical form at all times: gcd(|num|, den) = 1 and den >= 1. Nothing in
// the library ever converts to floating point.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cosmetic {

using Integer = mpz_class;

/// Parses a decimal integer with optional leading sign.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

/// Returns x mod m in [0, |m|).
Integer floor_mod(const Integer& x, const Integer& m);

/// Floor division, rounding toward negative infinity.
Integer floor_div(const Integer& x, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);

int sign(const Integer& value);

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    /// Throws std::domain_error when the denominator is zero.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Parses "n/d" or "n". Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    Integer floor() const;

    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

}  // namespace cosmetic
