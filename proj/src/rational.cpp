#include "cosmetic/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cosmetic {

Integer parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw std::invalid_argument("not an integer: '" + s + "'");
        }
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return Integer(s, 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer floor_mod(const Integer& x, const Integer& m) {
    if (m == 0) {
        throw std::domain_error("modulus is zero");
    }
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (r < 0) {
        r += abs(m);
    }
    return r;
}

Integer floor_div(const Integer& x, const Integer& m) {
    if (m == 0) {
        throw std::domain_error("division by zero");
    }
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return q;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

int sign(const Integer& value) { return sgn(value); }

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Integer Rational::floor() const { return floor_div(value_.get_num(), value_.get_den()); }

std::string Rational::to_string() const {
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.value_ == 0) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace cosmetic
