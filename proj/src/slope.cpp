#include "cosmetic/slope.hpp"

#include <ostream>
#include <stdexcept>

namespace cosmetic {

Slope canonicalize_slope(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) {
        throw std::invalid_argument("(0, 0) is not a slope");
    }
    const Integer g = gcd(a, b);
    Integer ra = a / g;
    Integer rb = b / g;
    if (ra < 0 || (ra == 0 && rb < 0)) {
        ra = -ra;
        rb = -rb;
    }
    return Slope(std::move(ra), std::move(rb));
}

Slope Slope::meridian() { return Slope(1, 0); }

Slope Slope::longitude() { return Slope(0, 1); }

std::string Slope::to_string() const { return cosmetic::to_string(a_) + "/" + cosmetic::to_string(b_); }

Slope Slope::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return canonicalize_slope(parse_integer(text), 1);
    }
    return canonicalize_slope(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.to_string(); }

Integer slope_distance(const Slope& r, const Slope& s) {
    return abs(Integer(r.a() * s.b() - r.b() * s.a()));
}

Slope reframe_slope(const Slope& s, const FramingShift& f) {
    return canonicalize_slope(s.a() + s.b() * f.shift, s.b());
}

}  // namespace cosmetic
