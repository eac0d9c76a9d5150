#include "cosmetic/homology.hpp"

#include <stdexcept>

namespace cosmetic {

Integer h1_order_watson(const WatsonData& data, const Slope& s) {
    if (data.c_m < 1) {
        throw std::invalid_argument("Watson constant c_M must be >= 1");
    }
    return data.c_m * slope_distance(reframe_slope(s, data.shift), Slope::longitude());
}

Integer link_surgery_h1(const LinkSurgeryData& data) {
    const Integer& a1 = data.framing1.a();
    const Integer& a2 = data.framing2.a();
    const Integer off1 = data.framing1.b() * data.linking_number;
    const Integer off2 = data.framing2.b() * data.linking_number;
    return abs(Integer(a1 * a2 - off1 * off2));
}

std::set<Integer> solve_framing_shift(const Integer& lens_order) {
    return solve_framing_shift(lens_order, canonicalize_slope(-1, 1));
}

std::set<Integer> solve_framing_shift(const Integer& lens_order, const Slope& lens_slope) {
    if (lens_order < 0) {
        throw std::invalid_argument("homology order must be >= 0");
    }
    const Integer& a = lens_slope.a();
    const Integer& b = lens_slope.b();
    if (b == 0) {
        if (lens_order == 1) {
            throw std::invalid_argument("the meridian filling does not determine the framing shift");
        }
        return {};
    }
    std::set<Integer> shifts;
    for (const Integer& target : {lens_order, Integer(-lens_order)}) {
        const Integer numerator = target - a;
        if (floor_mod(numerator, b) == 0) {
            shifts.insert(numerator / b);
        }
    }
    return shifts;
}

std::set<Integer> deduced_filling_orders(const std::set<Integer>& shift_candidates, const Slope& s) {
    std::set<Integer> orders;
    for (const auto& shift : shift_candidates) {
        orders.insert(h1_order_watson(WatsonData{1, FramingShift{shift}}, s));
    }
    return orders;
}

}  // namespace cosmetic
