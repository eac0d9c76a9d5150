#include "cosmetic/invariants.hpp"

#include "cosmetic/dedekind.hpp"

#include <json.hpp>

#include <stdexcept>

namespace cosmetic {

LensSpace::LensSpace(const Integer& p, const Integer& q) {
    if (p < 1) {
        throw std::invalid_argument("lens space L(p, q) needs p >= 1");
    }
    if (gcd(p, q) != 1) {
        throw std::invalid_argument("lens space L(" + cosmetic::to_string(p) + ", " + cosmetic::to_string(q) +
                                    ") needs gcd(p, q) = 1");
    }
    p_ = p;
    q_ = floor_mod(q, p);
}

std::string LensSpace::to_string() const {
    return "L(" + cosmetic::to_string(p_) + "," + cosmetic::to_string(q_) + ")";
}

AlexanderPolynomial::AlexanderPolynomial(std::map<long, Integer> coefficients) {
    Integer total = 0;
    for (auto it = coefficients.begin(); it != coefficients.end();) {
        if (it->second == 0) {
            it = coefficients.erase(it);
            continue;
        }
        total += it->second;
        ++it;
    }
    for (const auto& [k, a] : coefficients) {
        const auto mirror = coefficients.find(-k);
        if (mirror == coefficients.end() || mirror->second != a) {
            throw std::invalid_argument("Alexander polynomial is not symmetric at t^" + std::to_string(k));
        }
    }
    // Defined up to sign; pick the representative with value 1 at t = 1.
    if (total == -1) {
        for (auto& [k, a] : coefficients) {
            a = -a;
        }
        total = 1;
    }
    if (total != 1) {
        throw std::invalid_argument("Alexander polynomial must evaluate to +-1 at t = 1, got " +
                                    cosmetic::to_string(total));
    }
    coefficients_ = std::move(coefficients);
}

AlexanderPolynomial AlexanderPolynomial::from_json(std::string_view text) {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_object()) {
        throw std::invalid_argument("Alexander polynomial JSON must be an object of exponent -> coefficient");
    }
    std::map<long, Integer> coefficients;
    for (const auto& [key, value] : doc.items()) {
        const Integer exponent = parse_integer(key);
        if (!exponent.fits_slong_p()) {
            throw std::invalid_argument("Alexander exponent out of range: " + key);
        }
        Integer coefficient;
        if (value.is_number_integer()) {
            coefficient = Integer(std::to_string(value.get<long long>()), 10);
        } else if (value.is_string()) {
            coefficient = parse_integer(value.get<std::string>());
        } else {
            throw std::invalid_argument("Alexander coefficient for t^" + key + " is not an integer");
        }
        if (!coefficients.emplace(exponent.get_si(), coefficient).second) {
            throw std::invalid_argument("duplicate Alexander exponent " + key);
        }
    }
    return AlexanderPolynomial(std::move(coefficients));
}

Rational casson_lens(const LensSpace& lens) { return -dedekind_sum_fast(lens.q(), lens.p()) / Rational(2); }

Rational casson_surgery(const SurgeryCassonInput& in) {
    const Integer& p = in.slope.a();
    const Integer& q = in.slope.b();
    if (p <= 0) {
        throw std::invalid_argument("Casson surgery formula needs p > 0, got slope " + in.slope.to_string());
    }
    return in.lambda_y + casson_lens(LensSpace(p, q)) + Rational(q, Integer(2 * p)) * Rational(in.delta2);
}

Integer alexander_second_derivative_at_1(const AlexanderPolynomial& poly) {
    Integer total = 0;
    for (const auto& [k, a] : poly.coefficients()) {
        total += Integer(k) * Integer(k - 1) * a;
    }
    return total;
}

ObstructionVerdict alexander_obstruction(const Integer& delta2) {
    if (delta2 == 0) {
        return {"alexander", true, std::nullopt};
    }
    return {"alexander", false, "Delta''(1) = " + to_string(delta2) + " != 0"};
}

ObstructionVerdict cosmetic_dedekind_obstruction(const Integer& p, const Integer& q, const Integer& q2) {
    const Rational s1 = dedekind_sum_fast(q, p);
    const Rational s2 = dedekind_sum_fast(q2, p);
    const std::string lhs = "s(" + to_string(q) + "," + to_string(p) + ") = " + s1.to_string();
    const std::string rhs = "s(" + to_string(q2) + "," + to_string(p) + ") = " + s2.to_string();
    if (s1 == s2) {
        return {"dedekind", true, lhs + " == " + rhs};
    }
    return {"dedekind", false, lhs + " != " + rhs};
}

}  // namespace cosmetic
