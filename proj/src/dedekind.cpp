#include "cosmetic/dedekind.hpp"

#include <stdexcept>

namespace cosmetic {

namespace {

void require_dedekind_pair(const Integer& q, const Integer& p) {
    if (p == 0) {
        throw std::invalid_argument("Dedekind sum s(q, p) needs p != 0");
    }
    if (gcd(q, p) != 1) {
        throw std::invalid_argument("Dedekind sum s(" + to_string(q) + ", " + to_string(p) +
                                    ") needs gcd(q, p) = 1");
    }
}

}  // namespace

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) {
        return Rational(0);
    }
    return x - Rational(x.floor()) - Rational(1, 2);
}

Rational dedekind_sum_direct(const Integer& q, const Integer& p) {
    require_dedekind_pair(q, p);
    // Term by term over k = 1..n-1. With r = kq mod n (never 0 by
    // coprimality), ((k/n)) ((kq/n)) = (2k - n)(2r - n) / 4n^2, so the
    // numerators are summed as integers and divided once.
    const Integer n = abs(p);
    const Integer step = floor_mod(q, n);
    Integer numerator = 0;
    Integer r = 0;
    for (Integer k = 1; k < n; ++k) {
        r += step;
        if (r >= n) {
            r -= n;
        }
        numerator += (2 * k - n) * (2 * r - n);
    }
    const Rational sum(numerator, Integer(4 * n * n));
    return sign(p) < 0 ? -sum : sum;
}

Rational dedekind_sum_fast(const Integer& q, const Integer& p) {
    require_dedekind_pair(q, p);

    // s(q, -p) = -s(q, p) and s(q, p) = s(q mod p, p).
    Integer modulus = abs(p);
    Integer residue = floor_mod(q, modulus);

    // Accumulate s(residue, modulus) = c_0 - s(modulus mod residue, residue)
    // = c_0 - c_1 + s(...) ..., with c_i the reciprocity correction terms.
    Rational total;
    int parity = 1;
    while (residue != 0) {
        const Rational h(residue);
        const Rational k(modulus);
        Rational correction = Rational(-1, 4) + (k / h + h / k + Rational(1) / (h * k)) / Rational(12);
        total += parity > 0 ? correction : -correction;
        parity = -parity;

        Integer next = floor_mod(modulus, residue);
        modulus = residue;
        residue = next;
    }
    // residue == 0 forces modulus == 1 by coprimality and s(0, 1) = 0.
    return sign(p) < 0 ? -total : total;
}

bool dedekind_equal(const Integer& q, const Integer& q2, const Integer& p) {
    return dedekind_sum_fast(q, p) == dedekind_sum_fast(q2, p);
}

}  // namespace cosmetic
