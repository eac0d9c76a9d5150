#pragma once

#include "cosmetic/rational.hpp"

namespace cosmetic {

/// ((x)) = x - floor(x) - 1/2 for non-integers, 0 for integers.
Rational sawtooth(const Rational& x);

/// Dedekind sum s(q, p) = sign(p) * sum_{k=1}^{|p|-1} ((k/p)) ((kq/p)), summed
/// term by term. O(|p|); kept as the reference definition.
///
/// Throws std::invalid_argument when p == 0 or gcd(q, p) != 1.
Rational dedekind_sum_direct(const Integer& q, const Integer& p);

/// Same value as dedekind_sum_direct in O(log |p|) steps, via Euclidean
/// descent on the reciprocity law
///   s(q,p) + s(p,q) = -1/4 + (p/q + q/p + 1/(pq)) / 12,   p, q > 0 coprime.
Rational dedekind_sum_fast(const Integer& q, const Integer& p);

/// s(q, p) == s(q2, p), exactly.
bool dedekind_equal(const Integer& q, const Integer& q2, const Integer& p);

}  // namespace cosmetic
