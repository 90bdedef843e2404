#pragma once

/**
 * @file seminorm.hpp
 * @brief The multiplicative absolute value |x| = sqrt(A + B) and the
 *        distances it induces.
 *
 * |.| is a seminorm, not a norm: it is absolutely homogeneous,
 * subadditive and multiplicative (|x * y| = |x| * |y|), but vanishes on
 * the whole line ideal D. distance() is therefore only a pseudometric
 * on the algebra; quotient_distance() is the honest metric it induces
 * on the cosets of D.
 */

#include "ternion/structure.hpp"
#include "ternion/ternion.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace ternion {

/// sqrt(A + B), clamped at zero against negative round-off. A + B is
/// evaluated in its sum-of-squares form, so the result is exactly zero
/// on the kernel line and keeps full relative accuracy near it; a
/// materially negative value means the inputs were not finite, and
/// debug builds assert on it.
inline double abs_value(const Ternion& x) {
    const double ab = norm_squared(x);
    assert(ab >= -1e-9 * std::max(1.0, quad_forms(x).a)
           && "A + B is a sum of squares");
    return std::sqrt(std::max(0.0, ab));
}

/// A - B, the complementary sum of squares; nonnegative like A + B.
inline double a_minus_b(const Ternion& x) {
    const QuadraticPair q = quad_forms(x);
    return q.a - q.b;
}

/// abs_value(x - y). Symmetric and triangle-inequality-abiding, but
/// vanishes whenever x - y lies in D: a pseudometric.
inline double distance(const Ternion& x, const Ternion& y) {
    return abs_value(x - y);
}

/// The same value computed on canonical coset representatives; a true
/// metric on the quotient by D.
inline double quotient_distance(const Ternion& x, const Ternion& y) {
    return distance(reduce_mod_d(x), reduce_mod_d(y));
}

}  // namespace ternion
