#pragma once

/**
 * @file sigma_plane.hpp
 * @brief The hyperbolic subplane sigma = span{1, delta} and its
 *        coordinates as split-complex numbers.
 *
 * The product restricts to sigma and turns it into a plane of
 * hyperbolic (split-complex) numbers: with j = 1/3 + (2/3)*delta =
 * (1/3, 2/3, -2/3) one has j * j = 1, and in the coordinates
 * x = s*1 + t*j multiplication becomes
 *
 *   (s1, t1) * (s2, t2) = (s1*s2 + t1*t2, s1*t2 + t1*s2).
 *
 * Conjugate products x * conj(x) always land in sigma; their (s, t)
 * coordinates are exactly shifted_coeffs(x).
 */

#include "ternion/ternion.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace ternion {

/// A split-complex number s + t*j with j * j = 1.
struct HyperbolicNumber {
    double s = 0.0;
    double t = 0.0;

    constexpr bool operator==(const HyperbolicNumber&) const = default;
};

/// The hyperbolic unit of sigma.
constexpr Ternion hyperbolic_unit() { return {1.0 / 3.0, 2.0 / 3.0, -2.0 / 3.0}; }

constexpr HyperbolicNumber hyper_mul(const HyperbolicNumber& a,
                                     const HyperbolicNumber& b) {
    return {a.s * b.s + a.t * b.t, a.s * b.t + a.t * b.s};
}

/// Membership in sigma: the plane is cut out by xu + xv = 0.
inline bool in_sigma(const Ternion& x, double tol) {
    return std::fabs(x.u + x.v) <= tol;
}

inline bool in_sigma(const Ternion& x) {
    return in_sigma(x, default_rel_tol * std::max(1.0, inf_norm(x)));
}

/// Coordinates over {1, j}: t = (3/2)*xu, s = x1 - xu/2. Rejects
/// non-members rather than projecting.
inline std::optional<HyperbolicNumber> to_sigma_coords(const Ternion& x,
                                                       double tol) {
    if (!in_sigma(x, tol)) return std::nullopt;
    return HyperbolicNumber{x.s - 0.5 * x.u, 1.5 * x.u};
}

inline std::optional<HyperbolicNumber> to_sigma_coords(const Ternion& x) {
    return to_sigma_coords(x, default_rel_tol * std::max(1.0, inf_norm(x)));
}

constexpr Ternion from_sigma_coords(const HyperbolicNumber& h) {
    return h.s * Ternion::one() + h.t * hyperbolic_unit();
}

/// delta is Euclidean-orthogonal to the unit: <(0,1,-1), (1,0,0)> = 0.
constexpr bool delta_orthogonality_check() {
    return dot(Ternion::delta(), Ternion::one()) == 0.0;
}

}  // namespace ternion
