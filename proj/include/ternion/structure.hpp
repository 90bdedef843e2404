#pragma once

/**
 * @file structure.hpp
 * @brief Ideal structure of the algebra: the zero-divisor line D, the
 *        plane ideal G, idempotent projections, the isomorphism onto
 *        C x R, zero-divisor classification, and inversion.
 *
 * The algebra is the direct sum of two ideals,
 *
 *   D = { (g, -g, g) }            a line, a copy of R,
 *   G = { (a - b, a, b) }         a plane, a copy of C,
 *
 * realized by the orthogonal idempotents one_d = (1/3, -1/3, 1/3) and
 * one_g = (2/3, 1/3, -1/3) with one_d + one_g = 1. The element
 * i_g = (0, sqrt(1/3), sqrt(1/3)) of G squares to -one_g, which makes G
 * a Gaussian complex plane. The zero divisors are exactly D union G;
 * everything else is invertible.
 */

#include "ternion/ternion.hpp"

#include <algorithm>
#include <complex>
#include <optional>

namespace ternion {

/// Identity of the line ideal D.
constexpr Ternion one_d() { return {1.0 / 3.0, -1.0 / 3.0, 1.0 / 3.0}; }

/// Identity of the plane ideal G.
constexpr Ternion one_g() { return {2.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0}; }

/// Element of G with i_g * i_g = -one_g.
inline Ternion i_g() {
    const double c = std::sqrt(1.0 / 3.0);
    return {0.0, c, c};
}

/// Spanning vector of D.
constexpr Ternion d_generator() { return {1.0, -1.0, 1.0}; }

/// Spanning pair of G.
constexpr std::array<Ternion, 2> g_basis() {
    return {Ternion{1.0, 1.0, 0.0}, Ternion{-1.0, 0.0, 1.0}};
}

/// Projection onto D along G; lands on the line (g, -g, g) with
/// g = (x1 - xu + xv) / 3.
constexpr Ternion proj_d(const Ternion& x) { return x * one_d(); }

/// Projection onto G along D; proj_d(x) + proj_g(x) = x.
constexpr Ternion proj_g(const Ternion& x) { return x * one_g(); }

/// Membership tests against an absolute tolerance on |x - proj(x)|_inf.
constexpr bool in_d(const Ternion& x, double tol) {
    return inf_norm(x - proj_d(x)) <= tol;
}

constexpr bool in_g(const Ternion& x, double tol) {
    return inf_norm(x - proj_g(x)) <= tol;
}

/// Image of an element under the isomorphism onto C x R: z holds the
/// G component over the basis {one_g, i_g}, r the D component over
/// {one_d}. The map is an algebra homomorphism, so multiplication acts
/// componentwise: split(x * y) = (z_x * z_y, r_x * r_y).
struct SplitForm {
    std::complex<double> z;
    double r = 0.0;
};

inline SplitForm split(const Ternion& x) {
    const Ternion g = proj_g(x);
    return {{1.5 * g.s, std::sqrt(3.0) / 2.0 * (g.u + g.v)}, x.s - x.u + x.v};
}

/// Inverse of split: z_re * one_g + z_im * i_g + (r/3) * (1, -1, 1).
inline Ternion from_split(const SplitForm& f) {
    return f.z.real() * one_g() + f.z.imag() * i_g()
         + (f.r / 3.0) * d_generator();
}

enum class Classification { Zero, ZeroDivisorD, ZeroDivisorG, Invertible };

/// Classify against an absolute tolerance: Zero when |x|_inf <= tol,
/// otherwise a zero divisor when x lies in D or G within tol, otherwise
/// invertible. Zero is reported as its own class even though the zero
/// element belongs to both ideals.
constexpr Classification classify(const Ternion& x, double tol) {
    if (inf_norm(x) <= tol) return Classification::Zero;
    if (in_d(x, tol)) return Classification::ZeroDivisorD;
    if (in_g(x, tol)) return Classification::ZeroDivisorG;
    return Classification::Invertible;
}

constexpr Classification classify(const Ternion& x) {
    return classify(x, default_rel_tol * std::max(1.0, inf_norm(x)));
}

/// Multiplicative inverse, computed through the split representation as
/// from_split(1/z, 1/r). Returns nullopt when (A+B)(A-2B), the squared
/// product of the component magnitudes, falls below tol^2 relative to
/// max(1, |x|_inf)^4 -- i.e. when x is within tolerance of a zero
/// divisor or zero. The gate uses the cancellation-free evaluations so
/// exact ideal members are rejected even at large scales.
inline std::optional<Ternion> invert(const Ternion& x,
                                     double tol = default_rel_tol) {
    const double scale2 = std::max(1.0, inf_norm(x)) * std::max(1.0, inf_norm(x));
    if (norm_squared(x) * split_discriminant(x) <= tol * tol * scale2 * scale2)
        return std::nullopt;
    const SplitForm f = split(x);
    return from_split({1.0 / f.z, 1.0 / f.r});
}

/// Coordinates of x over the basis {(1,1,0), (-1,0,1), (1,-1,1)} formed
/// by the G spanning pair and the D generator:
///
///   x = a*(1,1,0) + b*(-1,0,1) + c*(1,-1,1).
///
/// x is invertible exactly when a^2 + b^2 > 0 and c^2 > 0.
struct IdealCoords {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

constexpr IdealCoords ideal_coords(const Ternion& x) {
    const double c = (x.s - x.u + x.v) / 3.0;
    return {x.u + c, x.v - c, c};
}

constexpr bool annihilates(const Ternion& x, const Ternion& y, double tol) {
    return inf_norm(x * y) <= tol;
}

/// Canonical representative of the coset x + D with first coordinate
/// zero: x - x1*(1,-1,1) = (0, xu + x1, xv - x1). Shares the seminorm
/// of x since the difference lies in D.
constexpr Ternion reduce_mod_d(const Ternion& x) {
    return {0.0, x.u + x.s, x.v - x.s};
}

}  // namespace ternion
