#pragma once

/**
 * @file ternion.hpp
 * @brief Value type and arithmetic for a three-dimensional commutative
 *        associative real algebra.
 *
 * Elements ("ternions") are coordinate triples over the basis {1, u, v}
 * with the multiplication generated by
 *
 *     u * u = v,    v * v = -u,    u * v = v * u = -1.
 *
 * The algebra is unital and commutative but not a division algebra: it
 * splits as a direct sum of a line ideal and a plane ideal (see
 * structure.hpp). This header provides the value type, the product, the
 * sigma conjugation (x1, xu, xv) -> (x1, -xv, -xu), the two fundamental
 * quadratic forms A and B with x * conj(x) = (A, B, -B), and the 3x3
 * regular representation used as an independent oracle for the product.
 *
 * Everything is plain double arithmetic over value types; all functions
 * are pure and safe to call concurrently.
 */

#include <array>
#include <cmath>
#include <ostream>

namespace ternion {

/// Default relative tolerance for ideal-membership style predicates.
/// Comparisons that take an explicit tolerance treat it as absolute;
/// convenience overloads scale this constant by max(1, |x|_inf).
inline constexpr double default_rel_tol = 1e-9;

/// An element of the algebra: s + u*e_u + v*e_v over the basis {1, u, v}.
///
/// Components are finite doubles on construction and stay finite through
/// every operation at desk scale (|component| <= 1e6); overflow is not
/// guarded at this layer.
struct Ternion {
    double s = 0.0;  ///< coefficient of the unit 1
    double u = 0.0;  ///< coefficient of the basis vector u
    double v = 0.0;  ///< coefficient of the basis vector v

    [[nodiscard]] static constexpr Ternion zero()   { return {0.0, 0.0, 0.0}; }
    [[nodiscard]] static constexpr Ternion one()    { return {1.0, 0.0, 0.0}; }
    [[nodiscard]] static constexpr Ternion unit_u() { return {0.0, 1.0, 0.0}; }
    [[nodiscard]] static constexpr Ternion unit_v() { return {0.0, 0.0, 1.0}; }

    /// delta = u - v, the direction orthogonal to 1 inside the plane
    /// spanned by {1, delta} (the hyperbolic subplane, see sigma_plane.hpp).
    [[nodiscard]] static constexpr Ternion delta()  { return {0.0, 1.0, -1.0}; }

    constexpr bool operator==(const Ternion&) const = default;
};

constexpr Ternion operator+(const Ternion& x, const Ternion& y) {
    return {x.s + y.s, x.u + y.u, x.v + y.v};
}

constexpr Ternion operator-(const Ternion& x, const Ternion& y) {
    return {x.s - y.s, x.u - y.u, x.v - y.v};
}

constexpr Ternion operator-(const Ternion& x) { return {-x.s, -x.u, -x.v}; }

constexpr Ternion operator*(double g, const Ternion& x) {
    return {g * x.s, g * x.u, g * x.v};
}

constexpr Ternion operator*(const Ternion& x, double g) { return g * x; }

constexpr Ternion operator/(const Ternion& x, double g) {
    return {x.s / g, x.u / g, x.v / g};
}

/// The algebra product. Commutative, associative, with unit (1, 0, 0):
///
///   (x * y)_1 = x1*y1 - xu*yv - xv*yu
///   (x * y)_u = x1*yu + xu*y1 - xv*yv
///   (x * y)_v = x1*yv + xu*yu + xv*y1
constexpr Ternion operator*(const Ternion& x, const Ternion& y) {
    return {x.s * y.s - x.u * y.v - x.v * y.u,
            x.s * y.u + x.u * y.s - x.v * y.v,
            x.s * y.v + x.u * y.u + x.v * y.s};
}

constexpr Ternion& operator+=(Ternion& x, const Ternion& y) { return x = x + y; }
constexpr Ternion& operator-=(Ternion& x, const Ternion& y) { return x = x - y; }
constexpr Ternion& operator*=(Ternion& x, const Ternion& y) { return x = x * y; }
constexpr Ternion& operator*=(Ternion& x, double g) { return x = x * g; }

/// Sigma conjugation: (x1, xu, xv) -> (x1, -xv, -xu). An involution and a
/// multiplicative homomorphism: conj(x * y) = conj(x) * conj(y).
constexpr Ternion conj(const Ternion& x) { return {x.s, -x.v, -x.u}; }

/// Euclidean inner product of the coordinate vectors.
constexpr double dot(const Ternion& x, const Ternion& y) {
    return x.s * y.s + x.u * y.u + x.v * y.v;
}

namespace detail {
constexpr double cabs(double a) { return a < 0.0 ? -a : a; }
constexpr double max3(double a, double b, double c) {
    return a > b ? (a > c ? a : c) : (b > c ? b : c);
}
}  // namespace detail

/// Max absolute component.
constexpr double inf_norm(const Ternion& x) {
    return detail::max3(detail::cabs(x.s), detail::cabs(x.u), detail::cabs(x.v));
}

/// Componentwise comparison against an absolute tolerance.
constexpr bool approx_equal(const Ternion& x, const Ternion& y, double tol) {
    return inf_norm(x - y) <= tol;
}

inline bool is_finite(const Ternion& x) {
    return std::isfinite(x.s) && std::isfinite(x.u) && std::isfinite(x.v);
}

/// Values of the two fundamental quadratic forms,
///
///   A(x) = x1^2 + xu^2 + xv^2
///   B(x) = x1*xu + xu*xv - xv*x1.
///
/// A is a sum of squares, and so are A+B and A-B:
///
///   A + B = ((x1+xu)^2 + (xu+xv)^2 + (x1-xv)^2) / 2
///   A - B = ((x1-xu)^2 + (xu-xv)^2 + (x1+xv)^2) / 2
///
/// while A - 2B = (x1 - xu + xv)^2 is a perfect square. Hence a >= 0,
/// a + b >= 0, a - b >= 0 and a - 2b >= 0 always hold.
struct QuadraticPair {
    double a = 0.0;
    double b = 0.0;
};

constexpr QuadraticPair quad_forms(const Ternion& x) {
    return {x.s * x.s + x.u * x.u + x.v * x.v,
            x.s * x.u + x.u * x.v - x.v * x.s};
}

/// A + B evaluated through its sum-of-squares form. Unlike the naive
/// a + b this cancels nothing: it is exactly zero on the line
/// (g, -g, g) and stays fully accurate near it, which inversion and
/// the absolute value rely on.
constexpr double norm_squared(const Ternion& x) {
    const double p = x.s + x.u;
    const double q = x.u + x.v;
    const double r = x.s - x.v;
    return (p * p + q * q + r * r) / 2.0;
}

/// A - 2B evaluated as the perfect square (x1 - xu + xv)^2; the base is
/// three times the D-coordinate of x, so this vanishes cleanly on the
/// plane ideal.
constexpr double split_discriminant(const Ternion& x) {
    const double r = x.s - x.u + x.v;
    return r * r;
}

/// x * conj(x). Always equals (A, B, -B), i.e. (A+B)*1 plus the element
/// (-B, B, -B) of the line ideal.
constexpr Ternion conj_product(const Ternion& x) { return x * conj(x); }

/// Coordinates of x * conj(x) over the basis {1, j} of the hyperbolic
/// subplane, where j = (1/3, 2/3, -2/3) and j * j = 1:
///
///   x * conj(x) = a * 1 + b * j,   a = A - B/2,   b = 3B/2.
///
/// They satisfy a + b = A + B and a - b = A - 2B, so the product of an
/// element with its conjugate "rotated" by the sign flip of b recovers
/// the invertibility scalar: (a*1 - b*j) * (a*1 + b*j) = (A+B)(A-2B)*1.
struct ShiftedCoeffs {
    double a = 0.0;
    double b = 0.0;
};

constexpr ShiftedCoeffs shifted_coeffs(const Ternion& x) {
    const QuadraticPair q = quad_forms(x);
    return {q.a - 0.5 * q.b, 1.5 * q.b};
}

/// 3x3 matrix of multiplication by a fixed element: column k holds the
/// coordinates of x * e_k for e_k in {1, u, v}. Deliberately generic
/// matrix arithmetic, independent of operator*, so it can serve as an
/// oracle: rep(x).apply(y) must reproduce x * y, and rep(x * y) must
/// equal rep(x).matmul(rep(y)).
struct RegularRep {
    std::array<std::array<double, 3>, 3> m{};

    [[nodiscard]] constexpr Ternion apply(const Ternion& y) const {
        const std::array<double, 3> c = {y.s, y.u, y.v};
        std::array<double, 3> r{};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                r[i] += m[i][k] * c[k];
        return {r[0], r[1], r[2]};
    }

    [[nodiscard]] constexpr RegularRep matmul(const RegularRep& o) const {
        RegularRep r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    r.m[i][j] += m[i][k] * o.m[k][j];
        return r;
    }

    /// Cofactor expansion along the first row.
    [[nodiscard]] constexpr double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    constexpr RegularRep operator+(const RegularRep& o) const {
        RegularRep r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[i][j] + o.m[i][j];
        return r;
    }

    constexpr bool operator==(const RegularRep&) const = default;
};

constexpr RegularRep regular_rep(const Ternion& x) {
    return {{{{x.s, -x.v, -x.u},
              {x.u, x.s, -x.v},
              {x.v, x.u, x.s}}}};
}

inline std::ostream& operator<<(std::ostream& os, const Ternion& x) {
    return os << '(' << x.s << ", " << x.u << ", " << x.v << ')';
}

}  // namespace ternion
