#pragma once

// Shared helpers for the test suites: seeded generators and tolerance
// comparisons. Relative comparisons floor the scale at 1 so identities
// near zero are judged absolutely.

#include "ternion/ternion.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace testsupport {

using ternion::Ternion;

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x7e51a9c3b2d4f001ull) {
    return std::mt19937_64(seed);
}

inline double random_real(std::mt19937_64& rng, double lo = -10.0, double hi = 10.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Ternion random_ternion(std::mt19937_64& rng, double lo = -10.0,
                              double hi = 10.0) {
    return {random_real(rng, lo, hi), random_real(rng, lo, hi),
            random_real(rng, lo, hi)};
}

inline bool close(double x, double y, double tol) {
    return std::fabs(x - y) <= tol;
}

inline bool close_rel(double x, double y, double tol) {
    return std::fabs(x - y)
        <= tol * std::max({1.0, std::fabs(x), std::fabs(y)});
}

inline bool close_t(const Ternion& x, const Ternion& y, double tol) {
    return ternion::inf_norm(x - y) <= tol;
}

inline bool close_t_rel(const Ternion& x, const Ternion& y, double tol) {
    return ternion::inf_norm(x - y)
        <= tol * std::max({1.0, ternion::inf_norm(x), ternion::inf_norm(y)});
}

}  // namespace testsupport
