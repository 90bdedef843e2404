#include "ternion/structure.hpp"
#include "ternion/ternion.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>

using namespace ternion;
using namespace testsupport;

namespace {

Ternion random_d_member(std::mt19937_64& rng) {
    return random_real(rng) * d_generator();
}

Ternion random_g_member(std::mt19937_64& rng) {
    const double alpha = random_real(rng);
    const double beta = random_real(rng);
    return {alpha - beta, alpha, beta};
}

}  // namespace

TEST_CASE("idempotents and their relations") {
    CHECK(close_t(proj_d(Ternion::one()), one_d(), 0.0));
    CHECK(close_t(one_d() * one_d(), one_d(), 1e-15));
    CHECK(close_t(one_g() * one_g(), one_g(), 1e-15));
    CHECK(close_t(one_d() * one_g(), Ternion::zero(), 1e-15));
    CHECK(close_t(one_d() + one_g(), Ternion::one(), 1e-15));
    CHECK(close_t(i_g() * i_g(), -one_g(), 1e-15));
    // i_g lies in G
    CHECK(in_g(i_g(), 1e-15));
}

TEST_CASE("projections") {
    CHECK(proj_d(Ternion{1, -1, 1}) == Ternion{1, -1, 1});
    CHECK(close_t(proj_d(Ternion{1, 1, 0}), Ternion::zero(), 1e-15));
    CHECK(close_t(proj_d(Ternion::one()), one_d(), 1e-15));
    CHECK(close_t(proj_g(Ternion::one()), one_g(), 1e-15));

    auto rng = make_rng(21);
    for (int i = 0; i < 100; ++i) {
        const double g = random_real(rng);
        CHECK(close_t(proj_g(Ternion{g, -g, g}), Ternion::zero(),
                      1e-15 * std::max(1.0, std::fabs(g))));
    }
    for (int i = 0; i < 2000; ++i) {
        const Ternion x = random_ternion(rng);
        CHECK(close_t_rel(proj_d(x) + proj_g(x), x, 1e-12));
        CHECK(close_t_rel(proj_d(proj_d(x)), proj_d(x), 1e-12));
        CHECK(close_t_rel(proj_g(proj_g(x)), proj_g(x), 1e-12));
        // proj_d lands on the line with g = (x1 - xu + xv)/3
        const double g = (x.s - x.u + x.v) / 3.0;
        CHECK(close_t_rel(proj_d(x), Ternion{g, -g, g}, 1e-12));
    }
}

TEST_CASE("ideal membership") {
    CHECK(in_d(Ternion{2, -2, 2}, 0.0));
    CHECK(in_g(Ternion{3, 1, -2}, 1e-12));
    CHECK_FALSE(in_d(Ternion{1, 1, 0}, 1e-12));
    CHECK_FALSE(in_g(Ternion{1, -1, 1}, 1e-12));
}

TEST_CASE("ideals are closed under multiplication by anything") {
    auto rng = make_rng(22);
    for (int i = 0; i < 1000; ++i) {
        const Ternion x = random_ternion(rng);
        const Ternion gamma = random_d_member(rng);
        const Ternion theta = random_g_member(rng);
        const double dscale = std::max(1.0, inf_norm(x) * inf_norm(gamma));
        const double gscale = std::max(1.0, inf_norm(x) * inf_norm(theta));
        CHECK(in_d(gamma * x, 1e-12 * dscale));
        CHECK(in_g(theta * x, 1e-12 * gscale));
    }
}

TEST_CASE("split examples") {
    const SplitForm s1 = split(Ternion::one());
    CHECK(s1.z == std::complex<double>(1.0, 0.0));
    CHECK(s1.r == 1.0);

    const SplitForm sd = split(Ternion{1, -1, 1});
    CHECK(sd.z == std::complex<double>(0.0, 0.0));
    CHECK(sd.r == 3.0);

    const SplitForm si = split(i_g());
    CHECK(close(si.z.real(), 0.0, 1e-12));
    CHECK(close(si.z.imag(), 1.0, 1e-12));
    CHECK(si.r == 0.0);
}

TEST_CASE("split and from_split are mutually inverse") {
    CHECK(from_split({{1.0, 0.0}, 1.0}) == Ternion::one());
    CHECK(from_split({{0.0, 0.0}, 3.0}) == Ternion{1, -1, 1});

    auto rng = make_rng(23);
    for (int i = 0; i < 2000; ++i) {
        const Ternion x = random_ternion(rng);
        CHECK(close_t_rel(from_split(split(x)), x, 1e-12));
    }
}

TEST_CASE("split is an algebra homomorphism onto C x R") {
    auto rng = make_rng(24);
    for (int i = 0; i < 2000; ++i) {
        const Ternion x = random_ternion(rng);
        const Ternion y = random_ternion(rng);
        const SplitForm sx = split(x);
        const SplitForm sy = split(y);
        const SplitForm sxy = split(x * y);
        const std::complex<double> zz = sx.z * sy.z;
        CHECK(close_rel(sxy.z.real(), zz.real(), 1e-9));
        CHECK(close_rel(sxy.z.imag(), zz.imag(), 1e-9));
        CHECK(close_rel(sxy.r, sx.r * sy.r, 1e-9));
    }
}

TEST_CASE("classification") {
    CHECK(classify(Ternion{1, -1, 1}) == Classification::ZeroDivisorD);
    CHECK(classify(Ternion{1, 1, 0}) == Classification::ZeroDivisorG);
    CHECK(classify(Ternion::one()) == Classification::Invertible);
    CHECK(classify(Ternion::zero()) == Classification::Zero);
    CHECK(classify(Ternion{1e-12, 1e-12, 0}) == Classification::Zero);
    // explicit tolerance overrides the default
    CHECK(classify(Ternion{1e-12, 1e-12, 0}, 1e-15) == Classification::ZeroDivisorG);

    // (1,1,0) really is a zero divisor: (1,1,0)*(1,-1,1) = 0
    CHECK(Ternion{1, 1, 0} * Ternion{1, -1, 1} == Ternion::zero());
}

TEST_CASE("inversion") {
    REQUIRE(invert(Ternion::one()).has_value());
    CHECK(*invert(Ternion::one()) == Ternion::one());

    const auto inv_u = invert(Ternion::unit_u());
    REQUIRE(inv_u.has_value());
    CHECK(close_t(*inv_u, Ternion{0, 0, -1}, 1e-15));
    CHECK(close_t(Ternion::unit_u() * *inv_u, Ternion::one(), 1e-15));

    CHECK_FALSE(invert(Ternion{1, 1, 0}).has_value());
    CHECK_FALSE(invert(Ternion{1, -1, 1}).has_value());
    CHECK_FALSE(invert(Ternion::zero()).has_value());
}

TEST_CASE("inverse agrees with the conjugate closed form") {
    // closed form: conj(x) * (a*1 - b*j) / ((A+B)(A-2B)) with the
    // shifted coefficients a, b; kept here as an oracle only
    const Ternion j = {1.0 / 3.0, 2.0 / 3.0, -2.0 / 3.0};
    auto rng = make_rng(25);
    int tested = 0;
    while (tested < 2000) {
        const Ternion x = random_ternion(rng);
        const QuadraticPair q = quad_forms(x);
        const double product = (q.a + q.b) * (q.a - 2 * q.b);
        if (product < 1e-6) continue;
        ++tested;

        const auto via_split = invert(x);
        REQUIRE(via_split.has_value());
        const ShiftedCoeffs c = shifted_coeffs(x);
        const double denom = norm_squared(x) * split_discriminant(x);
        const Ternion closed =
            conj(x) * (c.a * Ternion::one() - c.b * j) / denom;
        CHECK(close_t(*via_split, closed, 1e-8));
        CHECK(close_t(*via_split * x, Ternion::one(), 1e-8));
    }
}

TEST_CASE("coordinates over the ideal basis") {
    const IdealCoords d = ideal_coords(Ternion{1, -1, 1});
    CHECK(d.a == 0.0);
    CHECK(d.b == 0.0);
    CHECK(d.c == 1.0);

    const IdealCoords e = ideal_coords(Ternion{1, 0, 0});
    CHECK(close(e.c, 1.0 / 3.0, 1e-15));
    CHECK(close(e.a, 1.0 / 3.0, 1e-15));
    CHECK(close(e.b, -1.0 / 3.0, 1e-15));

    auto rng = make_rng(26);
    const auto [g1, g2] = g_basis();
    for (int i = 0; i < 2000; ++i) {
        const Ternion x = random_ternion(rng);
        const IdealCoords c = ideal_coords(x);
        const Ternion rebuilt = c.a * g1 + c.b * g2 + c.c * d_generator();
        CHECK(close_t(rebuilt, x, 1e-12 * std::max(1.0, inf_norm(x))));

        // invertibility criterion: a^2 + b^2 > 0 and c^2 > 0
        const bool criterion = (c.a * c.a + c.b * c.b > 1e-18)
                            && (c.c * c.c > 1e-18);
        CHECK(criterion == (classify(x) == Classification::Invertible));
    }
}

TEST_CASE("annihilators") {
    CHECK(annihilates(Ternion{1, -1, 1}, Ternion{1, 1, 0}, 0.0));
    CHECK(annihilates(one_d(), one_g(), 1e-15));
    CHECK_FALSE(annihilates(Ternion::one(), Ternion::unit_u(), 1e-3));

    auto rng = make_rng(27);
    for (int i = 0; i < 1000; ++i) {
        const Ternion gamma = random_d_member(rng);
        const Ternion theta = random_g_member(rng);
        const double scale = std::max(1.0, inf_norm(gamma) * inf_norm(theta));
        CHECK(annihilates(gamma, theta, 1e-12 * scale));
        CHECK(annihilates(theta, gamma, 1e-12 * scale));
    }
}

TEST_CASE("every zero divisor has a nonzero annihilating witness") {
    auto rng = make_rng(28);
    for (int i = 0; i < 500; ++i) {
        const Ternion gamma = random_d_member(rng);
        const Ternion theta = random_g_member(rng);
        const Ternion w_for_d = random_real(rng) * one_g();
        const double sd = std::max(1.0, inf_norm(gamma) * inf_norm(w_for_d));
        CHECK(annihilates(gamma, w_for_d, 1e-12 * sd));
        const double sg = std::max(1.0, inf_norm(theta));
        CHECK(annihilates(theta, d_generator(), 1e-12 * sg));
    }
}

TEST_CASE("reduction modulo the line ideal") {
    CHECK(reduce_mod_d(Ternion{1, -1, 1}) == Ternion::zero());
    CHECK(reduce_mod_d(Ternion{1, 0, 0}) == Ternion{0, 1, -1});

    auto rng = make_rng(29);
    for (int i = 0; i < 1000; ++i) {
        const Ternion x = random_ternion(rng);
        const Ternion r = reduce_mod_d(x);
        CHECK(r.s == 0.0);
        CHECK(in_d(r - x, 1e-12 * std::max(1.0, inf_norm(x))));
    }
}
