#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ringradiant/flow_extension.hpp"
#include "ringradiant/numerics.hpp"
#include "ringradiant/spectral_wave.hpp"

using namespace ringradiant;

namespace {
double lattice(int k, double stride) { return std::fmod(0.5 + k * stride, 1.0); }

RingSource unit_current() {
    RingSource src;
    src.rho = [](double, double) { return 0.0; };
    src.rho_t = src.rho;
    src.rho_theta = src.rho;
    src.j = [](double, double) { return 1.0; };
    src.j_t = [](double, double) { return 0.0; };
    src.j_theta = [](double, double) { return 0.0; };
    src.m_period = kPi;
    return src;
}
}  // namespace

TEST_CASE("ring current vector is tangent") {
    const RingSource one = unit_current();
    const Vec3 v0 = ring_current_vector(one, 0.0, 0.0);
    CHECK(v0.x == doctest::Approx(0.0));
    CHECK(v0.y == doctest::Approx(1.0));
    CHECK(v0.z == 0.0);
    const Vec3 v1 = ring_current_vector(one, kPi / 2, 0.0);
    CHECK(v1.x == doctest::Approx(-1.0));
    CHECK(std::abs(v1.y) < 1e-15);

    const RingSource p1 = mode_pair(1, 2);
    const Vec3 v2 = ring_current_vector(p1, kPi / 4, kPi / 4);
    CHECK(v2.x == doctest::Approx(-std::sqrt(2.0) / 2).epsilon(1e-12));
    CHECK(v2.y == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
}

TEST_CASE("surface divergence equals dJ/dtheta") {
    const RingSource one = unit_current();
    CHECK(std::abs(surface_divergence(one, 1.1, 0.0)) < 1e-10);

    // J = sin(2 theta) sin(2t) at (0, pi/4): dJ/dtheta = 2
    const RingSource p1 = mode_pair(1, 2);
    CHECK(surface_divergence(p1, 0.0, kPi / 4) == doctest::Approx(2.0).epsilon(1e-7));

    // continuity closure at 50 points for each mode pair
    for (int i = 1; i <= 4; ++i) {
        const RingSource p = mode_pair(i, 2);
        for (int k = 0; k < 50; ++k) {
            const double th = -kPi + 2 * kPi * lattice(k, 0.754877666);
            const double t = 3.0 * lattice(k, 0.569840291);
            CHECK(std::abs(surface_divergence(p, th, t) + p.rho_t(th, t)) < 1e-8);
        }
    }
}

TEST_CASE("bump profiles: normalization, support, axis") {
    const BumpProfile compact{0.2, BumpProfile::Kind::compact};
    CHECK(compact.radial(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(compact.axial(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(compact.radial(1.21) == 0.0);
    CHECK(compact.radial(0.79) == 0.0);
    CHECK(compact.axial(0.2) == 0.0);
    CHECK(compact.radial(0.0) == 0.0);

    const BumpProfile analytic{0.2, BumpProfile::Kind::analytic};
    CHECK(analytic.radial(1.0) == doctest::Approx(1.0));
    CHECK(analytic.radial(1.5) > 0.0);
    CHECK(analytic.axial(3.0) > 0.0);
    CHECK_THROWS_AS(analytic.radial(0.0), std::domain_error);
}

TEST_CASE("bump extension: restriction, support, continuity") {
    const RingSource src = combined_source({2, 1, 1, 1, -1});
    CHECK_THROWS_AS(bump_extend(src, {1.5, BumpProfile::Kind::compact}),
                    std::invalid_argument);
    const VolumetricSource vol = bump_extend(src, {0.2, BumpProfile::Kind::compact});

    // exact restriction at (r, z) = (1, 0)
    for (int k = 0; k < 20; ++k) {
        const double th = -kPi + 2 * kPi * lattice(k, 0.754877666);
        const double t = 2.0 * lattice(k, 0.569840291);
        CHECK(vol.rho(1.0, th, 0.0, t) == doctest::Approx(src.rho(th, t)).epsilon(1e-15));
        const Vec3 kv = ring_current_vector(src, th, t);
        CHECK((vol.current(1.0, th, 0.0, t) - kv).norm() < 1e-15);
    }

    // compact support: zero outside the shell, exactly
    CHECK(vol.rho(1.21, 0.3, 0.0, 0.5) == 0.0);
    CHECK(vol.current(1.21, 0.3, 0.0, 0.5).norm() == 0.0);
    CHECK(vol.rho(1.05, 0.3, 0.25, 0.5) == 0.0);
    CHECK(vol.rho(0.0, 0.0, 0.0, 0.5) == 0.0);
    CHECK(vol.current(0.0, 0.0, 0.0, 0.5).norm() == 0.0);

    // third component identically zero
    CHECK(vol.current(1.05, 0.3, 0.02, 0.7).z == 0.0);

    // mid-shell reference point, h = 1e-4
    CHECK(std::abs(vol.continuity_residual(1.05, 0.3, 0.02, 0.7, 1e-4)) < 1e-6);

    // 200 interior points for mode pairs and the admissible combination
    for (int i = 0; i <= 4; ++i) {
        const RingSource ring =
            (i == 0) ? combined_source({2, 1, 1, 1, -1}) : mode_pair(i, 2);
        const VolumetricSource v = bump_extend(ring, {0.2, BumpProfile::Kind::compact});
        for (int k = 0; k < 40; ++k) {
            const double r = 1.0 + 0.15 * (2 * lattice(k, 0.754877666) - 1.0);
            const double th = -kPi + 2 * kPi * lattice(k + 40, 0.754877666);
            const double z = 0.15 * (2 * lattice(k, 0.569840291) - 1.0);
            const double t = 2.0 * lattice(k + 40, 0.569840291);
            CHECK(std::abs(v.continuity_residual(r, th, z, t, 3e-5)) < 1e-6);
        }
    }

    // analytic kind: positive everywhere defined, undefined on the axis
    const VolumetricSource van = bump_extend(src, {0.2, BumpProfile::Kind::analytic});
    CHECK(std::abs(van.rho(1.5, 0.3, 0.1, 0.2)) > 0.0);
    CHECK_THROWS_AS(van.rho(0.0, 0.0, 0.1, 0.2), std::domain_error);
}

TEST_CASE("circular flows are divergence free") {
    CHECK(std::abs(circular_flow_divergence([](double) { return 1.0; }, 2.0, 0.5)) <
          1e-8);
    CHECK(std::abs(circular_flow_divergence([](double r) { return r * r; }, 0.7,
                                            -1.2)) < 1e-8);
    CHECK_THROWS_AS(circular_flow_divergence([](double) { return 1.0; }, -1.0, 0.0),
                    std::domain_error);
}

TEST_CASE("theta-dependent density breaks the circular flow") {
    auto rho = [](double th) { return 2.0 + std::cos(th); };
    // div = (1/r) drho/dtheta = -sin(theta)/r
    for (double th : {kPi / 2, 0.3, -1.0}) {
        const double div = density_weighted_flow_divergence(rho, 1.3, th);
        CHECK(std::abs(div - (-std::sin(th) / 1.3)) < 1e-8);
    }
}

TEST_CASE("radial reconstruction") {
    // annulus, w2 independent of theta: w1 = (1-eps) g / r0
    auto w2_const = [](double, double) { return 7.0; };
    auto g5 = [](double) { return 5.0; };
    CHECK(reconstruct_radial(w2_const, g5, 0.5, 1.0, 0.3) ==
          doctest::Approx(2.5).epsilon(1e-12));

    // disc case, w2 = r sin(theta): w1 = -(r0/2) cos(theta0)
    auto w2 = [](double r, double th) { return r * std::sin(th); };
    auto g0 = [](double) { return 0.0; };
    CHECK(std::abs(reconstruct_radial(w2, g0, 1.0, 0.8, 0.0) - (-0.4)) < 1e-10);
    for (int k = 0; k < 10; ++k) {
        const double r0 = 0.1 + 0.8 * lattice(k, 0.754877666);
        const double th = -kPi + 2 * kPi * lattice(k, 0.569840291);
        CHECK(std::abs(reconstruct_radial(w2, g0, 1.0, r0, th) -
                       (-(r0 / 2) * std::cos(th))) < 1e-10);
    }

    // r0 -> 0 limit equals -dw2/dtheta at the origin (zero for smooth w2)
    CHECK(std::abs(reconstruct_radial(w2, g0, 1.0, 0.0, 0.0)) < 1e-10);
    CHECK(std::abs(reconstruct_radial(w2, g0, 1.0, 1e-4, 0.0) -
                   reconstruct_radial(w2, g0, 1.0, 0.0, 0.0)) < 1e-4);

    // analytic-derivative overload agrees with the stencil path
    auto dw2 = [](double r, double th) { return r * std::cos(th); };
    CHECK(reconstruct_radial(dw2, g0, 1.0, 0.8, 0.4, true) ==
          doctest::Approx(reconstruct_radial(w2, g0, 1.0, 0.8, 0.4)).epsilon(1e-11));

    CHECK_THROWS_AS(reconstruct_radial(w2, g0, 0.5, 0.2, 0.0), std::domain_error);
}

TEST_CASE("reconstructed flow is divergence free") {
    const AnnulusFlow flow = reconstruct_annulus_flow(
        [](double r, double th) { return r * r * std::sin(2 * th); },
        [](double th) { return std::cos(th); }, 0.3, 0.3);
    CHECK(flow.inner == doctest::Approx(0.7));
    // decomposition invariant: field = w1 rhat + w2 thetahat
    {
        const double r = 1.05, th = 0.8;
        const Vec3 f = flow.field(r * std::cos(th), r * std::sin(th));
        const Vec3 expect =
            flow.w1(r, th) * Vec3{std::cos(th), std::sin(th), 0.0} +
            flow.w2(r, th) * Vec3{-std::sin(th), std::cos(th), 0.0};
        CHECK((f - expect).norm() < 1e-14);
    }
    for (int k = 0; k < 6; ++k) {
        const double r = 0.85 + 0.3 * lattice(k, 0.754877666);
        const double th = -kPi + 2 * kPi * lattice(k, 0.569840291);
        const double x = r * std::cos(th), y = r * std::sin(th);
        const double h = 1e-4;
        const double div = (flow.field(x + h, y).x - flow.field(x - h, y).x +
                            flow.field(x, y + h).y - flow.field(x, y - h).y) /
                           (2 * h);
        CHECK(std::abs(div) < 1e-6);
    }
}
