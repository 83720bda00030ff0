#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ringradiant/numerics.hpp"
#include "ringradiant/vec3.hpp"

using namespace ringradiant;

TEST_CASE("periodic trapezoid is spectrally exact on trig polynomials") {
    auto f = [](double x) { return 1.5 + std::cos(3 * x) * std::sin(2 * x); };
    const double v = trapezoid_periodic(f, -kPi, 2 * kPi, 64);
    CHECK(v == doctest::Approx(2 * kPi * 1.5).epsilon(1e-14));
}

TEST_CASE("adaptive simpson hits tight tolerances") {
    const double v = integrate_adaptive(
        [](double x) { return std::exp(-x * x); }, -3.0, 3.0, 1e-13);
    CHECK(std::abs(v - 1.7724146965190425) < 1e-12);  // erf(3)*sqrt(pi)
}

TEST_CASE("adaptive simpson reports non-finite integrands") {
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return 1.0 / x; }, -1.0, 1.0,
                                       1e-10),
                    InputDomainError);
}

TEST_CASE("gauss-legendre integrates polynomials of degree 2n-1 exactly") {
    const GaussRule rule = gauss_legendre(8);
    double acc = 0;
    for (int i = 0; i < 8; ++i)
        acc += rule.weights[i] * std::pow(rule.nodes[i], 14);
    CHECK(acc == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
    double wsum = 0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("finite difference stencils") {
    auto f = [](double x) { return std::sin(3 * x); };
    CHECK(std::abs(fd::d1_central4(f, 0.4, 1e-3) - 3 * std::cos(1.2)) < 1e-11);
    CHECK(std::abs(fd::d2_central(f, 0.4, 1e-4) + 9 * std::sin(1.2)) < 1e-6);
}

TEST_CASE("vec3 algebra") {
    const Vec3 a{1, 2, 3}, b{-2, 0.5, 4};
    CHECK(dot(a, b) == doctest::Approx(11.0));
    const Vec3 c = cross(a, b);
    CHECK(dot(c, a) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(dot(c, b) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK((a - a).norm() == 0.0);
}
