#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ringradiant/numerics.hpp"
#include "ringradiant/spectral_wave.hpp"

using namespace ringradiant;

namespace {

// Independent oracle for the coefficient integrals: adaptive quadrature of
// the defining integral, run at a tighter tolerance than the implementation.
double coeff_oracle(const std::function<double(double)>& f, int m, bool use_sin) {
    return integrate_adaptive(
               [&](double x) {
                   return f(x) * (use_sin ? std::sin(m * x) : std::cos(m * x));
               },
               -kPi, kPi, 1e-14) /
           (2 * kPi);
}

// d'Alembert oracle on the periodic extension:
// Psi(x,t) = (psi0(x+t)+psi0(x-t))/2 + (1/2) int_{x-t}^{x+t} psi1.
double dalembert(const std::function<double(double)>& psi0,
                 const std::function<double(double)>& psi1, double x, double t) {
    const double a = 0.5 * (psi0(x + t) + psi0(x - t));
    const double b = 0.5 * integrate_adaptive(psi1, x - t, x + t, 1e-13);
    return a + b;
}

double lattice(int k, double stride) { return std::fmod(0.5 + k * stride, 1.0); }

}  // namespace

TEST_CASE("constant initial data is pure a0") {
    const FourierSpectrum s = compute_fourier_coefficients(
        [](double) { return 1.0; }, [](double) { return 0.0; }, 4);
    CHECK(s.a[0] == doctest::Approx(1.0).epsilon(1e-13));
    for (int m = 1; m <= 4; ++m) {
        CHECK(std::abs(s.a[m]) < 1e-13);
        CHECK(std::abs(s.b[m]) < 1e-13);
        CHECK(std::abs(s.a_prime[m]) < 1e-13);
        CHECK(std::abs(s.b_prime[m]) < 1e-13);
    }
}

TEST_CASE("cos(2x) data against the quadrature oracle") {
    auto psi0 = [](double x) { return std::cos(2 * x); };
    const FourierSpectrum s =
        compute_fourier_coefficients(psi0, [](double) { return 0.0; }, 4);
    CHECK(std::abs(s.a[2] - coeff_oracle(psi0, 2, false)) < 1e-13);
    CHECK(s.a[2] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::abs(s.a[1]) < 1e-13);
    CHECK(std::abs(s.b[2]) < 1e-13);
}

TEST_CASE("sin(3x) velocity data lands in b'") {
    auto psi1 = [](double x) { return std::sin(3 * x); };
    const FourierSpectrum s = compute_fourier_coefficients(
        [](double) { return 0.0; }, psi1, 4);
    CHECK(std::abs(s.b_prime[3] - coeff_oracle(psi1, 3, true)) < 1e-13);
    CHECK(s.b_prime[3] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("non-finite initial data is rejected") {
    CHECK_THROWS_AS(compute_fourier_coefficients(
                        [](double x) { return 1.0 / x; },
                        [](double) { return 0.0; }, 2),
                    InputDomainError);
}

TEST_CASE("series evaluation: standing wave and initial conditions") {
    const WaveSolution sol{compute_fourier_coefficients(
        [](double x) { return std::cos(2 * x); }, [](double) { return 0.0; }, 4)};
    for (int k = 0; k < 40; ++k) {
        const double x = -kPi + 2 * kPi * lattice(k, 0.754877666);
        const double t = 5.0 * lattice(k, 0.569840291);
        CHECK(std::abs(sol.evaluate(x, t) - std::cos(2 * x) * std::cos(2 * t)) <
              1e-12);
    }
    // evaluate(x, 0) reproduces psi0
    for (int k = 0; k < 20; ++k) {
        const double x = -kPi + 2 * kPi * lattice(k, 0.754877666);
        CHECK(std::abs(sol.evaluate(x, 0.0) - std::cos(2 * x)) < 1e-12);
    }
}

TEST_CASE("series evaluation against the d'Alembert oracle") {
    auto psi0 = [](double) { return 0.0; };
    auto psi1 = [](double x) { return std::sin(3 * x); };
    const WaveSolution sol{compute_fourier_coefficients(psi0, psi1, 5)};
    for (int k = 0; k < 25; ++k) {
        const double x = -2.0 + 4.0 * lattice(k, 0.754877666);
        const double t = 0.9 * lattice(k, 0.569840291);  // keep x +- t inside [-pi,pi]
        CHECK(std::abs(sol.evaluate(x, t) - dalembert(psi0, psi1, x, t)) < 1e-12);
    }
    // ... and the time derivative reproduces psi1 at t=0.
    for (int k = 0; k < 20; ++k) {
        const double x = -kPi + 2 * kPi * lattice(k, 0.754877666);
        CHECK(std::abs(sol.time_derivative(x, 0.0) - psi1(x)) < 1e-12);
    }
}

TEST_CASE("wave residual by second differences") {
    const WaveSolution sol{compute_fourier_coefficients(
        [](double x) { return std::cos(2 * x) + 0.5 * std::sin(3 * x); },
        [](double x) { return std::cos(2 * x); }, 8)};
    const double h = 1e-3;
    for (int k = 0; k < 100; ++k) {
        const double x = -kPi + 2 * kPi * lattice(k, 0.754877666);
        const double t = 4.0 * lattice(k, 0.569840291);
        const double dtt = (sol.evaluate(x, t + h) - 2 * sol.evaluate(x, t) +
                            sol.evaluate(x, t - h)) /
                           (h * h);
        const double dxx = (sol.evaluate(x + h, t) - 2 * sol.evaluate(x, t) +
                            sol.evaluate(x - h, t)) /
                           (h * h);
        CHECK(std::abs(dtt - dxx) < 1e-6);
    }
}

TEST_CASE("induced current: closed forms and continuity") {
    // rho = cos(mx)cos(mt) -> J = sin(mx)sin(mt)
    const WaveSolution sol{compute_fourier_coefficients(
        [](double x) { return std::cos(2 * x); }, [](double) { return 0.0; }, 4)};
    for (int k = 0; k < 40; ++k) {
        const double x = -kPi + 2 * kPi * lattice(k, 0.754877666);
        const double t = 5.0 * lattice(k, 0.569840291);
        CHECK(std::abs(sol.current(x, t) - std::sin(2 * x) * std::sin(2 * t)) <
              1e-12);
    }

    // constant density: zero current
    const WaveSolution flat{compute_fourier_coefficients(
        [](double) { return 3.0; }, [](double) { return 0.0; }, 4)};
    CHECK(std::abs(flat.current(1.1, 2.3)) < 1e-12);

    // general (asymmetric) data: J matches quadrature of -dPsi/dt pointwise
    const WaveSolution gen{compute_fourier_coefficients(
        [](double x) { return std::cos(2 * x) + 0.3 * std::sin(x); },
        [](double x) { return 0.2 * std::sin(3 * x) + 0.1 * std::cos(x); }, 6)};
    for (int k = 0; k < 10; ++k) {
        const double x = -kPi + 2 * kPi * lattice(k, 0.754877666);
        const double t = 3.0 * lattice(k, 0.569840291);
        const double oracle = integrate_adaptive(
            [&](double u) { return -gen.time_derivative(u, t); }, -kPi, x, 1e-13);
        CHECK(std::abs(gen.current(x, t) - oracle) < 1e-11);
    }

    // continuity holds identically at truncation level
    for (int k = 0; k < 100; ++k) {
        const double x = -kPi + 2 * kPi * lattice(k, 0.754877666);
        const double t = 3.0 * lattice(k, 0.569840291);
        CHECK(std::abs(gen.time_derivative(x, t) + gen.current_x_derivative(x, t)) <
              1e-10);
    }
}

TEST_CASE("symmetric data satisfies dJ/dt = -drho/dx") {
    const WaveSolution sym{compute_fourier_coefficients(
        [](double x) { return std::cos(2 * x); },
        [](double x) { return std::cos(2 * x); }, 6)};
    CHECK(sym.spectrum.symmetric());
    for (int k = 0; k < 50; ++k) {
        const double x = -kPi + 2 * kPi * lattice(k, 0.754877666);
        const double t = 3.0 * lattice(k, 0.569840291);
        auto j_of_t = [&](double tt) { return sym.current(x, tt); };
        CHECK(std::abs(fd::d1_central4(j_of_t, t, 1e-3) + sym.x_derivative(x, t)) <
              1e-8);
    }
}

TEST_CASE("mode pairs: closed forms and continuity") {
    const RingSource p1 = mode_pair(1, 2);
    CHECK(p1.rho(0, 0) == doctest::Approx(1.0));
    CHECK(p1.j(0, 0) == doctest::Approx(0.0));
    const RingSource p4 = mode_pair(4, 2);
    CHECK(p4.rho(0, 0) == doctest::Approx(0.0));
    CHECK(p4.j(0, 0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(mode_pair(5, 2), std::out_of_range);
    CHECK_THROWS_AS(mode_pair(0, 2), std::out_of_range);

    for (int i = 1; i <= 4; ++i) {
        const RingSource p = mode_pair(i, 3);
        for (int k = 0; k < 25; ++k) {
            const double x = -kPi + 2 * kPi * lattice(k, 0.754877666);
            const double t = 3.0 * lattice(k, 0.569840291);
            CHECK(std::abs(p.rho_t(x, t) + p.j_theta(x, t)) < 1e-10);
        }
    }
}

TEST_CASE("combined source") {
    const RingSource unit = combined_source({2, 1, 0, 0, 0});
    const RingSource p1 = mode_pair(1, 2);
    for (int k = 0; k < 20; ++k) {
        const double x = -kPi + 2 * kPi * lattice(k, 0.754877666);
        const double t = 3.0 * lattice(k, 0.569840291);
        CHECK(unit.rho(x, t) == p1.rho(x, t));
        CHECK(unit.j(x, t) == p1.j(x, t));
    }

    const RingSource mix = combined_source({2, 1, 1, 1, -1});
    CHECK(mix.rho(kPi / 4, 0.0) == doctest::Approx(1.0).epsilon(1e-14));

    const RingSource zero = combined_source({2, 0, 0, 0, 0});
    CHECK(zero.rho(0.3, 0.7) == 0.0);
    CHECK(zero.j(0.3, 0.7) == 0.0);
}

TEST_CASE("total charge") {
    const RingSource p1 = mode_pair(1, 2);
    CHECK(std::abs(total_charge(p1.rho, 0.4)) < 1e-12);

    const AngularFn constant = [](double, double) { return 3.0; };
    CHECK(total_charge(constant, 1.7) == doctest::Approx(6 * kPi).epsilon(1e-13));

    const RingSource mix = combined_source({2, 1, 1, 1, -1});
    const double q0 = total_charge(mix.rho, 0.0);
    for (double t : {0.3, 1.7, 4.0})
        CHECK(std::abs(total_charge(mix.rho, t) - q0) < 1e-10);
}

TEST_CASE("solutions are bounded backward in time") {
    const WaveSolution sol{compute_fourier_coefficients(
        [](double x) { return std::cos(2 * x) + 0.5 * std::sin(3 * x); },
        [](double x) { return std::cos(x); }, 8)};
    const double bound = sol.spectrum.coefficient_sum();
    for (int k = 0; k < 200; ++k) {
        const double x = -kPi + 2 * kPi * lattice(k, 0.754877666);
        const double t = -80.0 * lattice(k, 0.569840291);
        CHECK(std::abs(sol.evaluate(x, t)) <= bound + 1e-9);
    }
}
