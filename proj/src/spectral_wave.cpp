#include "ringradiant/spectral_wave.hpp"

#include <cmath>
#include <stdexcept>

#include "ringradiant/numerics.hpp"

namespace ringradiant {

bool FourierSpectrum::symmetric() const {
    for (int m = 1; m <= cutoff; ++m)
        if (b[m] != 0.0 || b_prime[m] != 0.0) return false;
    return true;
}

double FourierSpectrum::coefficient_sum() const {
    double s = std::abs(a[0]) + std::abs(a_prime[0]);
    for (int m = 1; m <= cutoff; ++m)
        s += 2.0 * (std::abs(a[m]) + std::abs(b[m]) + std::abs(a_prime[m]) / m +
                    std::abs(b_prime[m]) / m);
    return s;
}

FourierSpectrum compute_fourier_coefficients(const std::function<double(double)>& psi0,
                                             const std::function<double(double)>& psi1,
                                             int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
    FourierSpectrum s;
    s.cutoff = cutoff;
    s.a.assign(cutoff + 1, 0.0);
    s.b.assign(cutoff + 1, 0.0);
    s.a_prime.assign(cutoff + 1, 0.0);
    s.b_prime.assign(cutoff + 1, 0.0);

    auto coeff = [](const std::function<double(double)>& f, int m, bool use_sin) {
        Fn1 integrand = [&f, m, use_sin](double x) {
            return f(x) * (use_sin ? std::sin(m * x) : std::cos(m * x));
        };
        const double v = integrate_periodic(integrand, kCoeffQuadTol) / (2.0 * kPi);
        // below the quadrature tolerance a coefficient is indistinguishable
        // from zero; snapping keeps symmetric data exactly symmetric
        return std::abs(v) < 1e-13 ? 0.0 : v;
    };

    s.a[0] = coeff(psi0, 0, false);
    s.a_prime[0] = coeff(psi1, 0, false);
    for (int m = 1; m <= cutoff; ++m) {
        s.a[m] = coeff(psi0, m, false);
        s.b[m] = coeff(psi0, m, true);
        s.a_prime[m] = coeff(psi1, m, false);
        s.b_prime[m] = coeff(psi1, m, true);
    }
    return s;
}

double WaveSolution::evaluate(double x, double t) const {
    const FourierSpectrum& s = spectrum;
    double v = s.a[0] + t * s.a_prime[0];
    for (int m = 1; m <= s.cutoff; ++m) {
        const double cx = std::cos(m * x), sx = std::sin(m * x);
        const double ct = std::cos(m * t), st = std::sin(m * t);
        v += 2.0 * (s.a[m] * cx * ct + s.b[m] * sx * ct +
                    s.a_prime[m] / m * cx * st + s.b_prime[m] / m * sx * st);
    }
    return v;
}

double WaveSolution::time_derivative(double x, double t) const {
    const FourierSpectrum& s = spectrum;
    double v = s.a_prime[0];
    for (int m = 1; m <= s.cutoff; ++m) {
        const double cx = std::cos(m * x), sx = std::sin(m * x);
        const double ct = std::cos(m * t), st = std::sin(m * t);
        v += 2.0 * (-m * s.a[m] * cx * st - m * s.b[m] * sx * st +
                    s.a_prime[m] * cx * ct + s.b_prime[m] * sx * ct);
    }
    return v;
}

double WaveSolution::x_derivative(double x, double t) const {
    const FourierSpectrum& s = spectrum;
    double v = 0.0;
    for (int m = 1; m <= s.cutoff; ++m) {
        const double cx = std::cos(m * x), sx = std::sin(m * x);
        const double ct = std::cos(m * t), st = std::sin(m * t);
        v += 2.0 * (-m * s.a[m] * sx * ct + m * s.b[m] * cx * ct -
                    s.a_prime[m] * sx * st + s.b_prime[m] * cx * st);
    }
    return v;
}

// Term-wise integral of -dPsi/dt from -pi to x. The sign factor (-1)^m enters
// through cos(-m pi).
double WaveSolution::current(double x, double t) const {
    const FourierSpectrum& s = spectrum;
    double v = -s.a_prime[0] * (kPi + x);
    for (int m = 1; m <= s.cutoff; ++m) {
        const double cx = std::cos(m * x), sx = std::sin(m * x);
        const double ct = std::cos(m * t), st = std::sin(m * t);
        const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        v += 2.0 * (s.a[m] * sx * st + s.b[m] * (sgn - cx) * st -
                    s.a_prime[m] / m * sx * ct + s.b_prime[m] / m * (cx - sgn) * ct);
    }
    return v;
}

double WaveSolution::current_time_derivative(double x, double t) const {
    const FourierSpectrum& s = spectrum;
    double v = 0.0;
    for (int m = 1; m <= s.cutoff; ++m) {
        const double cx = std::cos(m * x), sx = std::sin(m * x);
        const double ct = std::cos(m * t), st = std::sin(m * t);
        const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        v += 2.0 * (m * s.a[m] * sx * ct + m * s.b[m] * (sgn - cx) * ct +
                    s.a_prime[m] * sx * st - s.b_prime[m] * (cx - sgn) * st);
    }
    return v;
}

double WaveSolution::current_x_derivative(double x, double t) const {
    return -time_derivative(x, t);
}

RingSource WaveSolution::ring_source() const {
    RingSource src;
    WaveSolution sol = *this;  // value copy keeps the callables self-contained
    src.rho = [sol](double th, double t) { return sol.evaluate(th, t); };
    src.rho_t = [sol](double th, double t) { return sol.time_derivative(th, t); };
    src.rho_theta = [sol](double th, double t) { return sol.x_derivative(th, t); };
    src.j = [sol](double th, double t) { return sol.current(th, t); };
    src.j_t = [sol](double th, double t) { return sol.current_time_derivative(th, t); };
    src.j_theta = [sol](double th, double t) { return sol.current_x_derivative(th, t); };
    src.m_period = 2.0 * kPi;  // common period of all integer modes
    return src;
}

RingSource mode_pair(int i, int m) {
    if (i < 1 || i > 4) throw std::out_of_range("mode_pair: index must be in 1..4");
    if (m < 1) throw std::invalid_argument("mode_pair: m must be >= 1");
    ModeWeights w;
    w.m = m;
    (i == 1 ? w.a1 : i == 2 ? w.a2 : i == 3 ? w.a3 : w.a4) = 1.0;
    return combined_source(w);
}

RingSource combined_source(const ModeWeights& w) {
    if (w.m < 1) throw std::invalid_argument("combined_source: m must be >= 1");
    const double m = w.m;
    const double a1 = w.a1, a2 = w.a2, a3 = w.a3, a4 = w.a4;
    RingSource src;
    src.rho = [=](double x, double t) {
        const double cx = std::cos(m * x), sx = std::sin(m * x);
        const double ct = std::cos(m * t), st = std::sin(m * t);
        return a1 * cx * ct + a2 * cx * st + a3 * sx * ct + a4 * sx * st;
    };
    src.rho_t = [=](double x, double t) {
        const double cx = std::cos(m * x), sx = std::sin(m * x);
        const double ct = std::cos(m * t), st = std::sin(m * t);
        return m * (-a1 * cx * st + a2 * cx * ct - a3 * sx * st + a4 * sx * ct);
    };
    src.rho_theta = [=](double x, double t) {
        const double cx = std::cos(m * x), sx = std::sin(m * x);
        const double ct = std::cos(m * t), st = std::sin(m * t);
        return m * (-a1 * sx * ct - a2 * sx * st + a3 * cx * ct + a4 * cx * st);
    };
    src.j = [=](double x, double t) {
        const double cx = std::cos(m * x), sx = std::sin(m * x);
        const double ct = std::cos(m * t), st = std::sin(m * t);
        return a1 * sx * st - a2 * sx * ct - a3 * cx * st + a4 * cx * ct;
    };
    src.j_t = [=](double x, double t) {
        const double cx = std::cos(m * x), sx = std::sin(m * x);
        const double ct = std::cos(m * t), st = std::sin(m * t);
        return m * (a1 * sx * ct + a2 * sx * st - a3 * cx * ct - a4 * cx * st);
    };
    src.j_theta = [=](double x, double t) {
        const double cx = std::cos(m * x), sx = std::sin(m * x);
        const double ct = std::cos(m * t), st = std::sin(m * t);
        return m * (a1 * cx * st - a2 * cx * ct + a3 * sx * st - a4 * sx * ct);
    };
    src.m_period = kPi / m;
    return src;
}

double total_charge(const AngularFn& density, double t) {
    Fn1 f = [&density, t](double x) { return density(x, t); };
    return integrate_periodic(f, 1e-12);
}

}  // namespace ringradiant
