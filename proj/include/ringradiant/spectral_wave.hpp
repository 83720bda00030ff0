#pragma once
#include <functional>
#include <vector>

#include "ringradiant/ring_source.hpp"

namespace ringradiant {

/// Truncated Fourier data (a_m, b_m, a'_m, b'_m) of the initial conditions.
/// a,a_prime are indexed 0..M, b,b_prime 1..M (stored with a dummy 0 slot).
struct FourierSpectrum {
    int cutoff = 0;
    std::vector<double> a, b, a_prime, b_prime;

    bool symmetric() const;  // b == b' == 0
    double coefficient_sum() const;  // |a0| + 2*sum(|a_m|+|b_m|+|a'_m|/m+|b'_m|/m)
};

inline constexpr int kDefaultCutoff = 32;
inline constexpr double kCoeffQuadTol = 1e-12;

/// Fourier coefficients of (psi0, psi1) by quadrature of the defining
/// integrals (1/2pi) * integral f * {cos,sin}(m x) dx.
FourierSpectrum compute_fourier_coefficients(const std::function<double(double)>& psi0,
                                             const std::function<double(double)>& psi1,
                                             int cutoff = kDefaultCutoff);

/// Standing-wave solution of Psi_tt = Psi_xx on [-pi,pi] with the spectrum's
/// initial data.
struct WaveSolution {
    FourierSpectrum spectrum;

    /// Truncated series a0 + t a'0 + 2*sum[a_m cos cos + b_m sin cos
    /// + (a'_m/m) cos sin + (b'_m/m) sin sin].
    double evaluate(double x, double t) const;
    /// d/dt of the series.
    double time_derivative(double x, double t) const;
    /// J(x,t) = integral_{-pi}^{x} -dPsi/dt, term-wise closed form.
    double current(double x, double t) const;
    double current_time_derivative(double x, double t) const;
    double current_x_derivative(double x, double t) const;
    double x_derivative(double x, double t) const;

    /// (rho, J) with closed-form partials, for downstream field evaluation.
    RingSource ring_source() const;
};

inline double evaluate_solution(const WaveSolution& sol, double x, double t) {
    return sol.evaluate(x, t);
}
inline double induced_current(const WaveSolution& sol, double x, double t) {
    return sol.current(x, t);
}

/// Combination weights for the four fundamental mode pairs.
struct ModeWeights {
    int m = 1;
    double a1 = 0, a2 = 0, a3 = 0, a4 = 0;
};

/// Fundamental pair i in 1..4:
///   rho^1 = cos cos / J^1 = sin sin      rho^2 = cos sin / J^2 = -sin cos
///   rho^3 = sin cos / J^3 = -cos sin     rho^4 = sin sin / J^4 = cos cos
/// (arguments m*x, m*t). Throws std::out_of_range for i outside 1..4.
RingSource mode_pair(int i, int m);

/// Pointwise weighted sum of the four fundamental pairs.
RingSource combined_source(const ModeWeights& w);

/// Quadrature of integral_{-pi}^{pi} rho(x, t) dx.
double total_charge(const AngularFn& density, double t);

}  // namespace ringradiant
