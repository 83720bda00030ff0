#pragma once
#include <functional>
#include <stdexcept>
#include <vector>

namespace ringradiant {

inline constexpr double kPi = 3.14159265358979323846;

/// Thrown when an integrand produces a non-finite value.
struct InputDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown when a quadrature cannot reach the requested tolerance.
struct ToleranceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Fn1 = std::function<double(double)>;

/// Composite trapezoid for periodic integrands over [a, a+period).
/// Spectrally accurate for smooth periodic f.
double trapezoid_periodic(const Fn1& f, double a, double period, int nodes);

/// Adaptive Simpson with absolute tolerance. Throws ToleranceError if the
/// recursion bottoms out before the estimate settles, InputDomainError on
/// non-finite integrand values.
double integrate_adaptive(const Fn1& f, double a, double b, double abs_tol,
                          int max_depth = 48);

/// Adaptive first, trapezoid fallback (periodic integrands on [-pi,pi]).
double integrate_periodic(const Fn1& f, double abs_tol, int fallback_nodes = 4096);

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre nodes/weights by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

namespace fd {

/// Central difference stencils. The 4th-order variants are used where
/// tolerances are tighter than 2nd-order truncation allows.
inline double d1_central(const Fn1& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}
inline double d1_central4(const Fn1& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}
inline double d2_central(const Fn1& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace fd

}  // namespace ringradiant
