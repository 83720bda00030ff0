#pragma once
#include <functional>

namespace ringradiant {

/// Scalar field on the circle: (theta, t) -> value.
using AngularFn = std::function<double(double, double)>;

/// Charge density and scalar current on S^1 with closed-form partials.
/// The derivative callables keep numerical differentiation out of the
/// retarded-time integrands; sources built from mode pairs or spectra
/// populate them analytically.
struct RingSource {
    AngularFn rho;        // rho(theta, t)
    AngularFn rho_t;      // d rho / dt
    AngularFn rho_theta;  // d rho / d theta
    AngularFn j;          // J(theta, t)
    AngularFn j_t;        // d J / dt
    AngularFn j_theta;    // d J / d theta
    double m_period = 0.0;  // time period hint (pi/m, or pi/(m c) after rescaling)
};

}  // namespace ringradiant
