#pragma once
#include <functional>

#include "ringradiant/ring_source.hpp"
#include "ringradiant/vec3.hpp"

namespace ringradiant {

/// Current 3-vector of a ring source: J(theta,t) * (-sin, cos, 0).
Vec3 ring_current_vector(const RingSource& src, double theta, double t);

/// Planar divergence of the tangential extension of K at radius 1, by
/// central differences in Cartesian coordinates. Equals dJ/dtheta.
double surface_divergence(const RingSource& src, double theta, double t);

/// Smooth radial/axial profiles thickening the ring into an annular shell.
/// Profiles are normalized so the restriction at r=1, z=0 is exactly the
/// ring source (the raw compact bump has Phi(1) = e^-1).
struct BumpProfile {
    enum class Kind { compact, analytic };
    double epsilon = 0.2;
    Kind kind = Kind::compact;

    double radial(double r) const;  // Phi_eps, compact kind exactly 0 off support
    double axial(double z) const;   // Phi_{1,eps}
};

/// Bump-extended (rho_1, Jbar) on the shell Ann(1,eps) x (-eps,eps).
/// The current carries an extra radial factor r so that the 3-D continuity
/// equation holds identically off r=1 (the plain product only satisfies it
/// on the ring itself); restriction at r=1, z=0 is unchanged.
struct VolumetricSource {
    RingSource ring;
    BumpProfile profile;

    double rho(double r, double theta, double z, double t) const;
    Vec3 current(double r, double theta, double z, double t) const;

    /// Cartesian views, for finite-difference continuity checks.
    double rho_at(const Vec3& p, double t) const;
    Vec3 current_at(const Vec3& p, double t) const;

    /// |d rho/dt + div J| by central differences in Cartesian coordinates.
    double continuity_residual(double r, double theta, double z, double t,
                               double h = 1e-4) const;
};

VolumetricSource bump_extend(const RingSource& src, const BumpProfile& profile);

/// Divergence of w(r) * (-sin, cos) by central differences; zero for any
/// smooth w: circular flows conserve charge. Throws for r <= 0.
double circular_flow_divergence(const std::function<double(double)>& w, double r,
                                double theta);

/// Planar divergence of rho(theta) * (-sin, cos): equals (1/r) drho/dtheta.
/// Used by the circular-flow converse tests.
double density_weighted_flow_divergence(const std::function<double(double)>& rho,
                                        double r, double theta);

/// Planar flow on an annulus decomposed as w1 * rhat + w2 * thetahat with
/// rhat = (cos, sin), thetahat = (-sin, cos).
struct AnnulusFlow {
    std::function<double(double, double)> w1;  // (r, theta) -> radial component
    std::function<double(double, double)> w2;  // (r, theta) -> angular component
    double inner = 0.0;  // 1 - eps
    double outer = 0.0;  // 1 + delta

    /// Cartesian field vector at (x, y).
    Vec3 field(double x, double y) const;
};

/// Radial flow component recovered from the angular component and a boundary
/// condition (annulus case), or from the angular component alone (disc case,
/// epsilon == 1). The r0 -> 0 disc limit is the L'Hopital value
/// -dw2/dtheta(0, theta0).
double reconstruct_radial(const std::function<double(double, double)>& w2,
                          const std::function<double(double)>& boundary_g,
                          double epsilon, double r0, double theta0);

/// Full divergence-free flow from a chosen angular component and inner
/// boundary value for the radial one.
AnnulusFlow reconstruct_annulus_flow(const std::function<double(double, double)>& w2,
                                     const std::function<double(double)>& boundary_g,
                                     double epsilon, double delta);

/// Same, with an analytic theta-derivative of w2 supplied by the caller.
double reconstruct_radial(const std::function<double(double, double)>& w2_dtheta,
                          const std::function<double(double)>& boundary_g,
                          double epsilon, double r0, double theta0,
                          bool derivative_supplied);

}  // namespace ringradiant
