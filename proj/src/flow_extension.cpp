#include "ringradiant/flow_extension.hpp"

#include <cmath>
#include <stdexcept>

#include "ringradiant/numerics.hpp"

namespace ringradiant {

Vec3 ring_current_vector(const RingSource& src, double theta, double t) {
    const double J = src.j(theta, t);
    return {-J * std::sin(theta), J * std::cos(theta), 0.0};
}

namespace {

// Tangential field J(theta(x,y), t) * theta-hat, r-independent extension.
Vec3 tangential_extension(const RingSource& src, double x, double y, double t) {
    const double th = std::atan2(y, x);
    const double J = src.j(th, t);
    return {-J * std::sin(th), J * std::cos(th), 0.0};
}

}  // namespace

double surface_divergence(const RingSource& src, double theta, double t) {
    // 4th-order stencils keep the truncation below the 1e-8 contract
    const double h = 1e-3;
    const double x0 = std::cos(theta), y0 = std::sin(theta);
    auto jx = [&](double x) { return tangential_extension(src, x, y0, t).x; };
    auto jy = [&](double y) { return tangential_extension(src, x0, y, t).y; };
    return fd::d1_central4(jx, x0, h) + fd::d1_central4(jy, y0, h);
}

double BumpProfile::radial(double r) const {
    if (kind == Kind::analytic) {
        if (r <= 0.0) throw std::domain_error("analytic bump undefined on the axis");
        const double s = (r - 1.0) / epsilon;
        return std::exp(-s * s);
    }
    if (r <= 0.0) return 0.0;
    const double s = (r - 1.0) / epsilon;
    if (s * s >= 1.0) return 0.0;
    // normalized: e * exp(-1/(1-s^2)) equals 1 at s=0
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

double BumpProfile::axial(double z) const {
    const double s = z / epsilon;
    if (kind == Kind::analytic) return std::exp(-s * s);
    if (s * s >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

double VolumetricSource::rho(double r, double theta, double z, double t) const {
    if (r == 0.0 && profile.kind == BumpProfile::Kind::compact) return 0.0;
    return profile.axial(z) * profile.radial(r) * ring.rho(theta, t);
}

Vec3 VolumetricSource::current(double r, double theta, double z, double t) const {
    if (r == 0.0 && profile.kind == BumpProfile::Kind::compact) return {};
    const double w = profile.axial(z) * profile.radial(r) * r * ring.j(theta, t);
    return {-w * std::sin(theta), w * std::cos(theta), 0.0};
}

double VolumetricSource::rho_at(const Vec3& p, double t) const {
    const double r = std::hypot(p.x, p.y);
    return rho(r, std::atan2(p.y, p.x), p.z, t);
}

Vec3 VolumetricSource::current_at(const Vec3& p, double t) const {
    const double r = std::hypot(p.x, p.y);
    return current(r, std::atan2(p.y, p.x), p.z, t);
}

double VolumetricSource::continuity_residual(double r, double theta, double z,
                                             double t, double h) const {
    const Vec3 p{r * std::cos(theta), r * std::sin(theta), z};
    const double drho_dt = (rho_at(p, t + h) - rho_at(p, t - h)) / (2.0 * h);
    const double djx = (current_at({p.x + h, p.y, p.z}, t).x -
                        current_at({p.x - h, p.y, p.z}, t).x) /
                       (2.0 * h);
    const double djy = (current_at({p.x, p.y + h, p.z}, t).y -
                        current_at({p.x, p.y - h, p.z}, t).y) /
                       (2.0 * h);
    const double djz = (current_at({p.x, p.y, p.z + h}, t).z -
                        current_at({p.x, p.y, p.z - h}, t).z) /
                       (2.0 * h);
    return drho_dt + djx + djy + djz;
}

VolumetricSource bump_extend(const RingSource& src, const BumpProfile& profile) {
    if (!(profile.epsilon > 0.0 && profile.epsilon < 1.0))
        throw std::invalid_argument("bump_extend: epsilon must be in (0,1)");
    return VolumetricSource{src, profile};
}

double circular_flow_divergence(const std::function<double(double)>& w, double r,
                                double theta) {
    if (r <= 0.0) throw std::domain_error("circular flow: r must be positive");
    const double h = 1e-4;
    const double x0 = r * std::cos(theta), y0 = r * std::sin(theta);
    auto field_x = [&](double x, double y) {
        return -w(std::hypot(x, y)) * std::sin(std::atan2(y, x));
    };
    auto field_y = [&](double x, double y) {
        return w(std::hypot(x, y)) * std::cos(std::atan2(y, x));
    };
    return (field_x(x0 + h, y0) - field_x(x0 - h, y0)) / (2.0 * h) +
           (field_y(x0, y0 + h) - field_y(x0, y0 - h)) / (2.0 * h);
}

double density_weighted_flow_divergence(const std::function<double(double)>& rho,
                                        double r, double theta) {
    if (r <= 0.0) throw std::domain_error("circular flow: r must be positive");
    const double h = 1e-4;
    const double x0 = r * std::cos(theta), y0 = r * std::sin(theta);
    auto field_x = [&](double x, double y) {
        const double th = std::atan2(y, x);
        return -rho(th) * std::sin(th);
    };
    auto field_y = [&](double x, double y) {
        const double th = std::atan2(y, x);
        return rho(th) * std::cos(th);
    };
    return (field_x(x0 + h, y0) - field_x(x0 - h, y0)) / (2.0 * h) +
           (field_y(x0, y0 + h) - field_y(x0, y0 - h)) / (2.0 * h);
}

namespace {

double reconstruct_radial_impl(const std::function<double(double, double)>& dw2,
                               const std::function<double(double)>& boundary_g,
                               double epsilon, double r0, double theta0) {
    const bool disc = (epsilon == 1.0);
    if (disc) {
        if (r0 < 0.0) throw std::domain_error("reconstruct_radial: r0 < 0");
        if (r0 == 0.0) return -dw2(0.0, theta0);  // L'Hopital limit
        Fn1 f = [&](double r) { return -dw2(r, theta0); };
        return integrate_adaptive(f, 0.0, r0, 1e-10) / r0;
    }
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("reconstruct_radial: epsilon in (0,1) or == 1");
    if (r0 <= 1.0 - epsilon)
        throw std::domain_error("reconstruct_radial: r0 outside annulus");
    Fn1 f = [&](double r) { return -dw2(r, theta0); };
    const double integral = integrate_adaptive(f, 1.0 - epsilon, r0, 1e-10);
    return ((1.0 - epsilon) * boundary_g(theta0) + integral) / r0;
}

}  // namespace

Vec3 AnnulusFlow::field(double x, double y) const {
    const double r = std::hypot(x, y), th = std::atan2(y, x);
    const double wr = w1(r, th), wt = w2(r, th);
    return {wr * std::cos(th) - wt * std::sin(th),
            wr * std::sin(th) + wt * std::cos(th), 0.0};
}

AnnulusFlow reconstruct_annulus_flow(const std::function<double(double, double)>& w2,
                                     const std::function<double(double)>& boundary_g,
                                     double epsilon, double delta) {
    if (!(epsilon > 0.0 && epsilon < 1.0) || delta < 0.0)
        throw std::invalid_argument("reconstruct_annulus_flow: bad annulus bounds");
    AnnulusFlow flow;
    flow.w2 = w2;
    flow.inner = 1.0 - epsilon;
    flow.outer = 1.0 + delta;
    flow.w1 = [w2, boundary_g, epsilon](double r, double th) {
        return reconstruct_radial(w2, boundary_g, epsilon, r, th);
    };
    return flow;
}

double reconstruct_radial(const std::function<double(double, double)>& w2,
                          const std::function<double(double)>& boundary_g,
                          double epsilon, double r0, double theta0) {
    // 4th-order theta stencil keeps the derivative error below the 1e-10
    // tolerance of the disc-case contract.
    auto dw2 = [&w2](double r, double th) {
        const double h = 1e-3;
        return (-w2(r, th + 2 * h) + 8 * w2(r, th + h) - 8 * w2(r, th - h) +
                w2(r, th - 2 * h)) /
               (12.0 * h);
    };
    return reconstruct_radial_impl(dw2, boundary_g, epsilon, r0, theta0);
}

double reconstruct_radial(const std::function<double(double, double)>& w2_dtheta,
                          const std::function<double(double)>& boundary_g,
                          double epsilon, double r0, double theta0,
                          bool derivative_supplied) {
    if (!derivative_supplied)
        return reconstruct_radial(w2_dtheta, boundary_g, epsilon, r0, theta0);
    return reconstruct_radial_impl(w2_dtheta, boundary_g, epsilon, r0, theta0);
}

}  // namespace ringradiant
