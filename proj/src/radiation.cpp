#include "ringradiant/radiation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "ringradiant/numerics.hpp"

namespace ringradiant {

int worker_count() {
    if (const char* env = std::getenv("RINGRADIANT_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace {

// Runs body(0..n-1) on a worker pool. Each index writes only its own slot,
// so results are bitwise independent of the schedule.
void parallel_for(int n, const std::function<void(int)>& body) {
    const int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

struct SphereGrid {
    std::vector<double> sin_phi, cos_phi, wphi;  // Gauss-Legendre mapped to [0,pi]
    std::vector<double> theta0;                  // trapezoid nodes
    double wtheta0 = 0.0;

    SphereGrid(const SphereRule& rule) {
        if (rule.phi_nodes < 16 || rule.theta_nodes < 16)
            throw std::invalid_argument("sphere rule: node counts must be >= 16");
        const GaussRule gl = gauss_legendre(rule.phi_nodes);
        sin_phi.resize(rule.phi_nodes);
        cos_phi.resize(rule.phi_nodes);
        wphi.resize(rule.phi_nodes);
        for (int i = 0; i < rule.phi_nodes; ++i) {
            const double phi = 0.5 * kPi * (gl.nodes[i] + 1.0);
            sin_phi[i] = std::sin(phi);
            cos_phi[i] = std::cos(phi);
            wphi[i] = 0.5 * kPi * gl.weights[i];
        }
        theta0.resize(rule.theta_nodes);
        for (int l = 0; l < rule.theta_nodes; ++l)
            theta0[l] = -kPi + 2.0 * kPi * l / rule.theta_nodes;
        wtheta0 = 2.0 * kPi / rule.theta_nodes;
    }
};

// Direct-field sphere engine for weighted mode sources. The source-to-point
// distance depends on theta - theta0 only, so the retarded-phase tables are
// shared across the sphere's azimuth ring; fields are accumulated in the
// rotated frame where the evaluation point has azimuth 0, and fluxes are
// rotation-invariant.
class RingFieldEngine {
public:
    RingFieldEngine(const ModeWeights& w, double r, double c,
                    const PowerOptions& opt)
        : m_(w.m),
          omega_(opt.velocity_rescaled ? w.m * c : w.m),
          jscale_(opt.velocity_rescaled ? c : 1.0),
          c_(c),
          r_(r),
          a1_(w.a1), a2_(w.a2), a3_(w.a3), a4_(w.a4),
          bg_rho_(opt.background_rho),
          bg_j_(opt.background_j),
          grid_(opt.sphere) {
        if (!(r > 1.0)) throw std::domain_error("instantaneous_power: require r > 1");
        if (opt.field_nodes < 64)
            throw std::invalid_argument("field quadrature: nodes < 64");
        nth_ = opt.field_nodes;
        wth_ = 2.0 * kPi / nth_;

        const int nphi = opt.sphere.phi_nodes;
        cosd_.resize(nth_);
        sind_.resize(nth_);
        cmd_.resize(nth_);
        smd_.resize(nth_);
        for (int k = 0; k < nth_; ++k) {
            const double d = -kPi + 2.0 * kPi * k / nth_;
            cosd_[k] = std::cos(d);
            sind_[k] = std::sin(d);
            cmd_[k] = std::cos(m_ * d);
            smd_[k] = std::sin(m_ * d);
        }
        cwR_.resize(static_cast<size_t>(nphi) * nth_);
        swR_.resize(cwR_.size());
        invR_.resize(cwR_.size());
        invR2_.resize(cwR_.size());
        invR3_.resize(cwR_.size());
        for (int i = 0; i < nphi; ++i) {
            const double rho_xy = r_ * grid_.sin_phi[i];
            for (int k = 0; k < nth_; ++k) {
                const double R2 = r_ * r_ + 1.0 - 2.0 * rho_xy * cosd_[k];
                const double R = std::sqrt(R2);
                const size_t idx = static_cast<size_t>(i) * nth_ + k;
                cwR_[idx] = std::cos(omega_ * R / c_);
                swR_[idx] = std::sin(omega_ * R / c_);
                invR_[idx] = 1.0 / R;
                invR2_[idx] = 1.0 / R2;
                invR3_[idx] = invR_[idx] * invR2_[idx];
            }
        }
    }

    struct PointFields {
        Vec3 E1, E2, E3, B1, B2;
    };

    // Fields in the rotated frame at sphere node (i, l) and time t.
    PointFields fields_at(int i, int l, double t) const {
        const double theta0 = grid_.theta0[l];
        const double cm0 = std::cos(m_ * theta0), sm0 = std::sin(m_ * theta0);
        const double w1 = a1_ * cm0 + a3_ * sm0;
        const double w3 = -a1_ * sm0 + a3_ * cm0;
        const double w2 = a2_ * cm0 + a4_ * sm0;
        const double w4 = -a2_ * sm0 + a4_ * cm0;
        const double cwt = std::cos(omega_ * t), swt = std::sin(omega_ * t);
        const double rho_xy = r_ * grid_.sin_phi[i];
        const double z = r_ * grid_.cos_phi[i];
        const size_t row = static_cast<size_t>(i) * nth_;

        // The integrand depends on the source angle only through
        // delta = theta - theta0 (plus the rotated weights), and the
        // delta-grid covers the full period, so the quadrature runs
        // directly over the cached tables.
        PointFields f;
        for (int k = 0; k < nth_; ++k) {
            const size_t idx = row + k;
            const double CT = cwt * cwR_[idx] + swt * swR_[idx];  // cos(w t_r)
            const double ST = swt * cwR_[idx] - cwt * swR_[idx];  // sin(w t_r)
            const double cd = cosd_[k], sd = sind_[k];
            const double cmdk = cmd_[k], smdk = smd_[k];

            const double rho = (w1 * cmdk + w3 * smdk) * CT +
                               (w2 * cmdk + w4 * smdk) * ST + bg_rho_;
            const double rho_t = omega_ * (-(w1 * cmdk + w3 * smdk) * ST +
                                           (w2 * cmdk + w4 * smdk) * CT);
            const double J = jscale_ * ((w1 * smdk - w3 * cmdk) * ST +
                                        (w4 * cmdk - w2 * smdk) * CT) +
                             bg_j_;
            const double J_t = jscale_ * omega_ * ((w1 * smdk - w3 * cmdk) * CT -
                                                   (w4 * cmdk - w2 * smdk) * ST);

            const Vec3 d{rho_xy - cd, -sd, z};
            const Vec3 that{-sd, cd, 0.0};
            const Vec3 txd{cd * z, sd * z, 1.0 - rho_xy * cd};

            f.E1 += (rho * invR3_[idx]) * d;
            f.E2 += (rho_t * invR2_[idx] / c_) * d;
            f.E3 -= (J_t * invR_[idx] / (c_ * c_)) * that;
            f.B1 += (J * invR3_[idx]) * txd;
            f.B2 += (J_t * invR2_[idx] / c_) * txd;
        }
        const double we = wth_ / (4.0 * kPi * kEps0);
        const double wb = wth_ * kMu0 / (4.0 * kPi);
        f.E1 *= we;
        f.E2 *= we;
        f.E3 *= we;
        f.B1 *= wb;
        f.B2 *= wb;
        return f;
    }

    FluxRecord power(double t) const {
        FluxRecord rec;
        rec.radius = r_;
        rec.time = t;
        double p11 = 0, p12 = 0, p21 = 0, p22 = 0, p31 = 0, p32 = 0, ptot = 0;
        for (int i = 0; i < static_cast<int>(grid_.sin_phi.size()); ++i) {
            const Vec3 normal{grid_.sin_phi[i], 0.0, grid_.cos_phi[i]};
            const double wrow = r_ * r_ * grid_.sin_phi[i] * grid_.wphi[i] *
                                grid_.wtheta0;
            for (int l = 0; l < grid_theta_nodes(); ++l) {
                const PointFields f = fields_at(i, l, t);
                const Vec3 E = f.E1 + f.E2 + f.E3;
                const Vec3 B = f.B1 + f.B2;
                ptot += wrow * dot(cross(E, B), normal);
                p11 += wrow * dot(cross(f.E1, f.B1), normal);
                p12 += wrow * dot(cross(f.E1, f.B2), normal);
                p21 += wrow * dot(cross(f.E2, f.B1), normal);
                p22 += wrow * dot(cross(f.E2, f.B2), normal);
                p31 += wrow * dot(cross(f.E3, f.B1), normal);
                p32 += wrow * dot(cross(f.E3, f.B2), normal);
            }
        }
        rec.P = ptot;
        rec.parts = {{"E1xB1", p11}, {"E1xB2", p12}, {"E2xB1", p21},
                     {"E2xB2", p22}, {"E3xB1", p31}, {"E3xB2", p32}};
        return rec;
    }

    int grid_theta_nodes() const { return static_cast<int>(grid_.theta0.size()); }
    const SphereGrid& grid() const { return grid_; }

private:
    int m_;
    double omega_, jscale_, c_, r_;
    double a1_, a2_, a3_, a4_, bg_rho_, bg_j_;
    SphereGrid grid_;
    int nth_ = 0;
    double wth_ = 0.0;
    std::vector<double> cosd_, sind_, cmd_, smd_;
    std::vector<double> cwR_, swR_, invR_, invR2_, invR3_;
};

// Far-field engine: the basis integrals are time-independent, so they are
// evaluated once per sphere node and recombined per time sample.
class FarFieldSphere {
public:
    FarFieldSphere(const ModeWeights& w, double r, double c,
                   const PowerOptions& opt)
        : w_(w), r_(r), grid_(opt.sphere) {
        if (!(r > 1.0)) throw std::domain_error("instantaneous_power: require r > 1");
        if (opt.velocity_rescaled)
            throw std::invalid_argument(
                "far_field mode implements the unit-speed convention; rescale "
                "radii/time externally");
        const int nphi = opt.sphere.phi_nodes;
        const int nth0 = opt.sphere.theta_nodes;
        basis_.reserve(static_cast<size_t>(nphi) * nth0);
        for (int i = 0; i < nphi; ++i)
            for (int l = 0; l < nth0; ++l) {
                const Vec3 p{r * grid_.sin_phi[i] * std::cos(grid_.theta0[l]),
                             r * grid_.sin_phi[i] * std::sin(grid_.theta0[l]),
                             r * grid_.cos_phi[i]};
                basis_.push_back(far_field_basis(w.m, {p, 0.0}, c, opt.field_nodes));
            }
    }

    FluxRecord power(double t) const {
        FluxRecord rec;
        rec.radius = r_;
        rec.time = t;
        double p22 = 0, p32 = 0;
        const int nth0 = static_cast<int>(grid_.theta0.size());
        for (int i = 0; i < static_cast<int>(grid_.sin_phi.size()); ++i) {
            const double wrow =
                r_ * r_ * grid_.sin_phi[i] * grid_.wphi[i] * grid_.wtheta0;
            for (int l = 0; l < nth0; ++l) {
                const Vec3 normal{grid_.sin_phi[i] * std::cos(grid_.theta0[l]),
                                  grid_.sin_phi[i] * std::sin(grid_.theta0[l]),
                                  grid_.cos_phi[i]};
                const FarFieldTerms f =
                    far_field_terms(w_, basis_[static_cast<size_t>(i) * nth0 + l], t);
                p22 += wrow * dot(cross(f.E2, f.B2), normal);
                p32 += wrow * dot(cross(f.E3, f.B2), normal);
            }
        }
        rec.parts = {{"E2xB2", p22}, {"E3xB2", p32}};
        rec.P = p22 + p32;
        return rec;
    }

private:
    ModeWeights w_;
    double r_;
    SphereGrid grid_;
    std::vector<FarFieldBasis> basis_;
};

}  // namespace

double sphere_flux(const std::function<Vec3(const Vec3&)>& vector_field, double r,
                   int nodes_phi, int nodes_theta) {
    SphereRule rule{nodes_phi, nodes_theta};
    const SphereGrid grid(rule);
    double flux = 0.0;
    for (int i = 0; i < nodes_phi; ++i) {
        const double wrow = r * r * grid.sin_phi[i] * grid.wphi[i] * grid.wtheta0;
        for (int l = 0; l < nodes_theta; ++l) {
            const Vec3 normal{grid.sin_phi[i] * std::cos(grid.theta0[l]),
                              grid.sin_phi[i] * std::sin(grid.theta0[l]),
                              grid.cos_phi[i]};
            flux += wrow * dot(vector_field(r * normal), normal);
        }
    }
    return flux;
}

FluxRecord instantaneous_power(const ModeWeights& w, double r, double t, double c,
                               PowerMode mode, const PowerOptions& opt) {
    if (mode == PowerMode::direct) return RingFieldEngine(w, r, c, opt).power(t);
    return FarFieldSphere(w, r, c, opt).power(t);
}

CycleRecord cycle_power(const ModeWeights& w, double r, double t0, double c,
                        int time_nodes, PowerMode mode, const PowerOptions& opt) {
    if (time_nodes < 32) throw std::invalid_argument("cycle_power: time_nodes < 32");
    const double period =
        opt.velocity_rescaled ? kPi / (w.m * c) : kPi / w.m;
    CycleRecord rec;
    rec.radius = r;
    rec.t0 = t0;
    rec.period = period;

    std::vector<double> powers(time_nodes, 0.0);
    if (mode == PowerMode::direct) {
        const RingFieldEngine engine(w, r, c, opt);
        parallel_for(time_nodes, [&](int j) {
            powers[j] = engine.power(t0 + period * j / time_nodes).P;
        });
    } else {
        const FarFieldSphere engine(w, r, c, opt);
        parallel_for(time_nodes, [&](int j) {
            powers[j] = engine.power(t0 + period * j / time_nodes).P;
        });
    }
    double sum = 0.0;
    for (double p : powers) sum += p;  // periodic trapezoid == rectangle sum
    rec.integral = sum * period / time_nodes;
    return rec;
}

SweepPoint evaluate_sweep_point(const ModeWeights& w, double r, double t0, double c,
                                int time_nodes, PowerMode mode,
                                const PowerOptions& opt) {
    if (time_nodes < 32) throw std::invalid_argument("sweep: time_nodes < 32");
    const double period = opt.velocity_rescaled ? kPi / (w.m * c) : kPi / w.m;
    SweepPoint out;
    out.cycle.radius = r;
    out.cycle.t0 = t0;
    out.cycle.period = period;

    std::vector<double> powers(time_nodes, 0.0);
    auto run = [&](const auto& engine) {
        out.at_t0 = engine.power(t0);
        powers[0] = out.at_t0.P;
        parallel_for(time_nodes - 1, [&](int j) {
            powers[j + 1] = engine.power(t0 + period * (j + 1) / time_nodes).P;
        });
    };
    if (mode == PowerMode::direct)
        run(RingFieldEngine(w, r, c, opt));
    else
        run(FarFieldSphere(w, r, c, opt));
    double sum = 0.0;
    for (double p : powers) sum += p;
    out.cycle.integral = sum * period / time_nodes;
    return out;
}

const Vec3& basis_member(const FarFieldBasis& b, const std::string& name) {
    if (name == "Gamma") return b.Gamma;
    if (name == "GammaP") return b.GammaP;
    if (name == "GammaPP") return b.GammaPP;
    if (name == "GammaPPP") return b.GammaPPP;
    if (name == "GammaPPPP") return b.GammaPPPP;
    if (name == "GammaPPPPP") return b.GammaPPPPP;
    if (name == "Delta") return b.Delta;
    if (name == "DeltaP") return b.DeltaP;
    if (name == "DeltaPP") return b.DeltaPP;
    if (name == "DeltaPPP") return b.DeltaPPP;
    if (name == "DeltaPPPP") return b.DeltaPPPP;
    if (name == "DeltaPPPPP") return b.DeltaPPPPP;
    throw std::invalid_argument("unknown basis member: " + name);
}

std::vector<BasisCrossFlux> basis_cross_fluxes(
    int m, double r, double c,
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const SphereRule& rule, int field_nodes) {
    const SphereGrid grid(rule);
    std::vector<BasisCrossFlux> out(pairs.size());
    for (size_t q = 0; q < pairs.size(); ++q) {
        out[q].first = pairs[q].first;
        out[q].second = pairs[q].second;
    }
    const int nth0 = rule.theta_nodes;
    std::vector<FarFieldBasis> basis(static_cast<size_t>(rule.phi_nodes) * nth0);
    parallel_for(rule.phi_nodes, [&](int i) {
        for (int l = 0; l < nth0; ++l) {
            const Vec3 p{r * grid.sin_phi[i] * std::cos(grid.theta0[l]),
                         r * grid.sin_phi[i] * std::sin(grid.theta0[l]),
                         r * grid.cos_phi[i]};
            basis[static_cast<size_t>(i) * nth0 + l] =
                far_field_basis(m, {p, 0.0}, c, field_nodes);
        }
    });
    for (int i = 0; i < rule.phi_nodes; ++i) {
        const double wrow = r * r * grid.sin_phi[i] * grid.wphi[i] * grid.wtheta0;
        for (int l = 0; l < nth0; ++l) {
            const Vec3 normal{grid.sin_phi[i] * std::cos(grid.theta0[l]),
                              grid.sin_phi[i] * std::sin(grid.theta0[l]),
                              grid.cos_phi[i]};
            const FarFieldBasis& b = basis[static_cast<size_t>(i) * nth0 + l];
            for (auto& rec : out) {
                const Vec3 f = cross(basis_member(b, rec.first),
                                     basis_member(b, rec.second));
                rec.flux += wrow * dot(f, normal);
                rec.max_integrand = std::max(rec.max_integrand, f.norm());
            }
        }
    }
    return out;
}

bool admissible_weights(double a1, double a2, double a3, double a4) {
    const double scale = std::max({1.0, a1 * a1, a2 * a2, a3 * a3, a4 * a4});
    auto eq = [scale](double u, double v) { return std::abs(u - v) <= 1e-12 * scale; };
    return eq(a1 * a1, a2 * a2) && eq(a3 * a3, a4 * a4) &&
           eq(a1 * a2, -a3 * a4) && eq(a1 * a3, -a2 * a4) &&
           eq(a2 * a3, -a1 * a4);
}

DecayFit decay_fit(const std::vector<CycleRecord>& records) {
    if (records.size() < 3)
        throw std::invalid_argument("decay_fit: need at least 3 records");
    for (size_t i = 1; i < records.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (records[i].radius == records[j].radius)
                throw std::invalid_argument("decay_fit: radii must be distinct");
    for (const auto& rec : records)
        if (rec.integral == 0.0)
            return {-std::numeric_limits<double>::infinity(), 0.0};

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(records.size());
    for (const auto& rec : records) {
        const double x = std::log(rec.radius);
        const double y = std::log(std::abs(rec.integral));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    DecayFit fit;
    fit.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.amplitude = std::exp((sy - fit.exponent * sx) / n);
    return fit;
}

RingSource rescaled_source(const ModeWeights& w, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("rescaled_source: c > 0");
    const RingSource base = combined_source(w);
    RingSource out;
    out.rho = [base, c](double x, double t) { return base.rho(x, c * t); };
    out.rho_t = [base, c](double x, double t) { return c * base.rho_t(x, c * t); };
    out.rho_theta = [base, c](double x, double t) { return base.rho_theta(x, c * t); };
    out.j = [base, c](double x, double t) { return c * base.j(x, c * t); };
    out.j_t = [base, c](double x, double t) { return c * c * base.j_t(x, c * t); };
    out.j_theta = [base, c](double x, double t) { return c * base.j_theta(x, c * t); };
    out.m_period = base.m_period / c;
    return out;
}

RingSource add_constant_background(const RingSource& src, double a, double b) {
    RingSource out = src;
    const AngularFn rho0 = src.rho, j0 = src.j;
    out.rho = [rho0, a](double th, double t) { return rho0(th, t) + a; };
    out.j = [j0, b](double th, double t) { return j0(th, t) + b; };
    return out;
}

double temperature(const RingSource& src, double theta, double t) {
    const double rho = src.rho(theta, t);
    const double J = src.j(theta, t);
    if (std::abs(rho) >= 1e-12) return std::abs(J / rho);
    if (std::abs(J) >= 1e-9)
        throw DegeneratePointError("temperature unbounded: rho vanishes, J does not");
    const double rho_th = src.rho_theta(theta, t);
    const double j_th = src.j_theta(theta, t);
    if (std::abs(rho_th) >= 1e-9) return std::abs(j_th / rho_th);
    throw DegeneratePointError("temperature limit undefined at this point");
}

bool equilibrium_check(const RingSource& src, int samples) {
    if (samples < 10) throw std::invalid_argument("equilibrium_check: samples >= 10");
    const double period = src.m_period > 0.0 ? src.m_period : 2.0 * kPi;
    // Kronecker lattice: deterministic, well spread in (theta, t).
    const double k1 = 0.7548776662466927, k2 = 0.5698402909980532;
    double tmin = std::numeric_limits<double>::infinity();
    double tmax = -tmin;
    int degenerate = 0, used = 0;
    for (int k = 0; k < samples; ++k) {
        const double f1 = std::fmod(0.5 + k * k1, 1.0);
        const double f2 = std::fmod(0.5 + k * k2, 1.0);
        const double theta = -kPi + 2.0 * kPi * f1;
        const double t = 0.05 + period * f2;
        if (std::abs(src.rho(theta, t)) < 1e-7) {
            ++degenerate;
            continue;
        }
        double T;
        try {
            T = temperature(src, theta, t);
        } catch (const DegeneratePointError&) {
            ++degenerate;
            continue;
        }
        tmin = std::min(tmin, T);
        tmax = std::max(tmax, T);
        ++used;
    }
    if (degenerate * 2 > samples)
        throw InconclusiveError("equilibrium_check: too many degenerate samples");
    return used > 0 && (tmax - tmin) < 1e-9;
}

}  // namespace ringradiant
