#pragma once
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringradiant/jefimenko.hpp"
#include "ringradiant/ring_source.hpp"
#include "ringradiant/spectral_wave.hpp"
#include "ringradiant/vec3.hpp"

namespace ringradiant {

/// Thrown by temperature() when both |J| and |rho| vanish to higher order
/// and the directional limit is undefined.
struct DegeneratePointError : std::domain_error {
    using std::domain_error::domain_error;
};
/// Thrown by equilibrium_check() when too many sample points are degenerate.
struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PowerMode { direct, far_field };

struct SphereRule {
    int phi_nodes = 64;    // Gauss-Legendre in phi
    int theta_nodes = 128; // trapezoid in theta
};

struct PowerOptions {
    int field_nodes = kDefaultFieldNodes;  // theta-quadrature of the line source
    SphereRule sphere;
    double background_rho = 0.0;  // constant rho_0 = a
    double background_j = 0.0;    // constant J_0 = b
    bool velocity_rescaled = false;  // source Psi(x, ct), J = c J(x, ct)
};

struct FluxRecord {
    double radius = 0, time = 0;
    double P = 0;  // flux of E_total x B_total (direct) or the series pairs (far_field)
    std::map<std::string, double> parts;  // per term-pair fluxes
};

struct CycleRecord {
    double radius = 0, t0 = 0, period = 0;
    double integral = 0;  // integral of P over [t0, t0 + period]
};

struct DecayFit {
    double exponent = 0, amplitude = 0;
};

/// Product quadrature of field . n over the sphere S(r), Gauss-Legendre in
/// phi x trapezoid in theta, area element r^2 sin(phi).
double sphere_flux(const std::function<Vec3(const Vec3&)>& vector_field, double r,
                   int nodes_phi = 64, int nodes_theta = 128);

/// Instantaneous Poynting flux through S(r). Direct mode integrates the full
/// causal fields and stores all six term-pair fluxes; far_field mode
/// assembles E2 x B2 and E3 x B2 from the basis integrals.
FluxRecord instantaneous_power(const ModeWeights& w, double r, double t, double c,
                               PowerMode mode, const PowerOptions& opt = {});

/// Trapezoid time quadrature of instantaneous_power over one cycle
/// [t0, t0 + pi/m] (pi/(m c) when velocity_rescaled).
CycleRecord cycle_power(const ModeWeights& w, double r, double t0, double c,
                        int time_nodes = 128, PowerMode mode = PowerMode::far_field,
                        const PowerOptions& opt = {});

/// The five weight conditions a1^2=a2^2, a3^2=a4^2, a1a2=-a3a4, a1a3=-a2a4,
/// a2a3=-a1a4 (three equal, fourth sign-reversed, up to the sign patterns
/// the conditions admit).
bool admissible_weights(double a1, double a2, double a3, double a4);

/// Least-squares fit of log|integral| against log(radius). Returns
/// exponent -inf, amplitude 0 when any integral vanishes.
DecayFit decay_fit(const std::vector<CycleRecord>& records);

/// Source rescaled to wave velocity c: rho(x, ct), c J(x, ct); the time
/// cycle becomes pi/(m c).
RingSource rescaled_source(const ModeWeights& w, double c);

/// (rho + a, J + b); the background's radiative terms vanish identically.
RingSource add_constant_background(const RingSource& src, double a, double b);

/// T = |J|/|rho| on the ring; at simple zeros of rho the directional limit
/// |dJ/dtheta| / |drho/dtheta|.
double temperature(const RingSource& src, double theta, double t);

/// The ratio field as a reusable object.
struct TemperatureField {
    RingSource source;
    double value(double theta, double t) const { return temperature(source, theta, t); }
};

/// True iff temperature is constant (max - min < 1e-9) over a deterministic
/// quasi-random (theta, t) sample set avoiding degenerate points.
bool equilibrium_check(const RingSource& src, int samples);

/// Worker count for sweep parallelism: RINGRADIANT_THREADS if set, else
/// hardware concurrency.
int worker_count();

/// One sweep row: the t0 flux record (with term-pair parts) and the cycle
/// integral, sharing a single field engine.
struct SweepPoint {
    FluxRecord at_t0;
    CycleRecord cycle;
};
SweepPoint evaluate_sweep_point(const ModeWeights& w, double r, double t0, double c,
                                int time_nodes, PowerMode mode,
                                const PowerOptions& opt = {});

/// Member lookup by name ("Gamma", "GammaP", ..., "DeltaPP").
const Vec3& basis_member(const FarFieldBasis& b, const std::string& name);

/// Sphere fluxes of cross products of basis vectors, sharing one basis
/// evaluation per sphere node. Also reports max |cross| over the sphere for
/// scale-relative zero tests.
struct BasisCrossFlux {
    std::string first, second;
    double flux = 0;
    double max_integrand = 0;
};
std::vector<BasisCrossFlux> basis_cross_fluxes(
    int m, double r, double c,
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const SphereRule& rule = {}, int field_nodes = kDefaultFieldNodes);

}  // namespace ringradiant
