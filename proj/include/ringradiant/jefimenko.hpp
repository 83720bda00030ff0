#pragma once
#include <vector>

#include "ringradiant/ring_source.hpp"
#include "ringradiant/vec3.hpp"

namespace ringradiant {

// Dimensionless field convention: eps0 = mu0 = 1, c a free parameter (> 1 in
// the bounds the field-term estimates rely on). The identities tested here
// are structural and do not depend on SI values.
inline constexpr double kEps0 = 1.0;
inline constexpr double kMu0 = 1.0;
inline constexpr double kDefaultC = 10.0;
inline constexpr int kDefaultFieldNodes = 4096;

struct EvalPoint {
    Vec3 position;
    double time = 0.0;
    double r() const { return position.norm(); }
};

/// The five Jefimenko terms, kept in display order, plus their sums.
struct FieldSample {
    Vec3 E1, E2, E3, B1, B2;
    Vec3 E_total, B_total;
};

/// sqrt(r^2 + 1 - 2 x cos(theta) - 2 y sin(theta)) with r^2 = |position|^2.
double retarded_distance(const EvalPoint& point, double theta);

/// All five field terms of a ring source as retarded-time line integrals
/// over theta (composite trapezoid, `nodes` points). Throws
/// std::domain_error if the evaluation point lies on the ring and
/// std::invalid_argument for c <= 1 or nodes < 64.
FieldSample causal_fields_direct(const RingSource& src, const EvalPoint& point,
                                 double c, int nodes = kDefaultFieldNodes);

/// I_alpha^beta = integral_{-pi}^{pi} cos^a sin^b; closed form for a,b even,
/// zero otherwise.
double wallis_I(int alpha, int beta);

/// J_gamma = integral_0^pi sin^gamma, gamma odd: 2^g ((g-1)/2)!^2 / g!.
/// Throws std::invalid_argument for even gamma.
double wallis_J(int gamma);

/// The misprinted variant with 2^(gamma+1); kept so the factor-2 erratum is
/// demonstrable against the quadrature oracle.
double wallis_J_printed(int gamma);

/// Precomputed I/J values, populate-before-use; reads are plain const loads
/// and never block.
class WallisTable {
public:
    WallisTable(int max_alpha_beta, int max_gamma);
    double I(int alpha, int beta) const;
    double J(int gamma) const;
    int max_ab() const { return max_ab_; }
    int max_gamma() const { return max_gamma_; }

private:
    int max_ab_, max_gamma_;
    std::vector<double> i_table_;  // (max_ab+1)^2
    std::vector<double> j_table_;  // odd entries up to max_gamma
};

/// The theta-integral basis of the far-field terms, evaluated at one point.
/// Oscillatory argument u = (m/c)(x cos + y sin)/sqrt(r^2+1): the /c form,
/// consistent with the retarded phase m*rd/c = phase - u/c.
/// Twelve integrals: the nine named ones plus the three mirror entries that
/// carry the odd-m selectors for modes 3/4.
struct FarFieldBasis {
    Vec3 Gamma;        // cos(m th) cos(u) (x,y,z)
    Vec3 GammaP;       // sin(m th) sin(u) vperp
    Vec3 GammaPP;      // sin(m th) sin(u) that
    Vec3 GammaPPP;     // cos(m th) sin(u) (x,y,z)
    Vec3 GammaPPPP;    // sin(m th) cos(u) vperp
    Vec3 GammaPPPPP;   // sin(m th) cos(u) that
    Vec3 Delta;        // sin(m th) cos(u) (x,y,z)
    Vec3 DeltaP;       // cos(m th) sin(u) vperp
    Vec3 DeltaPP;      // cos(m th) sin(u) that
    Vec3 DeltaPPP;     // sin(m th) sin(u) (x,y,z)
    Vec3 DeltaPPPP;    // cos(m th) cos(u) vperp
    Vec3 DeltaPPPPP;   // cos(m th) cos(u) that
    double alpha = 0;      // 1/(4 pi eps0 c (r^2+1))
    double beta = 0;       // mu0/(4 pi c (r^2+1))
    double gamma_coef = 0; // 1/(4 pi eps0 c^2 sqrt(r^2+1))
    double phase = 0;      // m sqrt(r^2+1)/c
};

/// Basis integrals by theta-quadrature at `nodes` points. Pre: |position| > 1.
FarFieldBasis far_field_basis(int m, const EvalPoint& point, double c,
                              int nodes = kDefaultFieldNodes);

struct ModeWeights;  // spectral_wave.hpp

/// Leading far-field E2/E3/B2 of a weighted mode source, assembled from a
/// precomputed basis. Signs follow the retarded-phase expansion
/// sin/cos(m t - phase + u/c); products and fluxes match the tabulated
/// C1/C2/C3 patterns.
struct FarFieldTerms {
    Vec3 E2, E3, B2;
};
FarFieldTerms far_field_terms(const ModeWeights& w, const FarFieldBasis& b,
                              double t);
FarFieldTerms far_field_terms(const ModeWeights& w, const EvalPoint& point,
                              double t, double c,
                              int nodes = kDefaultFieldNodes);

/// Mode-1 far-field E2; for even m this reduces to
/// alpha m (-sin(mt)cos(phase) + cos(mt)sin(phase)) Gamma.
Vec3 far_field_E2(int m, const EvalPoint& point, double t, double c,
                  int nodes = kDefaultFieldNodes);

/// The three trigonometric coefficient combinations of the term-pair
/// products: C1 = -bg m^2 sin^2(mt-phase), C2 = -bg m^2 cos^2(mt-phase),
/// C3 = bg m^2 sin(mt-phase)cos(mt-phase) written in the displayed forms.
struct CoefficientTriple {
    double C1, C2, C3;
};
CoefficientTriple coefficient_functions(int m, double r, double t, double c);

}  // namespace ringradiant
