#include "ringradiant/jefimenko.hpp"

#include <cmath>
#include <stdexcept>

#include "ringradiant/numerics.hpp"
#include "ringradiant/spectral_wave.hpp"

namespace ringradiant {

double retarded_distance(const EvalPoint& point, double theta) {
    const Vec3& p = point.position;
    const double r2 = p.norm2();
    return std::sqrt(r2 + 1.0 - 2.0 * p.x * std::cos(theta) -
                     2.0 * p.y * std::sin(theta));
}

FieldSample causal_fields_direct(const RingSource& src, const EvalPoint& point,
                                 double c, int nodes) {
    if (!(c > 1.0)) throw std::invalid_argument("causal fields: require c > 1");
    if (nodes < 64) throw std::invalid_argument("causal fields: nodes < 64");
    const Vec3& p = point.position;
    const double ring_dist =
        std::hypot(std::hypot(p.x, p.y) - 1.0, p.z);
    if (ring_dist < 1e-9)
        throw std::domain_error("causal fields: evaluation point on the ring");

    const double t = point.time;
    const double h = 2.0 * kPi / nodes;
    FieldSample f;
    for (int i = 0; i < nodes; ++i) {
        const double th = -kPi + i * h;
        const double ct = std::cos(th), st = std::sin(th);
        const Vec3 d{p.x - ct, p.y - st, p.z};
        const double R = d.norm();
        const double tr = t - R / c;
        const Vec3 rhat = d / R;
        const Vec3 that{-st, ct, 0.0};

        const double rho = src.rho(th, tr);
        const double rho_t = src.rho_t(th, tr);
        const double J = src.j(th, tr);
        const double J_t = src.j_t(th, tr);

        f.E1 += rho / (R * R) * rhat;
        f.E2 += rho_t / (c * R) * rhat;
        f.E3 -= J_t / (c * c * R) * that;
        const Vec3 txr = cross(that, rhat);
        f.B1 += J / (R * R) * txr;
        f.B2 += J_t / (c * R) * txr;
    }
    const double we = h / (4.0 * kPi * kEps0);
    const double wb = h * kMu0 / (4.0 * kPi);
    f.E1 *= we;
    f.E2 *= we;
    f.E3 *= we;
    f.B1 *= wb;
    f.B2 *= wb;
    f.E_total = f.E1 + f.E2 + f.E3;
    f.B_total = f.B1 + f.B2;
    return f;
}

namespace {

double factorial(int n) {
    double v = 1.0;
    for (int k = 2; k <= n; ++k) v *= k;
    return v;
}

}  // namespace

double wallis_I(int alpha, int beta) {
    if (alpha < 0 || beta < 0)
        throw std::invalid_argument("wallis_I: negative exponent");
    if (alpha % 2 != 0 || beta % 2 != 0) return 0.0;
    return kPi * factorial(alpha) * factorial(beta) /
           (std::pow(2.0, alpha + beta - 1) * factorial(alpha / 2) *
            factorial(beta / 2) * factorial((alpha + beta) / 2));
}

double wallis_J(int gamma) {
    if (gamma < 1 || gamma % 2 == 0)
        throw std::invalid_argument("wallis_J: gamma must be odd and positive");
    const double half = factorial((gamma - 1) / 2);
    return std::pow(2.0, gamma) * half * half / factorial(gamma);
}

double wallis_J_printed(int gamma) {
    return 2.0 * wallis_J(gamma);
}

WallisTable::WallisTable(int max_alpha_beta, int max_gamma)
    : max_ab_(max_alpha_beta), max_gamma_(max_gamma) {
    i_table_.resize((max_ab_ + 1) * (max_ab_ + 1));
    for (int a = 0; a <= max_ab_; ++a)
        for (int b = 0; b <= max_ab_; ++b)
            i_table_[a * (max_ab_ + 1) + b] = wallis_I(a, b);
    j_table_.resize(max_gamma_ / 2 + 1);
    for (int g = 1; g <= max_gamma_; g += 2) j_table_[g / 2] = wallis_J(g);
}

double WallisTable::I(int alpha, int beta) const {
    if (alpha > max_ab_ || beta > max_ab_)
        throw std::out_of_range("WallisTable::I beyond populated range");
    if (alpha < 0 || beta < 0) throw std::invalid_argument("negative exponent");
    return i_table_[alpha * (max_ab_ + 1) + beta];
}

double WallisTable::J(int gamma) const {
    if (gamma < 1 || gamma % 2 == 0)
        throw std::invalid_argument("WallisTable::J: gamma must be odd");
    if (gamma > max_gamma_) throw std::out_of_range("WallisTable::J beyond range");
    return j_table_[gamma / 2];
}

FarFieldBasis far_field_basis(int m, const EvalPoint& point, double c,
                              int nodes) {
    if (m < 1) throw std::invalid_argument("far_field_basis: m >= 1");
    const Vec3& p = point.position;
    const double r = p.norm();
    if (!(r > 1.0)) throw std::domain_error("far_field_basis: require |position| > 1");
    const double r2p1 = r * r + 1.0;
    const double inv_sqrt = 1.0 / std::sqrt(r2p1);
    const double k = m / c * inv_sqrt;

    FarFieldBasis b;
    const double h = 2.0 * kPi / nodes;
    for (int i = 0; i < nodes; ++i) {
        const double th = -kPi + i * h;
        const double ct = std::cos(th), st = std::sin(th);
        const double cm = std::cos(m * th), sm = std::sin(m * th);
        const double u = k * (p.x * ct + p.y * st);
        const double cu = std::cos(u), su = std::sin(u);
        const Vec3 xyz = p;
        const Vec3 vperp{p.z * ct, p.z * st, -(p.y * st + p.x * ct)};
        const Vec3 that{-st, ct, 0.0};
        b.Gamma += (cm * cu) * xyz;
        b.GammaP += (sm * su) * vperp;
        b.GammaPP += (sm * su) * that;
        b.GammaPPP += (cm * su) * xyz;
        b.GammaPPPP += (sm * cu) * vperp;
        b.GammaPPPPP += (sm * cu) * that;
        b.Delta += (sm * cu) * xyz;
        b.DeltaP += (cm * su) * vperp;
        b.DeltaPP += (cm * su) * that;
        b.DeltaPPP += (sm * su) * xyz;
        b.DeltaPPPP += (cm * cu) * vperp;
        b.DeltaPPPPP += (cm * cu) * that;
    }
    for (Vec3* v : {&b.Gamma, &b.GammaP, &b.GammaPP, &b.GammaPPP, &b.GammaPPPP,
                    &b.GammaPPPPP, &b.Delta, &b.DeltaP, &b.DeltaPP, &b.DeltaPPP,
                    &b.DeltaPPPP, &b.DeltaPPPPP})
        *v *= h;

    b.alpha = 1.0 / (4.0 * kPi * kEps0 * c * r2p1);
    b.beta = kMu0 / (4.0 * kPi * c * r2p1);
    b.gamma_coef = 1.0 / (4.0 * kPi * kEps0 * c * c) * inv_sqrt;
    b.phase = m * std::sqrt(r2p1) / c;
    return b;
}

FarFieldTerms far_field_terms(const ModeWeights& w, const FarFieldBasis& b,
                              double t) {
    const double m = w.m;
    const double S = std::sin(m * t - b.phase);
    const double C = std::cos(m * t - b.phase);
    const double a1 = w.a1, a2 = w.a2, a3 = w.a3, a4 = w.a4;
    FarFieldTerms out;
    out.E2 = b.alpha * m *
             (-a1 * (S * b.Gamma + C * b.GammaPPP) +
              a2 * (C * b.Gamma - S * b.GammaPPP) -
              a3 * (S * b.Delta + C * b.DeltaPPP) +
              a4 * (C * b.Delta - S * b.DeltaPPP));
    out.E3 = b.gamma_coef * m *
             (-a1 * (C * b.GammaPPPPP - S * b.GammaPP) -
              a2 * (S * b.GammaPPPPP + C * b.GammaPP) +
              a3 * (C * b.DeltaPPPPP - S * b.DeltaPP) +
              a4 * (S * b.DeltaPPPPP + C * b.DeltaPP));
    out.B2 = b.beta * m *
             (a1 * (C * b.GammaPPPP - S * b.GammaP) +
              a2 * (S * b.GammaPPPP + C * b.GammaP) -
              a3 * (C * b.DeltaPPPP - S * b.DeltaP) -
              a4 * (S * b.DeltaPPPP + C * b.DeltaP));
    return out;
}

FarFieldTerms far_field_terms(const ModeWeights& w, const EvalPoint& point,
                              double t, double c, int nodes) {
    return far_field_terms(w, far_field_basis(w.m, point, c, nodes), t);
}

Vec3 far_field_E2(int m, const EvalPoint& point, double t, double c,
                  int nodes) {
    ModeWeights w;
    w.m = m;
    w.a1 = 1.0;
    return far_field_terms(w, point, t, c, nodes).E2;
}

CoefficientTriple coefficient_functions(int m, double r, double t, double c) {
    if (r <= 0.0) throw std::domain_error("coefficient_functions: r > 0");
    const double r2p1 = r * r + 1.0;
    const double beta = kMu0 / (4.0 * kPi * c * r2p1);
    const double gamma = 1.0 / (4.0 * kPi * kEps0 * c * c * std::sqrt(r2p1));
    const double bg = beta * gamma * m * m;
    const double ph = m * std::sqrt(r2p1) / c;
    const double smt = std::sin(m * t), cmt = std::cos(m * t);
    const double sp = std::sin(ph), cp = std::cos(ph);
    CoefficientTriple out;
    out.C1 = bg * (-cmt * cmt * sp * sp + 2.0 * smt * cmt * sp * cp -
                   smt * smt * cp * cp);
    out.C2 = bg * (-smt * smt * sp * sp - 2.0 * smt * cmt * sp * cp -
                   cmt * cmt * cp * cp);
    out.C3 = bg * (cmt * smt * sp * sp - smt * cmt * cp * cp -
                   smt * smt * sp * cp + cmt * cmt * sp * cp);
    return out;
}

}  // namespace ringradiant
