#include "ringradiant/numerics.hpp"

#include <cmath>

namespace ringradiant {

double trapezoid_periodic(const Fn1& f, double a, double period, int nodes) {
    if (nodes < 2) throw std::invalid_argument("trapezoid_periodic: nodes < 2");
    const double h = period / nodes;
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double v = f(a + i * h);
        if (!std::isfinite(v)) throw InputDomainError("non-finite integrand value");
        sum += v;
    }
    return sum * h;
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * h / 6.0;
}

// force > 0 keeps subdividing regardless of the error estimate: oscillatory
// integrands (cos(mx) at symmetric nodes) can alias into a spuriously small
// delta on coarse panels.
double adaptive_rec(const Fn1& f, double a, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth, int force) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm))
        throw InputDomainError("non-finite integrand value");
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (force <= 0 && std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth <= 0) throw ToleranceError("adaptive quadrature did not converge");
    return adaptive_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1,
                        force - 1) +
           adaptive_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1,
                        force - 1);
}

}  // namespace

double integrate_adaptive(const Fn1& f, double a, double b, double abs_tol,
                          int max_depth) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
        throw InputDomainError("non-finite integrand value");
    const double whole = simpson(fa, fm, fb, b - a);
    return adaptive_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth, 8);
}

double integrate_periodic(const Fn1& f, double abs_tol, int fallback_nodes) {
    try {
        return integrate_adaptive(f, -kPi, kPi, abs_tol);
    } catch (const ToleranceError&) {
        const double coarse = trapezoid_periodic(f, -kPi, 2.0 * kPi, fallback_nodes);
        const double fine = trapezoid_periodic(f, -kPi, 2.0 * kPi, 2 * fallback_nodes);
        if (std::abs(fine - coarse) > 64.0 * abs_tol + 1e-14 * std::abs(fine))
            throw ToleranceError("trapezoid fallback did not settle");
        return fine;
    }
}

GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double p0, p1;
        for (int iter = 0; iter < 100; ++iter) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace ringradiant
