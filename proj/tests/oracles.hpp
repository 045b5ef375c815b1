#pragma once

// Independent oracles for the numerical engines. These deliberately avoid
// the adaptive machinery in the library: uniform midpoint sums, a hardcoded
// strip estimate, and analytic tails, so that agreement is evidence rather
// than tautology.

#include "soblab/functions.hpp"
#include "soblab/gamma_fn.hpp"

#include <cmath>
#include <functional>

namespace soblab::oracle {

/// Dense midpoint double sum for the 1D whole-space Gagliardo seminorm of a
/// compactly supported function. The diagonal strip |x-y| < delta is
/// estimated from the derivative quotient (Lipschitz structure), and the
/// block where y leaves the support box is integrated analytically in y.
inline double gagliardo_1d(const TestFunction& u, double s, double p, int n) {
    const double R = *u.support_radius;
    const double a = u.center[0] - R, b = u.center[0] + R;
    const double h = (b - a) / n;
    const double delta = 4.0 * h;
    const double sp = s * p;

    auto eval = [&](double x) { return u.eval(Point{x, 0.0}); };

    // Off-strip double sum over the support box.
    double inside = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = a + (i + 0.5) * h;
        double ux = eval(x);
        for (int j = 0; j < n; ++j) {
            if (std::abs(i - j) * h < delta) continue;
            double y = a + (j + 0.5) * h;
            double d = std::fabs(ux - eval(y));
            if (d == 0.0) continue;
            inside += std::pow(d, p) / std::pow(std::fabs(x - y), 1.0 + sp);
        }
    }
    inside *= h * h;

    // Strip: |u(x+t)-u(x)| ~ |u'(x)| t for |t| < delta.
    double strip = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = a + (i + 0.5) * h;
        double g = std::fabs(u.grad(Point{x, 0.0})[0]);
        strip += std::pow(g, p);
    }
    strip *= h * 2.0 * std::pow(delta, p - sp) / (p - sp);

    // y outside [a,b], x inside: u(y) = 0 there and the y-integral is
    // elementary.
    double outside = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = a + (i + 0.5) * h;
        double ux = std::fabs(eval(x));
        if (ux == 0.0) continue;
        outside += std::pow(ux, p) *
                   (std::pow(b - x, -sp) + std::pow(x - a, -sp)) / sp;
    }
    outside *= 2.0 * h;

    double c = normalizing_constant(1, s, p);
    return std::pow(c * (inside + strip + outside), 1.0 / p);
}

/// Uniform trapezoid rule for integral of f over [a,b].
inline double trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
    double h = (b - a) / n;
    double sum = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i) sum += f(a + i * h);
    return sum * h;
}

/// 2D tensor trapezoid.
inline double trapezoid2d(const std::function<double(double, double)>& f, double a, double b,
                          int n) {
    double h = (b - a) / n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        double wx = (i == 0 || i == n) ? 0.5 : 1.0;
        for (int j = 0; j <= n; ++j) {
            double wy = (j == 0 || j == n) ? 0.5 : 1.0;
            sum += wx * wy * f(a + i * h, a + j * h);
        }
    }
    return sum * h * h;
}

} // namespace soblab::oracle
