#include "soblab/norms.hpp"

#include "soblab/errors.hpp"
#include "soblab/gamma_fn.hpp"
#include "soblab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace soblab {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double powi_safe(double base, double expo) { return std::pow(base, expo); }

} // namespace

ConcreteDomain ConcreteDomain::whole_space(int dim) {
    ConcreteDomain d;
    d.kind = Kind::WholeSpace;
    d.dim = dim;
    return d;
}

ConcreteDomain ConcreteDomain::box1d(double a, double b) {
    if (!(b > a)) throw invalid_argument_error("box1d: empty interval");
    ConcreteDomain d;
    d.kind = Kind::Box;
    d.dim = 1;
    d.lo = {a, 0.0};
    d.hi = {b, 0.0};
    return d;
}

ConcreteDomain ConcreteDomain::box2d(Point lo, Point hi) {
    if (!(hi[0] > lo[0] && hi[1] > lo[1])) throw invalid_argument_error("box2d: empty box");
    ConcreteDomain d;
    d.kind = Kind::Box;
    d.dim = 2;
    d.lo = lo;
    d.hi = hi;
    return d;
}

ConcreteDomain ConcreteDomain::ball(int dim, Point center, double radius) {
    if (!(radius > 0.0)) throw invalid_argument_error("ball: radius must be positive");
    ConcreteDomain d;
    d.kind = Kind::Ball;
    d.dim = dim;
    d.center = center;
    d.radius = radius;
    return d;
}

bool ConcreteDomain::contains(const Point& x) const {
    switch (kind) {
        case Kind::WholeSpace: return true;
        case Kind::Box:
            if (dim == 1) return x[0] >= lo[0] && x[0] <= hi[0];
            return x[0] >= lo[0] && x[0] <= hi[0] && x[1] >= lo[1] && x[1] <= hi[1];
        case Kind::Ball: {
            double dx = x[0] - center[0];
            double dy = dim == 2 ? x[1] - center[1] : 0.0;
            return dx * dx + dy * dy <= radius * radius;
        }
    }
    return false;
}

std::string ConcreteDomain::str() const {
    switch (kind) {
        case Kind::WholeSpace: return "R^" + std::to_string(dim);
        case Kind::Box:
            if (dim == 1)
                return "[" + std::to_string(lo[0]) + "," + std::to_string(hi[0]) + "]";
            return "box";
        case Kind::Ball: return "ball(r=" + std::to_string(radius) + ")";
    }
    return "?";
}

namespace {

/// Axis-aligned bounds of the region that actually matters for integrating
/// |u|^p over the domain: the domain clipped to the function's declared
/// support/effective box.
struct Bounds {
    double lo[2];
    double hi[2];
    bool empty;
};

Bounds integration_bounds(const TestFunction& u, const ConcreteDomain& dom) {
    Bounds b{{0, 0}, {0, 0}, false};
    double R = u.integration_radius();
    for (int k = 0; k < u.dim; ++k) {
        b.lo[k] = u.center[k] - R;
        b.hi[k] = u.center[k] + R;
    }
    if (dom.kind == ConcreteDomain::Kind::Box) {
        for (int k = 0; k < u.dim; ++k) {
            b.lo[k] = std::max(b.lo[k], dom.lo[k]);
            b.hi[k] = std::min(b.hi[k], dom.hi[k]);
        }
    } else if (dom.kind == ConcreteDomain::Kind::Ball) {
        for (int k = 0; k < u.dim; ++k) {
            b.lo[k] = std::max(b.lo[k], dom.center[k] - dom.radius);
            b.hi[k] = std::min(b.hi[k], dom.center[k] + dom.radius);
        }
    }
    for (int k = 0; k < u.dim; ++k)
        if (!(b.hi[k] > b.lo[k])) b.empty = true;
    return b;
}

void check_dims(const TestFunction& u, const ConcreteDomain& dom) {
    if (u.dim != dom.dim) throw precondition_error("function/domain dimension mismatch");
    if (u.dim != 1 && u.dim != 2)
        throw unsupported_error("numerical norms support N in {1,2} only");
}

/// One-dimensional balls are intervals; fold them into the box case so the
/// range logic below has only two bounded shapes to handle.
ConcreteDomain normalized(const ConcreteDomain& dom) {
    if (dom.kind == ConcreteDomain::Kind::Ball && dom.dim == 1)
        return ConcreteDomain::box1d(dom.center[0] - dom.radius, dom.center[0] + dom.radius);
    return dom;
}

/// Raw integral of |f|^p over the domain (no root). Ball domains in 2D go
/// through an indicator on the bounding box.
QuadResult raw_lp_integral(const TestFunction& u, const ConcreteDomain& dom, double p,
                           const std::function<double(const Point&)>& f, double rel_tol,
                           long max1d, long max2d) {
    Bounds b = integration_bounds(u, dom);
    if (b.empty) return QuadResult{0.0, 0.0, 0, true};
    QuadOptions q;
    q.rel_tol = rel_tol;
    if (u.dim == 1) {
        q.max_cells = max1d;
        bool ball_clip = false; // 1D balls are intervals, already clipped
        (void)ball_clip;
        return integrate([&](double x) { return powi_safe(std::fabs(f(Point{x, 0.0})), p); }, b.lo[0],
                         b.hi[0], q);
    }
    q.max_cells = max2d;
    bool need_indicator = dom.kind == ConcreteDomain::Kind::Ball;
    return integrate2d(
        [&](double x, double y) {
            Point pt{x, y};
            if (need_indicator && !dom.contains(pt)) return 0.0;
            return powi_safe(std::fabs(f(pt)), p);
        },
        b.lo[0], b.hi[0], b.lo[1], b.hi[1], q);
}

/// Neglected-tail certificate for functions without compact support: the
/// Gaussian's declared effective radius leaves |u| below ~1e-31 outside,
/// and the engine charges a crude bound for the dropped mass to the error.
double tail_neglect_bound(const TestFunction& u, double p) {
    if (u.support_radius || !u.effective_radius) return 0.0;
    double R = *u.effective_radius;
    double edge = std::fabs(u.eval(Point{u.center[0] + R, u.center[1]}));
    double ring = u.dim == 1 ? 2.0 : kTwoPi * R;
    return powi_safe(edge, p) * ring * std::max(1.0, R);
}

double root_error(double integral, double err, double p, double value) {
    if (integral <= 0.0) return err > 0.0 ? powi_safe(err, 1.0 / p) : 0.0;
    return value * err / (p * integral);
}

struct PairGrid {
    double lo[2];
    double hi[2];
};

/// sup over pairs of a difference quotient on dyadically refined grids.
NormReport pair_sup(const TestFunction& u, const PairGrid& g, double s, double rel_tol,
                    int base_points, int levels) {
    NormReport rep;
    rep.tolerance = rel_tol;
    rep.lower_bound = true;
    double best = 0.0;
    double improvement = 0.0;
    long cells = 0;
    int n = base_points;
    for (int level = 0; level < levels; ++level) {
        double level_best = best;
        if (u.dim == 1) {
            std::vector<double> vals(n);
            for (int i = 0; i < n; ++i) {
                double x = g.lo[0] + (g.hi[0] - g.lo[0]) * i / (n - 1);
                vals[i] = u.eval(Point{x, 0.0});
            }
            double h = (g.hi[0] - g.lo[0]) / (n - 1);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    double d = std::fabs(vals[i] - vals[j]);
                    if (d == 0.0) continue;
                    double q = d / powi_safe(h * (j - i), s);
                    if (q > level_best) level_best = q;
                }
            }
            cells += n;
        } else {
            int m = std::min(n, 129); // pair loops grow quartically in 2D
            std::vector<double> vals(static_cast<std::size_t>(m) * m);
            std::vector<Point> pts(static_cast<std::size_t>(m) * m);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    Point pt{g.lo[0] + (g.hi[0] - g.lo[0]) * i / (m - 1),
                             g.lo[1] + (g.hi[1] - g.lo[1]) * j / (m - 1)};
                    pts[i * m + j] = pt;
                    vals[i * m + j] = u.eval(pt);
                }
            }
            for (std::size_t a = 0; a < vals.size(); ++a) {
                for (std::size_t b = a + 1; b < vals.size(); ++b) {
                    double d = std::fabs(vals[a] - vals[b]);
                    if (d == 0.0) continue;
                    double dist = std::hypot(pts[a][0] - pts[b][0], pts[a][1] - pts[b][1]);
                    double q = d / powi_safe(dist, s);
                    if (q > level_best) level_best = q;
                }
            }
            cells += m * m;
            if (m == 129) {
                best = level_best;
                break;
            }
        }
        improvement = level_best - best;
        best = level_best;
        if (level > 0 && improvement <= rel_tol * std::max(best, 1e-300)) break;
        n = 2 * (n - 1) + 1;
    }
    rep.value = best;
    rep.error = std::max(improvement, rel_tol * best);
    rep.cells = cells;
    rep.warning = improvement > rel_tol * std::max(best, 1e-300);
    return rep;
}

} // namespace

NormReport NormEngine::lp_norm(const TestFunction& u, const ConcreteDomain& dom,
                               const ExtReal& p) const {
    check_dims(u, dom);
    NormReport rep;
    rep.tolerance = opts_.rel_tol;

    if (p.is_infinite()) {
        Bounds b = integration_bounds(u, dom);
        if (b.empty) return rep;
        bool clip = dom.kind == ConcreteDomain::Kind::Ball && u.dim == 2;
        auto f = [&](const double* x) {
            Point pt{x[0], u.dim == 2 ? x[1] : 0.0};
            if (clip && !dom.contains(pt)) return 0.0;
            return std::fabs(u.eval(pt));
        };
        SupResult sup = sup_on_grid(f, b.lo, b.hi, u.dim, opts_.rel_tol, opts_.sup_levels,
                                    opts_.sup_base_points);
        rep.value = sup.value;
        rep.error = std::max(sup.improvement, opts_.rel_tol * sup.value);
        rep.cells = sup.evaluations;
        rep.lower_bound = true;
        return rep;
    }

    double pd = p.finite().to_double();
    if (pd < 1.0) throw precondition_error("lp_norm requires p >= 1");
    QuadResult q = raw_lp_integral(u, dom, pd, u.eval, opts_.rel_tol, opts_.max_cells_1d,
                                   opts_.max_cells_2d);
    double extra = tail_neglect_bound(u, pd);
    rep.value = powi_safe(q.value, 1.0 / pd);
    rep.error = root_error(q.value, q.error + extra, pd, rep.value);
    rep.cells = q.cells;
    rep.warning = !q.converged;
    return rep;
}

NormReport NormEngine::grad_lp_norm(const TestFunction& u, const ConcreteDomain& dom,
                                    double p) const {
    check_dims(u, dom);
    if (!u.has_gradient()) throw precondition_error("grad_lp_norm: no gradient evaluator");
    if (p < 1.0) throw precondition_error("grad_lp_norm requires p >= 1");
    NormReport rep;
    rep.tolerance = opts_.rel_tol;
    auto mag = [&](const Point& x) {
        Point g = u.grad(x);
        return u.dim == 1 ? std::fabs(g[0]) : std::hypot(g[0], g[1]);
    };
    QuadResult q =
        raw_lp_integral(u, dom, p, mag, opts_.rel_tol, opts_.max_cells_1d, opts_.max_cells_2d);
    rep.value = powi_safe(q.value, 1.0 / p);
    rep.error = root_error(q.value, q.error, p, rep.value);
    rep.cells = q.cells;
    rep.warning = !q.converged;
    return rep;
}

namespace {

/// Shared state for the difference-coordinate form of the double integral:
///   I = kappa * Integral_0^T  t^{-1-sp} g(t) dt  (+ exact far tail),
/// with g(t) the x-integral of |u(x+t e)-u(x)|^p (direction-averaged in 2D)
/// and kappa = 2 (1D) or 1 (2D, the angle carries the factor).
struct SeminormSetup {
    double T = 0.0;          // cutoff in the difference variable
    double t_floor = 0.0;    // below this, use the gradient quotient
    double tail = 0.0;       // exact far-field value (whole space)
    double tail_bound = 0.0; // neglected-mass certificate (Gaussian)
    int m = 1;               // substitution power t = w^m
};

int substitution_power(double p, double sp) {
    double gap = p - sp; // positive since s < 1
    int m = static_cast<int>(std::ceil(2.0 / gap));
    return std::max(1, m);
}

} // namespace

NormReport NormEngine::gagliardo_seminorm(const TestFunction& u, const ConcreteDomain& dom_in,
                                          double s, double p) const {
    const ConcreteDomain dom = normalized(dom_in);
    check_dims(u, dom);
    if (!(s > 0.0 && s < 1.0))
        throw precondition_error("gagliardo_seminorm requires s in (0,1): s=0 and s=1 use the "
                                 "L^p and gradient branches");
    if (!(p >= 1.0) || std::isinf(p))
        throw precondition_error("gagliardo_seminorm requires p in [1,inf)");

    const int N = u.dim;
    const double sp = s * p;
    const double c = normalizing_constant(N, s, p);

    NormReport rep;
    rep.tolerance = opts_.rel_tol;
    rep.constant = c;

    Bounds ubox = integration_bounds(u, ConcreteDomain::whole_space(N));
    SeminormSetup su;
    long cells = 0;
    double inner_tol = opts_.rel_tol / 4.0;
    double outer_tol = opts_.rel_tol / 2.0;

    if (dom.kind == ConcreteDomain::Kind::WholeSpace) {
        double R = u.integration_radius();
        su.T = 2.0 * R;
        // For t >= 2R the supports of u and its translate are disjoint and
        // g(t) = 2 ||u||_p^p exactly; the radial integral of the remainder
        // is elementary.
        QuadResult lp_raw = raw_lp_integral(u, dom, p, u.eval, inner_tol, opts_.max_cells_1d,
                                            opts_.max_cells_2d);
        cells += lp_raw.cells;
        double angle = N == 1 ? 2.0 : kTwoPi;
        su.tail = angle * 2.0 * lp_raw.value * powi_safe(su.T, -sp) / sp;
        su.tail_bound = tail_neglect_bound(u, p) * (1.0 + powi_safe(su.T, -sp) / sp);
    } else {
        double dx = dom.kind == ConcreteDomain::Kind::Box ? dom.hi[0] - dom.lo[0] : 2.0 * dom.radius;
        double dy = N == 2 ? (dom.kind == ConcreteDomain::Kind::Box ? dom.hi[1] - dom.lo[1]
                                                                    : 2.0 * dom.radius)
                           : 0.0;
        su.T = N == 1 ? dx : std::hypot(dx, dy);
    }
    su.t_floor = su.T * 1e-8;
    su.m = substitution_power(p, sp);

    // Instantaneous quotient at the diagonal: integral of |du . e|^p.
    double grad_phi0 = 0.0;
    bool have_grad = u.has_gradient();
    double strip_bound = 0.0;

    const bool ball_clip = dom.kind == ConcreteDomain::Kind::Ball && N == 2;

    // g(t)/t^p with the quotient evaluated stably; t is a vector re_phi in 2D.
    auto phi_at = [&](double t, double cphi, double sphi) -> double {
        double tx = N == 1 ? t : t * cphi;
        double ty = N == 1 ? 0.0 : t * sphi;
        // x must keep both endpoints in the domain and at least one in the
        // support box for a nonzero integrand.
        double lo[2], hi[2];
        for (int k = 0; k < N; ++k) {
            double tk = k == 0 ? tx : ty;
            // Nonzero integrand needs x or x+t in the support box...
            lo[k] = ubox.lo[k] - std::max(tk, 0.0);
            hi[k] = ubox.hi[k] - std::min(tk, 0.0);
            // ...and both endpoints inside the domain.
            if (dom.kind == ConcreteDomain::Kind::Box) {
                lo[k] = std::max(lo[k], dom.lo[k] - std::min(tk, 0.0));
                hi[k] = std::min(hi[k], dom.hi[k] - std::max(tk, 0.0));
            } else if (dom.kind == ConcreteDomain::Kind::Ball) {
                lo[k] = std::max(lo[k], dom.center[k] - dom.radius - std::min(tk, 0.0));
                hi[k] = std::min(hi[k], dom.center[k] + dom.radius - std::max(tk, 0.0));
            }
            if (!(hi[k] > lo[k])) return 0.0;
        }
        QuadOptions q;
        q.rel_tol = inner_tol;
        auto quotient = [&](const Point& x) {
            Point shifted{x[0] + tx, N == 2 ? x[1] + ty : 0.0};
            if (ball_clip && (!dom.contains(x) || !dom.contains(shifted))) return 0.0;
            double d = std::fabs(u.eval(shifted) - u.eval(x)) / t;
            return powi_safe(d, p);
        };
        if (N == 1) {
            q.max_cells = opts_.max_cells_1d / 4;
            QuadResult r = integrate([&](double x) { return quotient(Point{x, 0.0}); }, lo[0], hi[0], q);
            cells += r.cells;
            return r.value;
        }
        q.max_cells = opts_.max_cells_2d / 4;
        QuadResult r = integrate2d([&](double x, double y) { return quotient(Point{x, y}); }, lo[0],
                                   hi[0], lo[1], hi[1], q);
        cells += r.cells;
        return r.value;
    };

    // Direction-averaged quotient (2D) or plain quotient (1D).
    auto phi_avg = [&](double t) -> double {
        if (N == 1) return phi_at(t, 1.0, 0.0);
        double sum = 0.0;
        int n = opts_.angular_nodes;
        for (int k = 0; k < n; ++k) {
            double phi = kTwoPi * k / n;
            sum += phi_at(t, std::cos(phi), std::sin(phi));
        }
        return sum * (kTwoPi / n);
    };

    if (have_grad) {
        // phi(0+): the same directional average of |grad u . e|^p, over the
        // domain clipped to the support box.
        Bounds gb = integration_bounds(u, dom);
        QuadOptions q;
        q.rel_tol = inner_tol;
        if (gb.empty) {
            grad_phi0 = 0.0;
        } else if (N == 1) {
            q.max_cells = opts_.max_cells_1d / 4;
            QuadResult r = integrate(
                [&](double x) {
                    Point g = u.grad(Point{x, 0.0});
                    return powi_safe(std::fabs(g[0]), p);
                },
                gb.lo[0], gb.hi[0], q);
            cells += r.cells;
            grad_phi0 = r.value;
        } else {
            q.max_cells = opts_.max_cells_2d / 4;
            double sum = 0.0;
            int n = opts_.angular_nodes;
            for (int k = 0; k < n; ++k) {
                double phi = kTwoPi * k / n;
                double cph = std::cos(phi), sph = std::sin(phi);
                QuadResult r = integrate2d(
                    [&](double x, double y) {
                        Point pt{x, y};
                        if (ball_clip && !dom.contains(pt)) return 0.0;
                        Point g = u.grad(pt);
                        return powi_safe(std::fabs(g[0] * cph + g[1] * sph), p);
                    },
                    gb.lo[0], gb.hi[0], gb.lo[1], gb.hi[1], q);
                cells += r.cells;
                sum += r.value;
            }
            grad_phi0 = sum * (kTwoPi / n);
        }
    } else if (u.lipschitz) {
        // No gradient: the near-diagonal sliver gets a Lipschitz bound
        // charged to the error estimate instead of a value.
        double L = *u.lipschitz;
        double vol = 1.0;
        for (int k = 0; k < N; ++k) vol *= ubox.hi[k] - ubox.lo[k];
        double angle = N == 1 ? 2.0 : kTwoPi;
        strip_bound = angle * vol * powi_safe(L, p) * powi_safe(su.t_floor, p - sp) / (p - sp);
    } else {
        throw precondition_error(
            "gagliardo_seminorm needs a gradient or a Lipschitz constant for '" + u.label + "'");
    }

    // Outer integral in w with t = w^m:
    //   kappa * Integral t^{-1-sp} g(t) dt = kappa * Integral m phi(t) w^{m(p-sp)-1} dw.
    const int m = su.m;
    const double expo = m * (p - sp) - 1.0;
    const double W = powi_safe(su.T, 1.0 / m);
    auto outer = [&](double w) -> double {
        double t = powi_safe(w, m);
        double phi = (t < su.t_floor) ? (have_grad ? grad_phi0 : 0.0) : phi_avg(t);
        return m * phi * powi_safe(w, expo);
    };
    QuadOptions oq;
    oq.rel_tol = outer_tol;
    oq.max_cells = opts_.max_cells_1d;
    oq.initial_cells = 16;
    QuadResult core = integrate(outer, 0.0, W, oq);
    cells += core.cells;

    double kappa = N == 1 ? 2.0 : 1.0;
    double integral = kappa * core.value + su.tail;
    double err_integral = kappa * core.error + inner_tol * std::fabs(kappa * core.value) +
                          strip_bound + su.tail_bound + inner_tol * su.tail;

    rep.value = powi_safe(c * integral, 1.0 / p);
    rep.error = root_error(c * integral, c * err_integral, p, rep.value);
    rep.cells = cells;
    rep.warning = !core.converged || (strip_bound > opts_.rel_tol * std::max(integral, 1e-300));
    return rep;
}

NormReport NormEngine::holder_seminorm(const TestFunction& u, const ConcreteDomain& dom,
                                       double s) const {
    check_dims(u, dom);
    if (!(s > 0.0 && s <= 1.0)) throw precondition_error("holder_seminorm requires s in (0,1]");
    PairGrid g;
    if (dom.kind == ConcreteDomain::Kind::WholeSpace) {
        double R = u.integration_radius();
        for (int k = 0; k < u.dim; ++k) {
            g.lo[k] = u.center[k] - 2.0 * R;
            g.hi[k] = u.center[k] + 2.0 * R;
        }
    } else {
        Bounds b{{0, 0}, {0, 0}, false};
        b.lo[0] = dom.kind == ConcreteDomain::Kind::Box ? dom.lo[0] : dom.center[0] - dom.radius;
        b.hi[0] = dom.kind == ConcreteDomain::Kind::Box ? dom.hi[0] : dom.center[0] + dom.radius;
        b.lo[1] = dom.kind == ConcreteDomain::Kind::Box ? dom.lo[1] : dom.center[1] - dom.radius;
        b.hi[1] = dom.kind == ConcreteDomain::Kind::Box ? dom.hi[1] : dom.center[1] + dom.radius;
        g.lo[0] = b.lo[0];
        g.hi[0] = b.hi[0];
        g.lo[1] = b.lo[1];
        g.hi[1] = b.hi[1];
    }
    int base = u.dim == 1 ? 257 : 33;
    return pair_sup(u, g, s, opts_.rel_tol, base, opts_.sup_levels);
}

NormReport NormEngine::full_norm(const TestFunction& u, const ConcreteDomain& dom,
                                 const SobolevIndex& idx) const {
    check_dims(u, dom);
    if (idx.dim != u.dim) throw precondition_error("full_norm: index dimension mismatch");

    const bool s_zero = idx.s.is_zero();
    const bool s_one = idx.s == Rational(1);
    const bool p_inf = idx.p.is_infinite();

    if (s_zero) return lp_norm(u, dom, idx.p);

    if (p_inf) {
        // C^{0,s} norm: sup norm plus Hoelder seminorm.
        NormReport sup = lp_norm(u, dom, ExtReal::infinity());
        NormReport sem = holder_seminorm(u, dom, idx.s.to_double());
        NormReport rep;
        rep.value = sup.value + sem.value;
        rep.error = sup.error + sem.error;
        rep.cells = sup.cells + sem.cells;
        rep.tolerance = opts_.rel_tol;
        rep.lower_bound = true;
        rep.warning = sup.warning || sem.warning;
        return rep;
    }

    double p = idx.p.finite().to_double();
    NormReport a = s_one ? grad_lp_norm(u, dom, p)
                         : gagliardo_seminorm(u, dom, idx.s.to_double(), p);
    NormReport b = lp_norm(u, dom, idx.p);
    NormReport rep;
    double ap = powi_safe(a.value, p), bp = powi_safe(b.value, p);
    rep.value = powi_safe(ap + bp, 1.0 / p);
    if (rep.value > 0.0) {
        double da = a.value > 0 ? powi_safe(a.value, p - 1.0) * a.error : powi_safe(a.error, p) / p;
        double db = b.value > 0 ? powi_safe(b.value, p - 1.0) * b.error : powi_safe(b.error, p) / p;
        rep.error = (da + db) / powi_safe(rep.value, p - 1.0);
    }
    rep.cells = a.cells + b.cells;
    rep.tolerance = opts_.rel_tol;
    rep.constant = a.constant;
    rep.warning = a.warning || b.warning;
    return rep;
}

NormReport NormEngine::bmo_norm(const TestFunction& u, const ConcreteDomain& dom,
                                const std::vector<BallSpec>& family) const {
    check_dims(u, dom);
    if (family.empty()) throw precondition_error("bmo_norm: empty ball family");
    if (u.dim != 1) throw unsupported_error("bmo_norm supports N=1 (the chain checks run on the line)");

    NormReport rep;
    rep.tolerance = opts_.rel_tol;
    rep.lower_bound = true;
    for (const auto& ball : family) {
        double a = ball.center[0] - ball.radius;
        double b = ball.center[0] + ball.radius;
        if (dom.kind == ConcreteDomain::Kind::Box && (a < dom.lo[0] || b > dom.hi[0]))
            throw precondition_error("bmo_norm: ball leaves the domain");
        QuadOptions q;
        q.rel_tol = opts_.rel_tol;
        q.max_cells = opts_.max_cells_2d;
        QuadResult r = integrate2d(
            [&](double y, double z) { return std::fabs(u.eval(Point{y, 0.0}) - u.eval(Point{z, 0.0})); },
            a, b, a, b, q);
        double measure = b - a;
        double mean_osc = r.value / (measure * measure);
        rep.cells += r.cells;
        if (mean_osc > rep.value) {
            rep.value = mean_osc;
            rep.error = r.error / (measure * measure);
        }
        rep.warning = rep.warning || !r.converged;
    }
    return rep;
}

} // namespace soblab
