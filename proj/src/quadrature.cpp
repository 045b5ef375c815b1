#include "soblab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace soblab {

namespace {

// Gauss-Legendre order 8 on [-1,1].
constexpr double kNodes[4] = {0.18343464249564980, 0.52553240991632899, 0.79666647741362674,
                              0.96028985649753623};
constexpr double kWeights[4] = {0.36268378337836198, 0.31370664587788729, 0.22238103445337447,
                                0.10122853629037626};

double gl8(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        sum += kWeights[i] * (f(c - h * kNodes[i]) + f(c + h * kNodes[i]));
    }
    return sum * h;
}

struct Cell1 {
    double a, b;
    double value; // two-half refined value
    double err;   // |refined - single panel|
    long id;
};

struct Cell1Order {
    bool operator()(const Cell1& x, const Cell1& y) const {
        if (x.err != y.err) return x.err < y.err; // max-heap on error
        return x.id > y.id;                       // deterministic tie-break
    }
};

Cell1 make_cell1(const std::function<double(double)>& f, double a, double b, long id) {
    double whole = gl8(f, a, b);
    double m = 0.5 * (a + b);
    double fine = gl8(f, a, m) + gl8(f, m, b);
    return Cell1{a, b, fine, std::fabs(fine - whole), id};
}

double kahan_sum(std::vector<double>& xs) {
    double s = 0.0, c = 0.0;
    for (double x : xs) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts) {
    QuadResult out;
    if (!(b > a)) {
        out.converged = true;
        return out;
    }

    std::priority_queue<Cell1, std::vector<Cell1>, Cell1Order> heap;
    long next_id = 0;
    double total_value = 0.0, total_err = 0.0;
    int init = std::max(1, opts.initial_cells);
    for (int i = 0; i < init; ++i) {
        double ca = a + (b - a) * i / init;
        double cb = a + (b - a) * (i + 1) / init;
        Cell1 c = make_cell1(f, ca, cb, next_id++);
        total_value += c.value;
        total_err += c.err;
        heap.push(c);
    }

    auto tolerance = [&]() { return std::max(opts.rel_tol * std::fabs(total_value), opts.abs_tol); };

    while (total_err > tolerance() && next_id < opts.max_cells) {
        Cell1 worst = heap.top();
        heap.pop();
        total_value -= worst.value;
        total_err -= worst.err;
        double m = 0.5 * (worst.a + worst.b);
        if (!(m > worst.a && m < worst.b)) { // cell at float resolution, give up on it
            total_value += worst.value;
            total_err += worst.err;
            break;
        }
        Cell1 l = make_cell1(f, worst.a, m, next_id++);
        Cell1 r = make_cell1(f, m, worst.b, next_id++);
        total_value += l.value + r.value;
        total_err += l.err + r.err;
        heap.push(l);
        heap.push(r);
    }

    // Deterministic final summation, left to right.
    std::vector<Cell1> cells;
    cells.reserve(heap.size());
    while (!heap.empty()) {
        cells.push_back(heap.top());
        heap.pop();
    }
    std::sort(cells.begin(), cells.end(), [](const Cell1& x, const Cell1& y) { return x.a < y.a; });
    std::vector<double> vals, errs;
    vals.reserve(cells.size());
    errs.reserve(cells.size());
    for (const auto& c : cells) {
        vals.push_back(c.value);
        errs.push_back(c.err);
    }
    out.value = kahan_sum(vals);
    out.error = kahan_sum(errs);
    out.cells = static_cast<long>(cells.size());
    out.converged = out.error <= std::max(opts.rel_tol * std::fabs(out.value), opts.abs_tol);
    return out;
}

namespace {

struct Cell2 {
    double ax, bx, ay, by;
    double value;
    double err;
    long id;
};

struct Cell2Order {
    bool operator()(const Cell2& x, const Cell2& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.id > y.id;
    }
};

double gl8_2d(const std::function<double(double, double)>& f, double ax, double bx, double ay,
              double by) {
    double cx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
    double cy = 0.5 * (ay + by), hy = 0.5 * (by - ay);
    double xs[8], ws[8];
    for (int i = 0; i < 4; ++i) {
        xs[2 * i] = -kNodes[i];
        xs[2 * i + 1] = kNodes[i];
        ws[2 * i] = kWeights[i];
        ws[2 * i + 1] = kWeights[i];
    }
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
        double rowsum = 0.0;
        for (int j = 0; j < 8; ++j) rowsum += ws[j] * f(cx + hx * xs[i], cy + hy * xs[j]);
        sum += ws[i] * rowsum;
    }
    return sum * hx * hy;
}

Cell2 make_cell2(const std::function<double(double, double)>& f, double ax, double bx, double ay,
                 double by, long id) {
    double whole = gl8_2d(f, ax, bx, ay, by);
    double fine;
    if (bx - ax >= by - ay) {
        double m = 0.5 * (ax + bx);
        fine = gl8_2d(f, ax, m, ay, by) + gl8_2d(f, m, bx, ay, by);
    } else {
        double m = 0.5 * (ay + by);
        fine = gl8_2d(f, ax, bx, ay, m) + gl8_2d(f, ax, bx, m, by);
    }
    return Cell2{ax, bx, ay, by, fine, std::fabs(fine - whole), id};
}

} // namespace

QuadResult integrate2d(const std::function<double(double, double)>& f, double ax, double bx,
                       double ay, double by, const QuadOptions& opts) {
    QuadResult out;
    if (!(bx > ax) || !(by > ay)) {
        out.converged = true;
        return out;
    }

    std::priority_queue<Cell2, std::vector<Cell2>, Cell2Order> heap;
    long next_id = 0;
    double total_value = 0.0, total_err = 0.0;
    int init = std::max(1, opts.initial_cells / 4);
    for (int i = 0; i < init; ++i) {
        for (int j = 0; j < init; ++j) {
            Cell2 c = make_cell2(f, ax + (bx - ax) * i / init, ax + (bx - ax) * (i + 1) / init,
                                 ay + (by - ay) * j / init, ay + (by - ay) * (j + 1) / init,
                                 next_id++);
            total_value += c.value;
            total_err += c.err;
            heap.push(c);
        }
    }

    auto tolerance = [&]() { return std::max(opts.rel_tol * std::fabs(total_value), opts.abs_tol); };

    while (total_err > tolerance() && next_id < opts.max_cells) {
        Cell2 worst = heap.top();
        heap.pop();
        total_value -= worst.value;
        total_err -= worst.err;
        Cell2 l, r;
        if (worst.bx - worst.ax >= worst.by - worst.ay) {
            double m = 0.5 * (worst.ax + worst.bx);
            if (!(m > worst.ax && m < worst.bx)) {
                total_value += worst.value;
                total_err += worst.err;
                break;
            }
            l = make_cell2(f, worst.ax, m, worst.ay, worst.by, next_id++);
            r = make_cell2(f, m, worst.bx, worst.ay, worst.by, next_id++);
        } else {
            double m = 0.5 * (worst.ay + worst.by);
            if (!(m > worst.ay && m < worst.by)) {
                total_value += worst.value;
                total_err += worst.err;
                break;
            }
            l = make_cell2(f, worst.ax, worst.bx, worst.ay, m, next_id++);
            r = make_cell2(f, worst.ax, worst.bx, m, worst.by, next_id++);
        }
        total_value += l.value + r.value;
        total_err += l.err + r.err;
        heap.push(l);
        heap.push(r);
    }

    std::vector<Cell2> cells;
    cells.reserve(heap.size());
    while (!heap.empty()) {
        cells.push_back(heap.top());
        heap.pop();
    }
    std::sort(cells.begin(), cells.end(), [](const Cell2& x, const Cell2& y) {
        if (x.ax != y.ax) return x.ax < y.ax;
        return x.ay < y.ay;
    });
    std::vector<double> vals, errs;
    for (const auto& c : cells) {
        vals.push_back(c.value);
        errs.push_back(c.err);
    }
    out.value = kahan_sum(vals);
    out.error = kahan_sum(errs);
    out.cells = static_cast<long>(cells.size());
    out.converged = out.error <= std::max(opts.rel_tol * std::fabs(out.value), opts.abs_tol);
    return out;
}

SupResult sup_on_grid(const std::function<double(const double*)>& f, const double* lo,
                      const double* hi, int dim, double rel_tol, int max_levels, int base_points) {
    SupResult out;
    double best = -std::numeric_limits<double>::infinity();
    long evals = 0;
    int n = base_points;
    for (int level = 0; level < max_levels; ++level) {
        double level_best = best;
        if (dim == 1) {
            for (int i = 0; i < n; ++i) {
                double x = lo[0] + (hi[0] - lo[0]) * i / (n - 1);
                level_best = std::max(level_best, f(&x));
                ++evals;
            }
        } else {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    double xy[2] = {lo[0] + (hi[0] - lo[0]) * i / (n - 1),
                                    lo[1] + (hi[1] - lo[1]) * j / (n - 1)};
                    level_best = std::max(level_best, f(xy));
                    ++evals;
                }
            }
        }
        out.improvement = level_best - (std::isfinite(best) ? best : level_best);
        best = level_best;
        out.levels = level + 1;
        if (level > 0 && out.improvement <= rel_tol * std::max(1e-300, std::fabs(best))) break;
        n = 2 * (n - 1) + 1;
        if (dim == 2 && n > 1025) break; // pair grids get quadratic, cap the refinement
    }
    out.value = best;
    out.evaluations = evals;
    return out;
}

} // namespace soblab
