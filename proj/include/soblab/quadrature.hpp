#pragma once

#include <functional>

namespace soblab {

struct QuadOptions {
    double rel_tol = 1e-6;
    double abs_tol = 0.0;   // secondary floor, for integrals that are exactly zero
    long max_cells = 4000;  // refinement budget
    int initial_cells = 8;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // estimated absolute error
    long cells = 0;
    bool converged = false;
};

/// Adaptive Gauss-Legendre quadrature (order 8 per cell) on [a,b]. Each
/// cell's error indicator is the difference between the one-panel value and
/// the two-half refinement; the worst cell is bisected until the summed
/// indicator meets max(rel_tol*|value|, abs_tol) or the budget runs out.
/// Fully deterministic: ties in the refinement queue break on cell
/// position, and the final sum runs left to right.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts = {});

/// Same scheme on an axis-aligned rectangle with tensorized 8x8 panels;
/// refinement bisects the longer edge.
QuadResult integrate2d(const std::function<double(double, double)>& f, double ax, double bx,
                       double ay, double by, const QuadOptions& opts = {});

struct SupResult {
    double value = 0.0;       // grid maximum: a lower bound for the sup
    double improvement = 0.0; // gain of the last refinement level
    int levels = 0;
    long evaluations = 0;
};

/// Maximum of f over a dyadically refined grid on [a,b]^dim (dim 1 or 2).
/// Stops when a refinement level improves the running maximum by at most
/// rel_tol*|max|; reports lower-bound semantics.
SupResult sup_on_grid(const std::function<double(const double*)>& f, const double* lo,
                      const double* hi, int dim, double rel_tol = 1e-6, int max_levels = 12,
                      int base_points = 65);

} // namespace soblab
