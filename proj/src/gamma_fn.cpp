#include "soblab/gamma_fn.hpp"

#include "soblab/errors.hpp"

#include <cmath>

namespace soblab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double gamma_positive(double x) {
    // Valid for x >= 0.5.
    double a = kLanczos[0];
    double t = x + 6.5; // x + g - 0.5
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
    return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

} // namespace

double gamma_fn(double x) {
    if (!(x > 0.0) && std::floor(x) == x)
        throw invalid_argument_error("gamma_fn: non-positive integer argument");
    if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
    return gamma_positive(x);
}

double normalizing_constant(int dim, double s, double p) {
    if (dim < 1) throw invalid_argument_error("normalizing_constant: dimension must be >= 1");
    if (!(s > 0.0 && s < 1.0))
        throw precondition_error("normalizing_constant requires s in (0,1); s=0 and s=1 bypass it");
    if (!(p >= 1.0) || std::isinf(p))
        throw precondition_error("normalizing_constant requires p in [1, inf)");

    double num = s * std::pow(2.0, 2.0 * s - 1.0) * gamma_fn((p * s + p + dim - 2.0) / 2.0);
    double den = std::pow(kPi, dim / 2.0) * gamma_fn(1.0 - s);
    return num / den;
}

} // namespace soblab
