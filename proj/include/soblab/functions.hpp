#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace soblab {

using Point = std::array<double, 2>; // component [1] unused in dimension 1

/// An evaluable analytic test function with declared structure. Evaluators
/// are pure; values are immutable once built, so instances can be shared
/// freely across threads.
struct TestFunction {
    int dim = 1;
    std::string label;
    std::function<double(const Point&)> eval;
    std::function<Point(const Point&)> grad; // empty when no gradient is available

    std::optional<double> support_radius; // support contained in B_radius(center)
    Point center{0.0, 0.0};
    std::optional<double> lipschitz;
    std::optional<double> sup_norm;

    /// For unbounded functions (Gaussian): radius R such that everything
    /// outside |x| > R is negligible at the engine tolerances, plus a bound
    /// on the neglected mass of |u|^p per unit p.
    std::optional<double> effective_radius;

    bool has_gradient() const { return static_cast<bool>(grad); }
    bool compactly_supported() const { return support_radius.has_value(); }
    /// Radius actually used for integration ranges.
    double integration_radius() const;

    double operator()(double x) const { return eval(Point{x, 0.0}); }
    double operator()(double x, double y) const { return eval(Point{x, y}); }
};

/// Smooth bump exp(1 - 1/(1-|x/R|^2)) on B_R, zero outside; unit peak.
TestFunction make_bump(int dim, double radius);

/// Piecewise-linear tent max(0, 1-|x|/R) on the line.
TestFunction make_tent(double radius);

/// Gaussian exp(-|x|^2/(2 sigma^2)); unbounded support, admitted for
/// whole-space experiments only.
TestFunction make_gaussian(int dim, double sigma);

/// Bump modulated by cos(k x_1).
TestFunction make_oscillatory(int dim, double k, double radius);

/// The rescaling v(x) = eps^gamma u(eps^beta x) (whole-space variant) or
/// v(x) = eps^gamma u(x0 + (x-x0)/eps) (bounded-translate variant, which
/// shrinks the support ball B_R(x0) to B_{eps R}(x0)).
struct ScalingSpec {
    enum class Variant { WholeSpace, BoundedTranslate };
    Variant variant = Variant::WholeSpace;
    double gamma = 0.0;
    double beta = 0.0; // bounded-translate behaves as beta = -1
    double epsilon = 1.0;
    Point x0{0.0, 0.0};
};

TestFunction scale_function(const TestFunction& u, const ScalingSpec& spec);

/// Closed-form norms recorded for corpus members, keyed by what they are;
/// used as oracle values in tests and as fast paths nowhere.
struct KnownNorms {
    // lp_norm(p) of the function and of |grad|; empty if no closed form.
    std::function<double(double)> lp;
    std::function<double(double)> grad_lp;
};

std::optional<KnownNorms> known_norms(const TestFunction& u);

/// Deterministic corpus: label -> function. The default corpus is fixed;
/// a manifest (JSON list of {label, family, parameters}) can extend it.
class Corpus {
  public:
    static Corpus standard();

    void add(TestFunction fn);
    const TestFunction& get(const std::string& label) const; // throws UnknownLabel
    std::vector<std::string> labels() const;

    /// Parses a manifest document and adds every entry.
    void load_manifest(const std::string& manifest_json);
    std::string manifest_json() const;

  private:
    std::map<std::string, TestFunction> by_label_;
    std::vector<std::string> order_;
};

} // namespace soblab
