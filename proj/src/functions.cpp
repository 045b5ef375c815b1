#include "soblab/functions.hpp"

#include "soblab/errors.hpp"
#include "soblab/gamma_fn.hpp"

#include "json.hpp"

#include <cmath>

namespace soblab {

namespace {

double norm2(const Point& x, int dim) {
    return dim == 1 ? std::fabs(x[0]) : std::hypot(x[0], x[1]);
}

/// Peak slope of the 1D unit bump, found once by a fixed dense scan; the
/// profile is radial, so it bounds |grad| in any dimension after the 1/R
/// chain factor.
double bump_unit_lipschitz() {
    static const double value = [] {
        double best = 0.0;
        for (int i = 1; i < 20000; ++i) {
            double r = i / 20000.0;
            double d = 1.0 - r * r;
            double u = std::exp(1.0 - 1.0 / d);
            best = std::max(best, 2.0 * r * u / (d * d));
        }
        return best * (1.0 + 1e-9);
    }();
    return value;
}

} // namespace

double TestFunction::integration_radius() const {
    if (support_radius) return *support_radius;
    if (effective_radius) return *effective_radius;
    throw precondition_error("function '" + label + "' has no usable integration radius");
}

TestFunction make_bump(int dim, double radius) {
    if (radius <= 0.0) throw invalid_argument_error("make_bump: radius must be positive");
    if (dim != 1 && dim != 2) throw invalid_argument_error("make_bump: dim must be 1 or 2");
    TestFunction f;
    f.dim = dim;
    f.label = dim == 1 ? "bump" : "bump2d";
    double R = radius;
    f.eval = [R, dim](const Point& x) {
        double r = norm2(x, dim) / R;
        if (r >= 1.0) return 0.0;
        double d = 1.0 - r * r;
        return std::exp(1.0 - 1.0 / d);
    };
    f.grad = [R, dim](const Point& x) {
        double r = norm2(x, dim) / R;
        if (r >= 1.0) return Point{0.0, 0.0};
        double d = 1.0 - r * r;
        double u = std::exp(1.0 - 1.0 / d);
        double factor = -2.0 * u / (R * R * d * d);
        return Point{factor * x[0], dim == 2 ? factor * x[1] : 0.0};
    };
    f.support_radius = R;
    f.sup_norm = 1.0;
    f.lipschitz = bump_unit_lipschitz() / R;
    return f;
}

TestFunction make_tent(double radius) {
    if (radius <= 0.0) throw invalid_argument_error("make_tent: radius must be positive");
    TestFunction f;
    f.dim = 1;
    f.label = "tent";
    double R = radius;
    f.eval = [R](const Point& x) { return std::max(0.0, 1.0 - std::fabs(x[0]) / R); };
    f.grad = [R](const Point& x) {
        double ax = std::fabs(x[0]);
        if (ax >= R || x[0] == 0.0) return Point{0.0, 0.0};
        return Point{x[0] > 0 ? -1.0 / R : 1.0 / R, 0.0};
    };
    f.support_radius = R;
    f.sup_norm = 1.0;
    f.lipschitz = 1.0 / R;
    return f;
}

TestFunction make_gaussian(int dim, double sigma) {
    if (sigma <= 0.0) throw invalid_argument_error("make_gaussian: sigma must be positive");
    if (dim != 1 && dim != 2) throw invalid_argument_error("make_gaussian: dim must be 1 or 2");
    TestFunction f;
    f.dim = dim;
    f.label = dim == 1 ? "gauss" : "gauss2d";
    double s2 = sigma * sigma;
    f.eval = [s2, dim](const Point& x) {
        double r = norm2(x, dim);
        return std::exp(-r * r / (2.0 * s2));
    };
    f.grad = [s2, dim](const Point& x) {
        double r = norm2(x, dim);
        double u = std::exp(-r * r / (2.0 * s2));
        return Point{-x[0] * u / s2, dim == 2 ? -x[1] * u / s2 : 0.0};
    };
    f.sup_norm = 1.0;
    f.lipschitz = std::exp(-0.5) / sigma;
    f.effective_radius = 12.0 * sigma; // exp(-72) tails, far below engine tolerances
    return f;
}

TestFunction make_oscillatory(int dim, double k, double radius) {
    TestFunction bump = make_bump(dim, radius);
    TestFunction f;
    f.dim = dim;
    f.label = dim == 1 ? "osc" : "osc2d";
    auto beval = bump.eval;
    auto bgrad = bump.grad;
    f.eval = [beval, k](const Point& x) { return beval(x) * std::cos(k * x[0]); };
    f.grad = [beval, bgrad, k](const Point& x) {
        Point g = bgrad(x);
        double c = std::cos(k * x[0]);
        double s = std::sin(k * x[0]);
        double u = beval(x);
        return Point{g[0] * c - k * u * s, g[1] * c};
    };
    f.support_radius = radius;
    f.sup_norm = 1.0; // attained at the origin where the bump peaks and cos = 1
    f.lipschitz = *bump.lipschitz + std::fabs(k);
    return f;
}

TestFunction scale_function(const TestFunction& u, const ScalingSpec& spec) {
    if (!(spec.epsilon > 0.0 && spec.epsilon <= 1.0))
        throw precondition_error("scale_function: epsilon must lie in (0,1]");

    TestFunction v;
    v.dim = u.dim;
    double eps = spec.epsilon;
    double amp = std::pow(eps, spec.gamma);
    auto ueval = u.eval;
    auto ugrad = u.grad;

    if (spec.variant == ScalingSpec::Variant::WholeSpace) {
        double scale = std::pow(eps, spec.beta);
        v.label = u.label + "@eps=" + std::to_string(eps);
        v.eval = [ueval, amp, scale](const Point& x) {
            return amp * ueval(Point{scale * x[0], scale * x[1]});
        };
        if (ugrad) {
            v.grad = [ugrad, amp, scale](const Point& x) {
                Point g = ugrad(Point{scale * x[0], scale * x[1]});
                return Point{amp * scale * g[0], amp * scale * g[1]};
            };
        }
        if (u.support_radius) v.support_radius = *u.support_radius / scale;
        if (u.effective_radius) v.effective_radius = *u.effective_radius / scale;
        if (u.sup_norm) v.sup_norm = amp * *u.sup_norm;
        if (u.lipschitz) v.lipschitz = amp * scale * *u.lipschitz;
        return v;
    }

    // Bounded translate: v(x) = eps^gamma u(x0 + (x-x0)/eps), support ball
    // B_R(x0) shrunk to B_{eps R}(x0).
    if (!u.support_radius)
        throw precondition_error("scale_function: bounded-translate requires compact support");
    Point x0 = spec.x0;
    v.label = u.label + "@eps=" + std::to_string(eps);
    v.eval = [ueval, amp, eps, x0](const Point& x) {
        return amp * ueval(Point{x0[0] + (x[0] - x0[0]) / eps, x0[1] + (x[1] - x0[1]) / eps});
    };
    if (ugrad) {
        v.grad = [ugrad, amp, eps, x0](const Point& x) {
            Point g = ugrad(Point{x0[0] + (x[0] - x0[0]) / eps, x0[1] + (x[1] - x0[1]) / eps});
            return Point{amp / eps * g[0], amp / eps * g[1]};
        };
    }
    v.support_radius = eps * *u.support_radius;
    v.center = x0;
    if (u.sup_norm) v.sup_norm = amp * *u.sup_norm;
    if (u.lipschitz) v.lipschitz = amp / eps * *u.lipschitz;
    return v;
}

std::optional<KnownNorms> known_norms(const TestFunction& u) {
    if (u.label == "tent" && u.support_radius) {
        double R = *u.support_radius;
        KnownNorms k;
        k.lp = [R](double p) { return std::pow(2.0 * R / (p + 1.0), 1.0 / p); };
        k.grad_lp = [R](double p) { return std::pow(2.0 * R * std::pow(1.0 / R, p), 1.0 / p); };
        return k;
    }
    if (u.label == "gauss" && u.dim == 1) {
        // ||u||_p^p = integral exp(-p x^2/(2 s^2)) = s sqrt(2 pi / p);
        // recover sigma from the effective radius.
        double sigma = *u.effective_radius / 12.0;
        KnownNorms k;
        k.lp = [sigma](double p) {
            return std::pow(sigma * std::sqrt(2.0 * 3.14159265358979323846 / p), 1.0 / p);
        };
        k.grad_lp = {};
        return k;
    }
    return std::nullopt;
}

Corpus Corpus::standard() {
    Corpus c;
    c.add(make_tent(1.0));
    c.add(make_bump(1, 1.0));
    c.add(make_gaussian(1, 1.0));
    c.add(make_oscillatory(1, 3.0, 1.0));
    c.add(make_bump(2, 1.0));
    return c;
}

void Corpus::add(TestFunction fn) {
    if (!by_label_.count(fn.label)) order_.push_back(fn.label);
    by_label_[fn.label] = std::move(fn);
}

const TestFunction& Corpus::get(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw unknown_label_error("unknown corpus label: " + label);
    return it->second;
}

std::vector<std::string> Corpus::labels() const { return order_; }

void Corpus::load_manifest(const std::string& manifest_json) {
    nlohmann::json doc = nlohmann::json::parse(manifest_json);
    if (!doc.is_array()) throw invalid_argument_error("corpus manifest must be a JSON array");
    for (const auto& entry : doc) {
        std::string family = entry.at("family").get<std::string>();
        auto params = entry.value("parameters", nlohmann::json::object());
        int dim = params.value("dim", 1);
        TestFunction fn;
        if (family == "tent") {
            fn = make_tent(params.value("radius", 1.0));
        } else if (family == "bump") {
            fn = make_bump(dim, params.value("radius", 1.0));
        } else if (family == "gaussian") {
            fn = make_gaussian(dim, params.value("sigma", 1.0));
        } else if (family == "oscillatory") {
            fn = make_oscillatory(dim, params.value("k", 3.0), params.value("radius", 1.0));
        } else {
            throw invalid_argument_error("unknown corpus family: " + family);
        }
        if (entry.contains("label")) fn.label = entry.at("label").get<std::string>();
        add(std::move(fn));
    }
}

std::string Corpus::manifest_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& label : order_) {
        const TestFunction& f = by_label_.at(label);
        nlohmann::json entry;
        entry["label"] = label;
        std::string family = label;
        if (family.size() > 2 && family.substr(family.size() - 2) == "2d")
            family = family.substr(0, family.size() - 2);
        if (family == "gauss") family = "gaussian";
        if (family == "osc") family = "oscillatory";
        entry["family"] = family;
        nlohmann::json params;
        params["dim"] = f.dim;
        if (f.support_radius) params["radius"] = *f.support_radius;
        entry["parameters"] = params;
        arr.push_back(entry);
    }
    return arr.dump(2);
}

} // namespace soblab
