#include "soblab/region.hpp"

#include "soblab/errors.hpp"

namespace soblab {

namespace {

const Rational kZero(0);
const Rational kOne(1);

ExtReal p_from_inverse(const Rational& inv) {
    return inv.is_zero() ? ExtReal::infinity() : ExtReal(kOne / inv);
}

/// Boundary curves of the admissible regions, expressed in (s~, 1/p~).
/// All of them are straight lines in reciprocal coordinates.
std::vector<BoundaryCurve> boundary_curves(const SobolevIndex& src) {
    std::vector<BoundaryCurve> out;
    Regime reg = regime(src);
    const double s = src.s.to_double();
    const double inv_p = src.p.reciprocal().to_double();
    const double n = src.dim;

    // Horizontal line p~ = p and vertical line s~ = s always bound the
    // region on one side.
    out.push_back({"p-equals-source", {{0.0, inv_p}, {1.0, inv_p}}});
    out.push_back({"s-equals-source", {{s, 0.0}, {s, 1.0}}});

    if (reg.subcritical() || reg.supercritical()) {
        // 1/p~ = (N - (s - s~)p)/(Np), where the denominator is positive.
        if (src.p.is_finite()) {
            const double p = src.p.finite().to_double();
            auto inv_pmax = [&](double st) { return (n - (s - st) * p) / (n * p); };
            double st_lo = 0.0;
            if (reg.supercritical()) st_lo = (s * p - n) / p;
            if (inv_pmax(st_lo) < 0.0) st_lo = s - n / p; // clamp to positive part
            out.push_back({"critical-curve", {{st_lo, inv_pmax(st_lo)}, {s, inv_pmax(s)}}});
        }
        if (reg.supercritical()) {
            double h = src.p.is_finite() ? s - n / src.p.finite().to_double() : s;
            out.push_back({"holder-line", {{h, 0.0}, {h, 1.0}}});
        }
    } else if (reg.critical()) {
        // s~ p~ = N, i.e. 1/p~ = s~/N.
        out.push_back({"critical-curve", {{0.0, 0.0}, {s, s / n}}});
    }
    return out;
}

} // namespace

RegionSample region_sample(const SobolevIndex& source, DomainKind domain, bool compact_mode,
                           int rows, int cols) {
    if (rows < 1 || cols < 1) throw precondition_error("region_sample: resolution must be positive");

    RegionSample out{source, domain, compact_mode, rows, cols, {}, {}};
    out.cells.reserve(static_cast<std::size_t>(rows) * cols);

    for (int i = 0; i < rows; ++i) {
        Rational s_tilde = rows == 1 ? source.s : Rational(i, rows - 1);
        for (int j = 0; j < cols; ++j) {
            Rational inv_p = cols == 1 ? source.p.reciprocal() : Rational(j, cols - 1);
            SobolevIndex target(source.dim, s_tilde, p_from_inverse(inv_p));
            EmbeddingVerdict v = compact_mode ? classify_compact(source, target, domain)
                                              : classify_continuous(source, target, domain);
            RegionCell cell{s_tilde, inv_p, v.continuous, v.compact,
                            compact_mode ? v.just_compact : v.just_continuous};
            out.cells.push_back(std::move(cell));
        }
    }
    out.boundaries = boundary_curves(source);
    return out;
}

} // namespace soblab
