#pragma once

#include "soblab/classify.hpp"
#include "soblab/indices.hpp"

#include <string>
#include <vector>

namespace soblab {

/// One grid verdict in (s~, 1/p~) coordinates. The reciprocal axis makes
/// p~ = +inf an ordinary grid line (inv_p = 0).
struct RegionCell {
    Rational s_tilde;
    Rational inv_p_tilde; // 0 encodes p~ = +inf
    Tri continuous;
    CompactTri compact;
    std::string tag; // justification of the queried mode
};

/// Analytic boundary curve, as a polyline in (s~, 1/p~) coordinates.
struct BoundaryCurve {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct RegionSample {
    SobolevIndex source;
    DomainKind domain;
    bool compact_mode;
    int rows; // s~ axis
    int cols; // 1/p~ axis
    std::vector<RegionCell> cells;        // row-major, s~ outer, 1/p~ inner
    std::vector<BoundaryCurve> boundaries;
};

/// Samples classify verdicts on a rows x cols rational grid over
/// (s~, 1/p~) in [0,1]^2 and attaches the analytic boundary curves of the
/// governing theorem. A 1x1 grid degenerates to the source point itself.
RegionSample region_sample(const SobolevIndex& source, DomainKind domain, bool compact_mode,
                           int rows, int cols);

} // namespace soblab
