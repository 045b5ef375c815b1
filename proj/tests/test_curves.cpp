#include "doctest.h"

#include "soblab/curves.hpp"
#include "soblab/errors.hpp"
#include "soblab/region.hpp"

#include <cmath>
#include <random>

using namespace soblab;

namespace {
SobolevIndex idx(int n, const char* s, const char* p) {
    return SobolevIndex(n, Rational::parse(s), ExtReal::parse(p));
}
const DomainKind RN = DomainKind::WholeSpace;
} // namespace

TEST_CASE("gamma curve endpoints and midpoint") {
    SobolevIndex src = idx(2, "0.5", "2");
    SobolevIndex tgt = idx(2, "0.25", "4");

    auto a = gamma_curve(src, tgt, Rational(0));
    CHECK(a.s_theta == src.s);
    CHECK(a.p_theta == src.p);
    auto b = gamma_curve(src, tgt, Rational(1));
    CHECK(b.s_theta == tgt.s);
    CHECK(b.p_theta == tgt.p);

    auto m = gamma_curve(src, tgt, Rational(1, 2));
    CHECK(m.s_theta == Rational(3, 8));
    CHECK(m.p_theta == ExtReal(Rational(8, 3)));

    // Reciprocal convention with an infinite endpoint.
    auto c = gamma_curve(idx(1, "1", "inf"), idx(1, "0", "1"), Rational(1, 2));
    CHECK(c.s_theta == Rational(1, 2));
    CHECK(c.p_theta == ExtReal(Rational(2)));

    CHECK_THROWS_AS(gamma_curve(src, tgt, Rational(3, 2)), Error);
}

TEST_CASE("interpolation exponents") {
    auto [s1, p1] = interpolation_exponents(Rational::parse("0.2"), ExtReal(Rational(2)),
                                            Rational::parse("0.8"), ExtReal(Rational(2)),
                                            Rational(1, 2));
    CHECK(s1 == Rational(1, 2));
    CHECK(p1 == ExtReal(Rational(2)));

    auto [s2, p2] = interpolation_exponents(Rational(0), ExtReal::infinity(), Rational(1),
                                            ExtReal(Rational(1)), Rational(1, 2));
    CHECK(s2 == Rational(1, 2));
    CHECK(p2 == ExtReal(Rational(2)));

    // theta = 0 lands on (s2, p2), theta = 1 on (s1, p1).
    auto [s3, p3] = interpolation_exponents(Rational(0), ExtReal(Rational(3)), Rational(1, 2),
                                            ExtReal(Rational(2)), Rational(0));
    CHECK(s3 == Rational(1, 2));
    CHECK(p3 == ExtReal(Rational(2)));

    CHECK_THROWS_AS(interpolation_exponents(Rational(1, 2), ExtReal(Rational(2)), Rational(1, 4),
                                            ExtReal(Rational(2)), Rational(1, 2)),
                    Error);
}

TEST_CASE("connecting q spec examples") {
    SobolevIndex src = idx(2, "0.5", "2");

    auto c1 = connecting_q(src, idx(2, "0.25", "8/3"), ConnectingLemma::SubcriticalContinuous);
    CHECK(c1.q == Rational(4)); // = p*_s
    CHECK(c1.theta_tilde == Rational(1, 2));

    auto c2 = connecting_q(src, idx(2, "0.25", "2"), ConnectingLemma::SubcriticalContinuous);
    CHECK(c2.q == Rational(2));
    CHECK(c2.theta_tilde == Rational(1, 2));

    auto c3 = connecting_q(src, src, ConnectingLemma::SubcriticalContinuous);
    CHECK(c3.theta_tilde == Rational(0));
    CHECK(c3.q == Rational(2));

    // Outside the region: precondition error.
    CHECK_THROWS_AS(connecting_q(src, idx(2, "0.25", "3"), ConnectingLemma::SubcriticalContinuous),
                    Error);
}

TEST_CASE("connecting q round-trips through the curve exactly") {
    // Random admissible targets for each lemma; the reconstruction must be
    // exact in rational arithmetic and <= 1e-12 relative in float mode.
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> num(0, 48);

    auto check_roundtrip = [&](const SobolevIndex& src, const SobolevIndex& tgt,
                               ConnectingLemma lemma) {
        auto cc = connecting_q(src, tgt, lemma);
        SobolevIndex curve_end(src.dim, Rational(0), ExtReal(cc.q));
        auto pt = gamma_curve(src, curve_end, cc.theta_tilde);
        CHECK(pt.s_theta == tgt.s);
        CHECK(pt.p_theta == tgt.p);

        // Float adapter path.
        double s = src.s.to_double(), p = src.p.to_double();
        double st = tgt.s.to_double(), ptld = tgt.p.to_double();
        double q = connecting_q_f(s, p, st, ptld);
        double theta = (s == st) ? 0.0 : 1.0 - st / s;
        auto [s_b, invp_b] = gamma_curve_f(s, 1.0 / p, 0.0, 1.0 / q, theta);
        CHECK(std::abs(s_b - st) <= 1e-12 * std::max(1.0, std::abs(st)));
        CHECK(std::abs(invp_b - 1.0 / ptld) <= 1e-12);
    };

    SobolevIndex sub = idx(2, "0.5", "2");
    int found = 0;
    while (found < 150) {
        Rational st(num(rng), 96); // in [0, 1/2]
        ExtReal pm = max_target_p(sub, st);
        // p~ between p and pmax on a rational subdivision.
        Rational lam(num(rng), 48);
        Rational ptv = sub.p.finite() + lam * (pm.finite() - sub.p.finite());
        SobolevIndex tgt(2, st, ExtReal(ptv));
        check_roundtrip(sub, tgt, ConnectingLemma::SubcriticalContinuous);
        ++found;
    }

    found = 0;
    while (found < 150) {
        Rational st(num(rng) % 47, 96); // strictly below s
        Rational sp = sub.s * sub.p.finite();
        Rational lower = sp / (sp - (sub.p.finite() - Rational(1)) * st);
        Rational upper = max_target_p(sub, st).finite();
        Rational lam(num(rng) % 47, 48); // strictly below the critical curve
        Rational ptv = lower + lam * (upper - lower);
        SobolevIndex tgt(2, st, ExtReal(ptv));
        check_roundtrip(sub, tgt, ConnectingLemma::SubcriticalCompact);
        ++found;
    }

    SobolevIndex crit = idx(1, "0.5", "2");
    found = 0;
    while (found < 150) {
        Rational st(num(rng), 96);
        Rational upper = st.is_zero() ? Rational(50) : Rational(1) / st; // N/s~ or any finite p~
        if (upper < crit.p.finite()) continue;
        // Stay off the curve s~p~ = N: those points are outside the
        // connecting-curve lemma (and the solved q would blow up).
        Rational lam(num(rng) % 47, 48);
        Rational ptv = crit.p.finite() + lam * (upper - crit.p.finite());
        SobolevIndex tgt(1, st, ExtReal(ptv));
        check_roundtrip(crit, tgt, ConnectingLemma::Critical);
        ++found;
    }
}

TEST_CASE("curve chain check") {
    SobolevIndex src = idx(2, "0.5", "2");
    SobolevIndex tgt = idx(2, "0.25", "8/3");

    auto v1 = curve_chain_check(src, tgt, Rational(0), Rational(1), RN, false);
    CHECK(v1.continuous == Tri::Yes);

    auto v2 = curve_chain_check(src, tgt, Rational(1, 4), Rational(3, 4), RN, false);
    CHECK(v2.continuous == Tri::Yes);

    // Compact mode requires strictly positive theta1.
    CHECK_THROWS_AS(curve_chain_check(src, tgt, Rational(0), Rational(1, 2),
                                      DomainKind::BoundedLipschitz, true),
                    Error);

    auto v3 = curve_chain_check(src, idx(2, "0.25", "2.5"), Rational(1, 4), Rational(3, 4),
                                DomainKind::BoundedLipschitz, true);
    CHECK(v3.compact == CompactTri::Yes);
}

TEST_CASE("monotone curve property: chains stay admissible") {
    // For in-region targets, every ordered pair of curve points again
    // satisfies the governing region conditions.
    struct Case {
        SobolevIndex src, tgt;
        DomainKind dom;
        bool compact;
    };
    const Case cases[] = {
        {idx(2, "0.5", "2"), idx(2, "0.25", "8/3"), RN, false},
        {idx(2, "0.5", "2"), idx(2, "0.25", "2"), RN, false},
        {idx(2, "0.5", "2"), idx(2, "0", "4"), RN, false},
        {idx(2, "0.5", "2"), idx(2, "0.25", "2.5"), DomainKind::BoundedLipschitz, true},
        {idx(1, "0.5", "2"), idx(1, "0.25", "3"), RN, false},
        {idx(1, "0.5", "2"), idx(1, "0", "6"), RN, false},
        {idx(1, "0.9", "2"), idx(1, "0.7", "3"), RN, false},
        {idx(1, "0.9", "2"), idx(1, "0.2", "4"), RN, false},
        {idx(1, "0.9", "2"), idx(1, "0.6", "2.5"), DomainKind::BoundedLipschitz, true},
    };
    for (const auto& c : cases) {
        for (int i = 0; i <= 8; ++i) {
            for (int j = i; j <= 8; ++j) {
                Rational t1(i, 8), t2(j, 8);
                if (c.compact && (i == 0 || i == j)) continue;
                auto v = curve_chain_check(c.src, c.tgt, t1, t2, c.dom, c.compact);
                INFO("src=", c.src.str(), " tgt=", c.tgt.str(), " t1=", t1.str(), " t2=", t2.str());
                if (c.compact)
                    CHECK(v.compact == CompactTri::Yes);
                else
                    CHECK(v.continuous == Tri::Yes);
            }
        }
    }
}

TEST_CASE("region sample shapes") {
    auto sample = region_sample(idx(2, "0.5", "2"), RN, false, 11, 11);
    CHECK(sample.cells.size() == 121);
    int yes = 0;
    for (const auto& c : sample.cells) yes += c.continuous == Tri::Yes;
    CHECK(yes > 0);
    CHECK(yes < 121);
    CHECK(!sample.boundaries.empty());

    // Resolution 1x1 degenerates to the source point: a single yes cell.
    auto tiny = region_sample(idx(2, "0.5", "2"), RN, false, 1, 1);
    REQUIRE(tiny.cells.size() == 1);
    CHECK(tiny.cells[0].continuous == Tri::Yes);
    CHECK(tiny.cells[0].s_tilde == Rational(1, 2));

    // Critical compact region excludes the curve s~p~ = N.
    auto crit = region_sample(idx(1, "0.5", "2"), DomainKind::BoundedLipschitz, true, 21, 21);
    for (const auto& c : crit.cells) {
        if (!c.s_tilde.is_zero() && !c.inv_p_tilde.is_zero() &&
            c.s_tilde == c.inv_p_tilde) { // s~ = 1/p~ means s~p~ = 1 = N
            CHECK(c.compact == CompactTri::No);
        }
    }
}
