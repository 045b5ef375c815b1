#include "doctest.h"

#include "soblab/errors.hpp"
#include "soblab/indices.hpp"

using namespace soblab;

namespace {
SobolevIndex idx(int n, const char* s, const char* p) {
    return SobolevIndex(n, Rational::parse(s), ExtReal::parse(p));
}
} // namespace

TEST_CASE("index invariants") {
    CHECK_THROWS_AS(idx(0, "0.5", "2"), Error);
    CHECK_THROWS_AS(idx(1, "1.5", "2"), Error);
    CHECK_THROWS_AS(idx(1, "-0.1", "2"), Error);
    CHECK_THROWS_AS(idx(1, "0.5", "0.5"), Error);
    CHECK_NOTHROW(idx(3, "1", "inf"));
}

TEST_CASE("regime split is exact") {
    auto r1 = regime(idx(2, "0.5", "2"));
    CHECK(r1.kind == RegimeKind::Subcritical);
    CHECK(*r1.sp == ExtReal(Rational(1)));

    auto r2 = regime(idx(1, "0.5", "2"));
    CHECK(r2.kind == RegimeKind::Critical);

    auto r3 = regime(idx(2, "0.8", "inf"));
    CHECK(r3.kind == RegimeKind::Supercritical);
    CHECK(r3.sp->is_infinite());

    auto r4 = regime(idx(2, "0", "inf"));
    CHECK(r4.kind == RegimeKind::Unsupported);
    CHECK(!r4.sp.has_value());

    // A boundary case that float arithmetic would not resolve reliably.
    auto r5 = regime(idx(3, "3/7", "7"));
    CHECK(r5.kind == RegimeKind::Critical);
}

TEST_CASE("sobolev conjugate") {
    CHECK(sobolev_conjugate(idx(2, "0.5", "2")) == Rational(4));
    CHECK(sobolev_conjugate(idx(1, "0.5", "1")) == Rational(2));
    CHECK(sobolev_conjugate(idx(3, "0", "2")) == Rational(2));
    CHECK_THROWS_AS(sobolev_conjugate(idx(1, "0.5", "2")), Error); // critical
    CHECK_THROWS_AS(sobolev_conjugate(idx(1, "0.9", "2")), Error); // supercritical
}

TEST_CASE("max target integrability") {
    SobolevIndex src = idx(2, "0.5", "2");
    CHECK(max_target_p(src, Rational::parse("0.25")) == ExtReal(Rational(8, 3)));
    CHECK(max_target_p(src, Rational::parse("0.5")) == ExtReal(Rational(2)));
    CHECK(max_target_p(src, Rational(0)) == ExtReal(sobolev_conjugate(src)));

    CHECK(max_target_p(idx(1, "0.5", "2"), Rational::parse("0.25")) == ExtReal(Rational(4)));

    // Supercritical Hoelder block: non-positive denominator means every
    // target integrability is admissible.
    SobolevIndex super = idx(1, "0.9", "2");
    CHECK(max_target_p(super, Rational::parse("0.2")).is_infinite());
    CHECK(max_target_p(super, Rational::parse("0.4")).is_infinite());
    CHECK(max_target_p(super, Rational::parse("0.7")) == ExtReal(Rational(10, 3)));
    CHECK(max_target_p(idx(1, "0.5", "inf"), Rational::parse("0.3")).is_infinite());

    CHECK_THROWS_AS(max_target_p(src, Rational::parse("0.75")), Error); // s~ > s
}
