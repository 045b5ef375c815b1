#include "soblab/curves.hpp"

#include "soblab/errors.hpp"

namespace soblab {

namespace {

const Rational kZero(0);
const Rational kOne(1);

ExtReal from_reciprocal(const Rational& inv) {
    if (inv.is_zero()) return ExtReal::infinity();
    return ExtReal(kOne / inv);
}

} // namespace

CurvePoint gamma_curve(const SobolevIndex& source, const SobolevIndex& target, const Rational& theta) {
    if (source.dim != target.dim) throw precondition_error("gamma_curve: dimension mismatch");
    if (theta < kZero || theta > kOne)
        throw precondition_error("gamma_curve: theta must lie in [0,1], got " + theta.str());

    Rational s_theta = theta * target.s + (kOne - theta) * source.s;
    Rational inv_p = (kOne - theta) * source.p.reciprocal() + theta * target.p.reciprocal();
    return CurvePoint{theta, s_theta, from_reciprocal(inv_p)};
}

std::pair<Rational, ExtReal> interpolation_exponents(const Rational& s1, const ExtReal& p1,
                                                     const Rational& s2, const ExtReal& p2,
                                                     const Rational& theta) {
    if (s1 < kZero || s1 > s2 || s2 > kOne)
        throw precondition_error("interpolation_exponents: need 0 <= s1 <= s2 <= 1");
    if (p1 < ExtReal(kOne) || p2 < ExtReal(kOne))
        throw precondition_error("interpolation_exponents: exponents must be >= 1");
    if (theta < kZero || theta > kOne)
        throw precondition_error("interpolation_exponents: theta must lie in [0,1]");

    Rational s_theta = theta * s1 + (kOne - theta) * s2;
    Rational inv_p = theta * p1.reciprocal() + (kOne - theta) * p2.reciprocal();
    return {s_theta, from_reciprocal(inv_p)};
}

ConnectingLemma parse_connecting_lemma(std::string_view text) {
    if (text == "subcritical-cont" || text == "subcritical-continuous")
        return ConnectingLemma::SubcriticalContinuous;
    if (text == "subcritical-compact") return ConnectingLemma::SubcriticalCompact;
    if (text == "critical") return ConnectingLemma::Critical;
    throw invalid_argument_error("unknown connecting lemma: " + std::string(text));
}

namespace {

/// Region preconditions of the three connecting-curve lemmas.
void check_connecting_region(const SobolevIndex& src, const SobolevIndex& tgt,
                             ConnectingLemma lemma) {
    Regime reg = regime(src);
    const Rational& s = src.s;
    const Rational& st = tgt.s;
    const ExtReal& p = src.p;
    const ExtReal& pt = tgt.p;
    switch (lemma) {
        case ConnectingLemma::SubcriticalContinuous: {
            if (!reg.subcritical()) throw precondition_error("connecting_q: source must satisfy s*p < N");
            if (!(st >= kZero && st <= s && pt >= p && pt <= max_target_p(src, st)))
                throw precondition_error("connecting_q: target outside the continuous region");
            return;
        }
        case ConnectingLemma::SubcriticalCompact: {
            if (!reg.subcritical()) throw precondition_error("connecting_q: source must satisfy s*p < N");
            Rational pf = p.finite();
            Rational sp = s * pf;
            Rational inner_den = sp - (pf - kOne) * st;
            bool ok = st >= kZero && st < s && inner_den.is_positive() &&
                      pt >= ExtReal(sp / inner_den) && pt < max_target_p(src, st);
            if (!ok) throw precondition_error("connecting_q: target outside the compact region");
            return;
        }
        case ConnectingLemma::Critical: {
            if (!reg.critical()) throw precondition_error("connecting_q: source must satisfy s*p = N");
            Rational n(src.dim);
            // The curve s~p~ = N itself is unreachable by any finite-q
            // curve through (s,p); the governing theorem settles those
            // points by other means. Only the identity sits on it here.
            bool ok = (st.is_zero() && pt.is_finite() && pt >= p) ||
                      (st.is_positive() && st <= s && pt >= p && pt <= ExtReal(n / st) &&
                       (st == s || st * pt.finite() < n));
            if (!ok) throw precondition_error("connecting_q: target outside the critical region");
            return;
        }
    }
}

} // namespace

ConnectingCurve connecting_q(const SobolevIndex& source, const SobolevIndex& target,
                             ConnectingLemma lemma) {
    if (source.dim != target.dim) throw precondition_error("connecting_q: dimension mismatch");
    check_connecting_region(source, target, lemma);

    const Rational& s = source.s;
    const Rational& st = target.s;
    const Rational p = source.p.finite();

    ConnectingCurve out;
    switch (lemma) {
        case ConnectingLemma::SubcriticalContinuous:
            out.range_lo = ExtReal(p);
            out.range_hi = ExtReal(sobolev_conjugate(source));
            out.hi_inclusive = true;
            break;
        case ConnectingLemma::SubcriticalCompact:
            out.range_lo = ExtReal(kOne);
            out.range_hi = ExtReal(sobolev_conjugate(source));
            out.hi_inclusive = false;
            break;
        case ConnectingLemma::Critical:
            out.range_lo = ExtReal(p);
            out.range_hi = ExtReal::infinity();
            out.hi_inclusive = false;
            break;
    }

    if (st == s) {
        // Then p~ = p as well; every curve through (s,p) works, take q = p.
        out.q = p;
        out.theta_tilde = kZero;
    } else {
        out.theta_tilde = kOne - st / s;
        const Rational pt = target.p.finite();
        if (target.p == source.p) {
            out.q = p;
        } else {
            Rational denom = s * p - st * pt;
            if (!denom.is_positive())
                throw precondition_error("connecting_q: degenerate target with s~p~ >= sp");
            out.q = p * pt * (s - st) / denom;
        }
    }

    ExtReal qe{out.q};
    bool in_range = qe >= out.range_lo && (out.hi_inclusive ? qe <= out.range_hi : qe < out.range_hi);
    if (!in_range)
        throw precondition_error("connecting_q: solved q = " + out.q.str() +
                                 " falls outside the lemma range");
    return out;
}

double connecting_q_f(double s, double p, double s_tilde, double p_tilde) {
    if (s_tilde == s) return p;
    if (p_tilde == p) return p;
    return p * p_tilde * (s - s_tilde) / (s * p - s_tilde * p_tilde);
}

std::pair<double, double> gamma_curve_f(double s, double inv_p, double s_tilde, double inv_p_tilde,
                                        double theta) {
    double s_theta = theta * s_tilde + (1.0 - theta) * s;
    double inv_p_theta = (1.0 - theta) * inv_p + theta * inv_p_tilde;
    return {s_theta, inv_p_theta};
}

EmbeddingVerdict curve_chain_check(const SobolevIndex& source, const SobolevIndex& target,
                                   const Rational& theta1, const Rational& theta2, DomainKind domain,
                                   bool compact_mode) {
    if (compact_mode) {
        if (!(theta1 > kZero && theta1 < theta2 && theta2 <= kOne))
            throw precondition_error("curve_chain_check: compact mode needs 0 < theta1 < theta2 <= 1");
    } else if (!(theta1 >= kZero && theta1 <= theta2 && theta2 <= kOne)) {
        throw precondition_error("curve_chain_check: need 0 <= theta1 <= theta2 <= 1");
    }

    CurvePoint a = gamma_curve(source, target, theta1);
    CurvePoint b = gamma_curve(source, target, theta2);
    SobolevIndex from(source.dim, a.s_theta, a.p_theta);
    SobolevIndex to(source.dim, b.s_theta, b.p_theta);
    return compact_mode ? classify_compact(from, to, domain) : classify_continuous(from, to, domain);
}

} // namespace soblab
