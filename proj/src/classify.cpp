#include "soblab/classify.hpp"

#include "soblab/errors.hpp"

namespace soblab {

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Unsupported: return "unsupported";
    }
    return "?";
}

std::string compact_tri_name(CompactTri t) {
    switch (t) {
        case CompactTri::Yes: return "yes";
        case CompactTri::No: return "no";
        case CompactTri::NotApplicable: return "not-applicable";
        case CompactTri::Unsupported: return "unsupported";
    }
    return "?";
}

std::vector<std::string> BoundaryFlags::names() const {
    std::vector<std::string> out;
    if (target_p_max) out.push_back("target-p-max");
    if (critical_curve_sp_n) out.push_back("critical-curve-sp=N");
    if (holder_line) out.push_back("holder-line");
    return out;
}

namespace {

const Rational kZero(0);
const Rational kOne(1);

/// Edge of the supercritical Hoelder block, (s*p - N)/p = s - N/p; equals s
/// when p = +inf.
Rational holder_threshold(const SobolevIndex& src) {
    if (src.p.is_infinite()) return src.s;
    return src.s - Rational(src.dim) / src.p.finite();
}

BoundaryFlags compute_flags(const Regime& reg, const SobolevIndex& src, const SobolevIndex& tgt) {
    BoundaryFlags f;
    const Rational& st = tgt.s;
    const ExtReal& pt = tgt.p;
    if (reg.critical()) {
        if (st.is_positive() && pt.is_finite() && st * pt.finite() == Rational(src.dim))
            f.critical_curve_sp_n = true;
    } else if (reg.subcritical() || reg.supercritical()) {
        if (st <= src.s) {
            ExtReal pm = max_target_p(src, st);
            if (pm.is_finite() && pt == pm) f.target_p_max = true;
        }
    }
    if (reg.supercritical() && st == holder_threshold(src)) f.holder_line = true;
    return f;
}

struct Answer {
    Tri value;
    std::string tag;
};

/// Continuous verdict for the subcritical regime, s*p < N. The whole-space
/// region and its complement follow Thm 1.1 and Prop 2.8 (Lemmas 2.3/2.4);
/// the bounded region follows Thm 1.2 and Prop 2.9.
Answer continuous_subcritical(const SobolevIndex& src, const SobolevIndex& tgt, DomainKind dom) {
    const Rational& s = src.s;
    const Rational& st = tgt.s;
    const ExtReal& p = src.p;
    const ExtReal& pt = tgt.p;

    if (dom == DomainKind::WholeSpace) {
        if (st <= s && pt >= p && pt <= max_target_p(src, st)) return {Tri::Yes, "Thm-1.1"};
        // Prop 2.8: the complement splits into Lemma 2.3 (smaller
        // integrability) and Lemma 2.4 (everything above the region). The
        // lemmas assume s > 0; for s = 0 the proposition itself decides.
        if (s.is_zero()) return {Tri::No, "Prop-2.8"};
        if (pt < p) return {Tri::No, "Lemma-2.3"};
        return {Tri::No, "Lemma-2.4"};
    }

    // Bounded Lipschitz domain. For s~ = s = 1 the classical inclusion
    // W^{1,p} into W^{1,p~} for p~ <= p holds (footnote to Thm 1.2).
    if (st == s && s == kOne && pt <= p) return {Tri::Yes, "footnote-trivial"};
    if (st < s && pt <= max_target_p(src, st)) return {Tri::Yes, "Thm-1.2"};
    if (st >= s && pt < p) return {Tri::No, "Prop-2.9"};
    return {Tri::No, "Lemma-2.4"};
}

/// Continuous verdict for the critical regime, s*p = N (p finite). Governed
/// by Thm 1.5 / Thm 1.7 with the L^infinity endpoint facts encoded: for
/// N >= 2 (or N = 1 with p > 1) W^{s,p} does not reach L^infinity; the
/// W^{1,1} case is handled by the caller.
Answer continuous_critical(const SobolevIndex& src, const SobolevIndex& tgt, DomainKind dom) {
    const Rational& s = src.s;
    const Rational& st = tgt.s;
    const ExtReal& p = src.p;
    const ExtReal& pt = tgt.p;
    const Rational n(src.dim);
    const bool whole = dom == DomainKind::WholeSpace;

    ExtReal lower = whole ? p : ExtReal(kOne);
    if (st.is_zero()) {
        if (pt.is_finite() && pt >= lower) return {Tri::Yes, whole ? "Thm-1.5" : "Thm-1.7"};
        if (pt.is_infinite()) {
            // Target L^infinity on the critical line: fails for N >= 2 and
            // for N = 1 with p > 1 (MR3990737, Theorem B). N = 1 with p = 1
            // is the W^{1,1} case, dispatched before the regime split.
            if (src.dim >= 2) return {Tri::No, "Lemma-2.5"};
            return {Tri::No, whole ? "Prop-2.11" : "Prop-2.12"};
        }
    } else {
        ExtReal curve = ExtReal(n / st);
        if (!whole && st == s && s == kOne && pt <= p) return {Tri::Yes, "footnote-trivial"};
        if (st <= s && (whole ? st > kZero : st < s) && pt >= lower && pt <= curve)
            return {Tri::Yes, whole ? "Thm-1.5" : "Thm-1.7"};
    }
    if (whole) {
        if (pt < p) return {Tri::No, "Lemma-2.3"};
        return {Tri::No, "Lemma-2.5"};
    }
    if (st >= s && pt < p) return {Tri::No, "Prop-2.12"};
    return {Tri::No, "Lemma-2.5"};
}

/// Continuous verdict for the supercritical regime, s*p > N (p may be
/// +inf). The region of Thm 1.8 / Thm 1.9 consists of the Hoelder block
/// s~ <= (sp-N)/p with arbitrary integrability and the Sobolev-bounded
/// block above it.
Answer continuous_supercritical(const SobolevIndex& src, const SobolevIndex& tgt, DomainKind dom) {
    const Rational& s = src.s;
    const Rational& st = tgt.s;
    const ExtReal& p = src.p;
    const ExtReal& pt = tgt.p;
    const Rational h = holder_threshold(src);
    const bool whole = dom == DomainKind::WholeSpace;
    ExtReal lower = whole ? p : ExtReal(kOne);

    if (pt >= lower) {
        if (st <= h) return {Tri::Yes, whole ? "Thm-1.8" : "Thm-1.9"};
        if (st <= s && (whole || st < s) && pt <= max_target_p(src, st))
            return {Tri::Yes, whole ? "Thm-1.8" : "Thm-1.9"};
    }
    if (!whole && st == s && s == kOne && pt <= p) return {Tri::Yes, "footnote-trivial"};
    if (whole) {
        if (pt < p) return {Tri::No, p.is_infinite() ? "Prop-2.14" : "Lemma-2.3"};
        return {Tri::No, "Lemma-2.6"};
    }
    if (st >= s && pt < p) return {Tri::No, "Prop-2.15"};
    return {Tri::No, "Lemma-2.6"};
}

/// Compact region test on a bounded domain, per regime. Returns the tag of
/// the governing statement when inside, or the optimality proposition tag
/// when the continuous embedding holds but compactness fails.
Answer compact_bounded(const Regime& reg, const SobolevIndex& src, const SobolevIndex& tgt,
                       const Answer& cont) {
    const Rational& s = src.s;
    const Rational& st = tgt.s;
    const ExtReal& pt = tgt.p;
    const Rational n(src.dim);

    if (reg.subcritical()) {
        const Rational p = src.p.finite();
        const Rational sp = s * p;
        if (st < s && pt < max_target_p(src, st)) {
            // Inside Cor 1.4; Thm 1.3 additionally needs the lower curve
            // p~ >= sp/(sp-(p-1)s~).
            Rational inner_den = sp - (p - kOne) * st;
            bool in_thm13 = inner_den.is_positive() && pt >= ExtReal(sp / inner_den);
            return {Tri::Yes, in_thm13 ? "Thm-1.3" : "Cor-1.4"};
        }
        if (cont.value == Tri::Yes) return {Tri::No, "Prop-2.10"};
        return {Tri::No, cont.tag};
    }

    if (reg.critical()) {
        bool inside = (st.is_zero() && pt.is_finite()) ||
                      (st.is_positive() && st < s && pt < ExtReal(n / st));
        if (inside) return {Tri::Yes, "Thm-1.7"};
        if (cont.value == Tri::Yes) return {Tri::No, "Prop-2.13"};
        return {Tri::No, cont.tag};
    }

    // Supercritical.
    const Rational h = holder_threshold(src);
    bool inside = (st <= h) || (st > h && st < s && pt < max_target_p(src, st));
    if (inside) return {Tri::Yes, "Thm-1.10"};
    if (cont.value == Tri::Yes) return {Tri::No, "Prop-2.16"};
    return {Tri::No, cont.tag};
}

EmbeddingVerdict classify(const SobolevIndex& source, const SobolevIndex& target, DomainKind domain) {
    if (source.dim != target.dim)
        throw precondition_error("dimension mismatch: source " + source.str() + " vs target " +
                                 target.str());

    EmbeddingVerdict v;
    Regime reg = regime(source);

    if (reg.kind == RegimeKind::Unsupported) {
        v.continuous = Tri::Unsupported;
        v.compact = CompactTri::Unsupported;
        v.detail = "source with s=0 and p=+inf lies outside every stated result";
        return v;
    }

    v.flags = compute_flags(reg, source, target);
    const bool bounded = domain == DomainKind::BoundedLipschitz;
    const bool s_equals_p = source.s == kOne && source.p == ExtReal(kOne);

    // Exact identity target: trivially continuous.
    if (target.s == source.s && target.p == source.p) {
        v.continuous = Tri::Yes;
        v.just_continuous = "footnote-trivial";
        if (!bounded) {
            v.compact = CompactTri::NotApplicable;
        } else if (s_equals_p) {
            v.compact = CompactTri::Unsupported;
            v.detail = "compactness for W^{1,1} is outside the stated results";
        } else {
            v.compact = CompactTri::No;
            v.just_compact = reg.subcritical()    ? "Prop-2.10"
                             : reg.critical()     ? "Prop-2.13"
                                                  : "Prop-2.16";
        }
        return v;
    }

    // The hypothesis s != p of the sub/critical theorems bites exactly at
    // s = p = 1. The stated special case: for N = 1 (so sp = N), W^{1,1}
    // embeds continuously into L^infinity. Nothing else is asserted.
    if (s_equals_p && !reg.supercritical()) {
        if (reg.critical() && target.s.is_zero() && target.p.is_infinite()) {
            v.continuous = Tri::Yes;
            v.just_continuous = bounded ? "Thm-1.7" : "Thm-1.5";
            v.compact = bounded ? CompactTri::Unsupported : CompactTri::NotApplicable;
            if (bounded) v.detail = "only the continuous W^{1,1} endpoint statement is available";
            return v;
        }
        v.continuous = Tri::Unsupported;
        v.compact = bounded ? CompactTri::Unsupported : CompactTri::NotApplicable;
        v.detail = "the governing theorem requires s != p and no stated special case applies";
        return v;
    }

    // Bounded-domain statements assume s > 0; W^{0,p} sources are only
    // covered on the whole space.
    if (bounded && source.s.is_zero()) {
        v.continuous = Tri::Unsupported;
        v.compact = CompactTri::Unsupported;
        v.detail = "bounded-domain results require s in (0,1]";
        return v;
    }

    Answer cont = reg.subcritical()    ? continuous_subcritical(source, target, domain)
                  : reg.critical()     ? continuous_critical(source, target, domain)
                                       : continuous_supercritical(source, target, domain);
    v.continuous = cont.value;
    v.just_continuous = cont.tag;

    if (!bounded) {
        v.compact = CompactTri::NotApplicable;
        return v;
    }
    Answer comp = compact_bounded(reg, source, target, cont);
    v.compact = comp.value == Tri::Yes ? CompactTri::Yes : CompactTri::No;
    v.just_compact = comp.tag;
    return v;
}

} // namespace

EmbeddingVerdict classify_continuous(const SobolevIndex& source, const SobolevIndex& target,
                                     DomainKind domain) {
    return classify(source, target, domain);
}

EmbeddingVerdict classify_compact(const SobolevIndex& source, const SobolevIndex& target,
                                  DomainKind domain) {
    return classify(source, target, domain);
}

} // namespace soblab
