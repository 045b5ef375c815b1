#include "soblab/indices.hpp"

#include "soblab/errors.hpp"

namespace soblab {

DomainKind parse_domain_kind(std::string_view text) {
    if (text == "rn" || text == "RN" || text == "whole" || text == "wholespace")
        return DomainKind::WholeSpace;
    if (text == "bounded" || text == "omega" || text == "lipschitz")
        return DomainKind::BoundedLipschitz;
    throw invalid_argument_error("unknown domain kind: " + std::string(text) + " (expected rn|bounded)");
}

std::string domain_kind_name(DomainKind k) {
    return k == DomainKind::WholeSpace ? "rn" : "bounded";
}

SobolevIndex::SobolevIndex(int dim_, Rational s_, ExtReal p_) : dim(dim_), s(s_), p(p_) {
    if (dim < 1) throw invalid_argument_error("dimension must be >= 1");
    if (s < Rational(0) || s > Rational(1))
        throw invalid_argument_error("smoothness s must lie in [0,1], got " + s.str());
    if (p < ExtReal(Rational(1)))
        throw invalid_argument_error("integrability p must lie in [1,+inf], got " + p.str());
}

std::string SobolevIndex::str() const {
    return "(N=" + std::to_string(dim) + ", s=" + s.str() + ", p=" + p.str() + ")";
}

std::string regime_name(RegimeKind k) {
    switch (k) {
        case RegimeKind::Subcritical: return "subcritical";
        case RegimeKind::Critical: return "critical";
        case RegimeKind::Supercritical: return "supercritical";
        case RegimeKind::Unsupported: return "unsupported";
    }
    return "?";
}

Regime regime(const SobolevIndex& idx) {
    if (idx.p.is_infinite()) {
        if (idx.s.is_zero()) return Regime{RegimeKind::Unsupported, std::nullopt};
        return Regime{RegimeKind::Supercritical, ExtReal::infinity()};
    }
    Rational sp = idx.s * idx.p.finite();
    Rational n(idx.dim);
    RegimeKind kind = sp < n   ? RegimeKind::Subcritical
                      : sp == n ? RegimeKind::Critical
                                : RegimeKind::Supercritical;
    return Regime{kind, ExtReal(sp)};
}

Rational sobolev_conjugate(const SobolevIndex& idx) {
    Regime r = regime(idx);
    if (!r.subcritical())
        throw precondition_error("sobolev_conjugate requires s*p < N, got " + idx.str());
    Rational p = idx.p.finite();
    Rational n(idx.dim);
    return n * p / (n - idx.s * p);
}

ExtReal max_target_p(const SobolevIndex& source, const Rational& s_tilde) {
    if (s_tilde < Rational(0) || s_tilde > source.s)
        throw precondition_error("max_target_p requires 0 <= s_tilde <= s");
    if (source.p.is_infinite()) return ExtReal::infinity();
    Rational p = source.p.finite();
    Rational n(source.dim);
    Rational denom = n - (source.s - s_tilde) * p;
    if (!denom.is_positive()) return ExtReal::infinity();
    return ExtReal(n * p / denom);
}

} // namespace soblab
