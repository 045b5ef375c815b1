#pragma once

#include "soblab/rational.hpp"

#include <optional>
#include <string>

namespace soblab {

/// Which kind of domain an embedding query refers to. Bounded domains are
/// always understood as open, bounded and with Lipschitz boundary; the
/// numerical engines realize them as boxes or balls.
enum class DomainKind { WholeSpace, BoundedLipschitz };

DomainKind parse_domain_kind(std::string_view text); // "rn" | "bounded"
std::string domain_kind_name(DomainKind k);

/// A point (N, s, p): dimension, smoothness order in [0,1], integrability
/// exponent in [1,+inf]. Both sides of an embedding query are values of
/// this type (with equal N).
struct SobolevIndex {
    int dim;
    Rational s;
    ExtReal p;

    SobolevIndex(int dim_, Rational s_, ExtReal p_);

    bool operator==(const SobolevIndex& o) const = default;
    std::string str() const;
};

enum class RegimeKind { Subcritical, Critical, Supercritical, Unsupported };

/// Case split on the product s*p against the dimension. Exact: computed in
/// rational arithmetic, never by float comparison. s>0 with p=+inf counts
/// as supercritical (s*p = +inf); s=0 with p=+inf is unsupported.
struct Regime {
    RegimeKind kind;
    std::optional<ExtReal> sp; // empty only for the unsupported 0*inf case

    bool subcritical() const { return kind == RegimeKind::Subcritical; }
    bool critical() const { return kind == RegimeKind::Critical; }
    bool supercritical() const { return kind == RegimeKind::Supercritical; }
};

std::string regime_name(RegimeKind k);

Regime regime(const SobolevIndex& idx);

/// Fractional Sobolev conjugate N*p/(N - s*p). Requires a subcritical index.
Rational sobolev_conjugate(const SobolevIndex& idx);

/// Largest admissible target integrability N*p/(N - (s - s_tilde)*p) for a
/// given target smoothness s_tilde <= s. Returns +inf when the denominator
/// is non-positive or p = +inf (every p_tilde up to +inf is admissible:
/// the supercritical Hoelder block).
ExtReal max_target_p(const SobolevIndex& source, const Rational& s_tilde);

} // namespace soblab
