#pragma once

#include "soblab/classify.hpp"
#include "soblab/indices.hpp"

#include <string>
#include <utility>

namespace soblab {

/// A point of the interpolation curve joining (s,p) at theta=0 to
/// (s~,p~) at theta=1: s affine in theta, 1/p affine in theta (1/inf = 0).
struct CurvePoint {
    Rational theta;
    Rational s_theta;
    ExtReal p_theta;
};

/// Evaluates the curve for source (s,p) and target (s~,p~) at theta in
/// [0,1]. Endpoints reproduce the inputs exactly.
CurvePoint gamma_curve(const SobolevIndex& source, const SobolevIndex& target, const Rational& theta);

/// Interpolation exponents of the Brezis-Mironescu-type inequality:
/// s_theta = theta*s1 + (1-theta)*s2, 1/p_theta = theta/p1 + (1-theta)/p2.
/// Requires 0 <= s1 <= s2 <= 1, p1, p2 in [1,+inf], theta in [0,1].
std::pair<Rational, ExtReal> interpolation_exponents(const Rational& s1, const ExtReal& p1,
                                                     const Rational& s2, const ExtReal& p2,
                                                     const Rational& theta);

/// Which curve lemma a connecting-curve query runs under; each fixes the
/// admissible-region precondition and the valid range of q.
enum class ConnectingLemma { SubcriticalContinuous, SubcriticalCompact, Critical };

ConnectingLemma parse_connecting_lemma(std::string_view text);

struct ConnectingCurve {
    Rational q;            // endpoint exponent: the curve runs (s,p) -> (0,q)
    Rational theta_tilde;  // parameter with gamma_q(theta~) = (s~,p~)
    ExtReal range_lo;      // valid range for q per the governing lemma
    ExtReal range_hi;
    bool hi_inclusive;
};

/// Solves for the curve through (s,p) and (s~,p~): q = p p~ (s-s~)/(sp - s~p~),
/// theta~ = 1 - s~/s, with the degenerate branches s~ = s (any q, theta~=0,
/// canonically q=p) and p~ = p (q=p). Preconditions: the target lies in the
/// region of the corresponding lemma.
ConnectingCurve connecting_q(const SobolevIndex& source, const SobolevIndex& target,
                             ConnectingLemma lemma);

/// Float-path versions used to exercise the double adapter: same formulas
/// evaluated in IEEE doubles.
double connecting_q_f(double s, double p, double s_tilde, double p_tilde);
std::pair<double, double> gamma_curve_f(double s, double inv_p, double s_tilde, double inv_p_tilde,
                                        double theta); // returns (s_theta, 1/p_theta)

/// Classifies the embedding of gamma(theta1) into gamma(theta2) along the
/// source->target curve. Continuous mode needs 0 <= theta1 <= theta2 <= 1;
/// compact mode needs 0 < theta1 < theta2 <= 1 (strict).
EmbeddingVerdict curve_chain_check(const SobolevIndex& source, const SobolevIndex& target,
                                   const Rational& theta1, const Rational& theta2, DomainKind domain,
                                   bool compact_mode);

} // namespace soblab
