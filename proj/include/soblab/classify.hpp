#pragma once

#include "soblab/indices.hpp"

#include <string>
#include <vector>

namespace soblab {

enum class Tri { Yes, No, Unsupported };
enum class CompactTri { Yes, No, NotApplicable, Unsupported };

std::string tri_name(Tri t);
std::string compact_tri_name(CompactTri t);

/// Critical boundaries a target can sit on. These mark the measure-zero
/// curves where the continuous embedding holds but compactness fails, plus
/// the edge of the supercritical Hoelder block.
struct BoundaryFlags {
    bool target_p_max = false;        // p_tilde == N p /(N-(s-s_tilde)p)
    bool critical_curve_sp_n = false; // s_tilde * p_tilde == N (critical regime)
    bool holder_line = false;         // s_tilde == (s p - N)/p (supercritical)

    bool any() const { return target_p_max || critical_curve_sp_n || holder_line; }
    std::vector<std::string> names() const;
};

/// Outcome of an embedding query W^{s,p} -> W^{s~,p~}, carrying the tag of
/// the result that decides it. Tags name theorems ("Thm-1.2"), the scaling
/// counterexample lemmas ("Lemma-2.4"), or the optimality propositions
/// ("Prop-2.10"); "footnote-trivial" marks the identity/classical special
/// cases that the main statements delegate to footnotes.
struct EmbeddingVerdict {
    Tri continuous = Tri::Unsupported;
    CompactTri compact = CompactTri::Unsupported;
    std::string just_continuous; // tag deciding the continuous verdict
    std::string just_compact;    // tag deciding the compact verdict
    BoundaryFlags flags;
    std::string detail; // set for unsupported verdicts: which hypothesis fails
};

/// Continuous-embedding classification. Total on supported indices: the
/// admissible region of the governing theorem and the optimality complement
/// partition the whole (s_tilde, p_tilde) quadrant, so the answer is yes or
/// no for every in-scope input. Unsupported is returned exactly for the
/// combinations the underlying results exclude (s=0 with p=+inf; bounded
/// sources with s=0; the s=p=1 corner outside its stated special cases).
///
/// Also fills the compact verdict: not-applicable on the whole space,
/// otherwise the compact classification below.
EmbeddingVerdict classify_continuous(const SobolevIndex& source, const SobolevIndex& target,
                                     DomainKind domain);

/// Compact-embedding classification; requires a bounded domain (on the
/// whole space the verdict is not-applicable). Strict inequalities hold at
/// the critical curves; the returned flags mark targets sitting on them.
EmbeddingVerdict classify_compact(const SobolevIndex& source, const SobolevIndex& target,
                                  DomainKind domain);

} // namespace soblab
