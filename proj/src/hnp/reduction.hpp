#pragma once

#include <optional>
#include <vector>

#include "hnp/bundle.hpp"

namespace hnp {

/// c_{E,F}(Q) = deg(E*F)^{>=0} + deg(Q*Q)^{>=0} - deg(E*Q)^{>=0} - deg(Q*F)^{>=0}
/// where deg(V*W)^{>=0} abbreviates deg(V^dual (x) W)^{>=0}.  Defined for
/// arbitrary triples; empty sums are zero.
std::int64_t c_value(const Bundle& e, const Bundle& f, const Bundle& q);

/// Maximal slope reduction of V to W: replaces every slope of V above
/// mu_max(W) by mu_max(W), preserving rank.  Requires nonzero bundles with
/// integer slopes and V slopewise dominating W.
Bundle max_slope_reduction(const Bundle& v, const Bundle& w);

struct ReductionStep {
  Bundle f;         // F_n
  Bundle common_u;  // U_n, the shared part of F_n and Q
  std::int64_t c;   // c_{E,F_n}(Q)
};

/// The sequence (F_n): F_0 = F; each step splits off the common part U_n of
/// (F_n, Q) and applies the maximal slope reduction to the remainder.  When
/// the process terminates, the final F_n equals Q; rank(U_n) grows strictly,
/// so at most rank(Q)+1 steps are recorded.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  bool terminated = false;
};

/// Requires: F, Q nonzero, rank(F) = rank(Q), integer slopes throughout,
/// and F slopewise dominating Q.
ReductionTrace slope_reduction_sequence(const Bundle& e, const Bundle& f, const Bundle& q);

/// The equality-case clause of the key inequality: at every mu where
/// rank(E^{<=mu}) = rank(Q^{<=mu}), the slices E^{<=mu} and F^{<=mu} agree.
/// Without it the inequality c >= 0 still holds, but c = 0 is possible with
/// F != Q (for example E = O(2)+O(1), F = O(2), Q = O(1)); with it, c = 0
/// forces F = Q, and the first slope-reduction step drops strictly.
bool equality_case_clause(const Bundle& e, const Bundle& f, const Bundle& q);

enum class Hypothesis { I = 1, II = 2, III = 3, IV = 4 };

/// Status report for one instance of the inequality c_{E,F}(Q) >= 0.
/// Hypotheses: (i) F satisfies the quotient conditions against E, (ii) Q
/// does too, (iii) rank(F^{>=mu}) >= rank(Q^{>=mu}) for all mu, (iv)
/// mu_min(E) < mu_min(F).  equality_consistent records whether
/// (c = 0) <=> (F = Q) holds on this instance; the inequality and the
/// equivalence are guaranteed only when all hypotheses hold.
struct KeyInequalityReport {
  std::int64_t c = 0;
  bool hypotheses_ok = false;
  std::optional<Hypothesis> violated_hypothesis;  // first violated, if any
  bool equality_consistent = false;
};

/// Never rejects; zero bundles follow the empty-sum conventions.
KeyInequalityReport key_inequality_check(const Bundle& e, const Bundle& f, const Bundle& q);

}  // namespace hnp
