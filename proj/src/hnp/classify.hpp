#pragma once

#include <optional>

#include "hnp/bundle.hpp"

namespace hnp {

enum class FailedCondition {
  RankInequality,  // a rank-of-slice inequality fails at witness_mu
  EqualityCase,    // ranks agree at witness_mu but the slices differ
  PolygonSlope,    // unit-interval slope comparison fails (right-aligned)
  PolygonVertex,   // vertex clause fails (right-aligned)
};

/// Explainable yes/no answer.  witness_mu and failed_condition are present
/// exactly when the answer is false.
struct Verdict {
  bool answer = true;
  std::optional<Slope> witness_mu;
  std::optional<FailedCondition> failed_condition;

  static Verdict yes() { return {}; }
  static Verdict no(Slope mu, FailedCondition c) { return {false, mu, c}; }
};

/// F is a quotient bundle of E iff rank(E^{<=mu}) >= rank(F^{<=mu}) for all
/// mu, with the slices isomorphic whenever equality holds.  mu ranges over
/// the HN slopes of E and F plus a sentinel below both minima.  The zero
/// bundle is a quotient of anything.
Verdict is_quotient(const Bundle& e, const Bundle& f);

/// Same predicate evaluated on the right-aligned polygons:
/// (i')  on each unit interval [-i, -i+1], i = 1..rank(F), the slope of
///       HN(F) is >= the slope of HN(E) (a missing E segment fails);
/// (ii') at every common vertex -j the slope of HN(F) on [-j, -j+1] is
///       >= the slope of HN(E) on [-j-1, -j], unless the polygons agree on
///       [-j, 0].
Verdict is_quotient_polygonal(const Bundle& e, const Bundle& f);

/// Sufficient condition for D to embed into E as a subbundle:
/// rank(E^{>=mu}) >= rank(D^{>=mu}) for all mu with equality only when the
/// slices are isomorphic.  A true verdict guarantees an embedding; a false
/// verdict is inconclusive (the condition is not necessary).
Verdict subbundle_sufficient(const Bundle& e, const Bundle& d);

/// Necessary condition for D to embed into E: rank(E^{>=mu}) >= rank(D^{>=mu})
/// for all mu, i.e. E slopewise dominates D.  Conjecturally also sufficient;
/// a true result here is NOT a proof of embeddability.
bool subbundle_necessary(const Bundle& e, const Bundle& d);

/// F is generated by n global sections iff all slopes of F are nonnegative
/// and rank(F) <= n, with rank(F) = n only when F = O^n.
bool is_globally_generated(const Bundle& f, std::int64_t n);

}  // namespace hnp
