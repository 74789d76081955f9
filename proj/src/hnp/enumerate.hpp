#pragma once

#include <functional>
#include <vector>

#include "hnp/bundle.hpp"

namespace hnp {

/// Bounds for the exhaustive enumeration.  A bundle is emitted when
///   rank <= max_rank,
///   every slope denominator <= max_denominator, and
///   every vertex of its HN polygon has |y| <= max_abs_degree
/// (so in particular |degree| <= max_abs_degree).
struct EnumBounds {
  std::int64_t max_rank = 4;
  std::int64_t max_abs_degree = 4;
  std::int64_t max_denominator = 2;
  bool include_zero = true;
};

/// Visits every bundle within the bounds exactly once, in a deterministic
/// order: the zero bundle first (when included), then depth-first over
/// factor sequences with slopes taken in decreasing order.
void for_each_bundle(const EnumBounds& bounds, const std::function<void(const Bundle&)>& visit);

std::vector<Bundle> enumerate_bundles(const EnumBounds& bounds);

/// All nonzero bundles whose slopes are integers in [min_slope, max_slope]
/// and whose rank is at most max_rank; same deterministic order.
std::vector<Bundle> enumerate_integer_slope_bundles(std::int64_t min_slope,
                                                    std::int64_t max_slope,
                                                    std::int64_t max_rank);

}  // namespace hnp
