#include "hnp/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hnp {

namespace {

// Slopes that can appear under the bounds, in strictly decreasing order.
// A factor of slope p/q needs q <= max_denominator and q <= max_rank; its
// first block end sits at height y + m*p with |y| <= D, so |p| <= 2D.
std::vector<Slope> candidate_slopes(const EnumBounds& b) {
  std::vector<Slope> slopes;
  const std::int64_t pmax = checked_mul(2, b.max_abs_degree);
  const std::int64_t qmax = std::min(b.max_denominator, b.max_rank);
  for (std::int64_t q = 1; q <= qmax; ++q)
    for (std::int64_t p = -pmax; p <= pmax; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) slopes.emplace_back(p, q);
  std::sort(slopes.begin(), slopes.end(), [](const Slope& a, const Slope& c) { return c < a; });
  return slopes;
}

struct Walker {
  const EnumBounds& bounds;
  const std::function<void(const Bundle&)>& visit;
  const std::vector<Slope> slopes;
  std::vector<std::pair<Slope, std::int64_t>> acc;

  void run() {
    if (bounds.include_zero) visit(Bundle{});
    extend(0, bounds.max_rank, 0);
  }

  void extend(std::size_t start, std::int64_t rank_left, std::int64_t y) {
    for (std::size_t i = start; i < slopes.size(); ++i) {
      const std::int64_t p = slopes[i].num, q = slopes[i].den;
      for (std::int64_t m = 1; checked_mul(m, q) <= rank_left; ++m) {
        const std::int64_t y2 = checked_add(y, checked_mul(m, p));
        // growing m only pushes y2 further out of the box
        if (y2 > bounds.max_abs_degree || y2 < -bounds.max_abs_degree) break;
        acc.emplace_back(slopes[i], m);
        visit(Bundle::from_factors(acc));
        extend(i + 1, rank_left - m * q, y2);
        acc.pop_back();
      }
    }
  }
};

}  // namespace

void for_each_bundle(const EnumBounds& bounds, const std::function<void(const Bundle&)>& visit) {
  if (bounds.max_rank < 1) throw std::invalid_argument("max_rank must be positive");
  if (bounds.max_denominator < 1) throw std::invalid_argument("max_denominator must be positive");
  if (bounds.max_abs_degree < 0) throw std::invalid_argument("max_abs_degree must be nonnegative");
  Walker w{bounds, visit, candidate_slopes(bounds), {}};
  w.run();
}

std::vector<Bundle> enumerate_bundles(const EnumBounds& bounds) {
  std::vector<Bundle> out;
  for_each_bundle(bounds, [&](const Bundle& b) { out.push_back(b); });
  return out;
}

std::vector<Bundle> enumerate_integer_slope_bundles(std::int64_t min_slope,
                                                    std::int64_t max_slope,
                                                    std::int64_t max_rank) {
  if (max_rank < 1) throw std::invalid_argument("max_rank must be positive");
  if (min_slope > max_slope) throw std::invalid_argument("empty slope range");
  std::vector<Bundle> out;
  std::vector<std::pair<Slope, std::int64_t>> acc;
  // decreasing slopes, depth first, as in for_each_bundle
  std::function<void(std::int64_t, std::int64_t)> extend =
      [&](std::int64_t next_slope, std::int64_t rank_left) {
        for (std::int64_t p = next_slope; p >= min_slope; --p) {
          for (std::int64_t m = 1; m <= rank_left; ++m) {
            acc.emplace_back(Slope(p), m);
            out.push_back(Bundle::from_factors(acc));
            extend(p - 1, rank_left - m);
            acc.pop_back();
          }
        }
      };
  extend(max_slope, max_rank);
  return out;
}

}  // namespace hnp
