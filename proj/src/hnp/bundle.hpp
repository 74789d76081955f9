#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hnp/rational.hpp"

namespace hnp {

/// A Harder-Narasimhan slope.  O(r/s) is the stable bundle of slope r/s;
/// it has rank s and degree r.
using Slope = Rational;

/// One block of a canonical HN decomposition: O(slope)^mult with mult >= 1.
struct HNFactor {
  Slope slope;
  std::int64_t mult = 1;

  friend bool operator==(const HNFactor&, const HNFactor&) = default;
};

/// Edge vector of one HN block: for O(r/s)^m this is (m*s, m*r).
/// x is the rank contribution (always positive), y the degree contribution.
struct HNVector {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const HNVector&, const HNVector&) = default;
};

/// A vector bundle identified with its HN polygon: a sequence of factors
/// with strictly decreasing slopes.  The empty sequence is the zero bundle.
/// Values are immutable once constructed.
class Bundle {
 public:
  Bundle() = default;

  /// Canonicalizes an arbitrary factor list: merges equal slopes, drops zero
  /// multiplicities, sorts slopes in decreasing order.  Negative
  /// multiplicities are rejected.
  static Bundle from_factors(std::vector<std::pair<Slope, std::int64_t>> pairs);

  /// O(lambda)
  static Bundle stable(Slope lambda);
  /// O(lambda)^m; m = 0 gives the zero bundle, m < 0 is rejected.
  static Bundle stable_power(Slope lambda, std::int64_t m);
  /// O^n
  static Bundle trivial(std::int64_t n);

  const std::vector<HNFactor>& factors() const { return factors_; }
  bool is_zero() const { return factors_.empty(); }

  std::int64_t rank() const;
  std::int64_t degree() const;

  /// degree/rank; rejects the zero bundle.
  Slope mu() const;
  /// Smallest / largest HN slope; reject the zero bundle.
  Slope mu_min() const;
  Slope mu_max() const;

  /// At most one HN block (includes the zero bundle).
  bool is_semistable() const;
  bool all_slopes_integer() const;

  /// Vertices of the HN polygon as x-coordinates: 0 together with the
  /// cumulative rank after each block.
  std::vector<std::int64_t> vertex_set() const;

  std::vector<HNVector> hn_vectors() const;

  /// Slope of the HN polygon on the unit interval [i-1, i], 1 <= i <= rank.
  Slope slope_on_interval(std::int64_t i) const;

  friend bool operator==(const Bundle&, const Bundle&) = default;

 private:
  std::vector<HNFactor> factors_;
};

enum class SliceMode { LessEq, Less, GreaterEq, Greater };

/// Negates every slope; rank is preserved, degree negated.
Bundle dual(const Bundle& b);

Bundle direct_sum(const Bundle& a, const Bundle& b);

/// Bilinear extension over HN blocks of
/// O(r/s) (x) O(r'/s') = O(r/s + r'/s')^{gcd(ss', rs'+r's)}.
Bundle tensor(const Bundle& a, const Bundle& b);

/// b (x) O(lambda)
Bundle twist(const Bundle& b, Slope lambda);

/// Vertical stretch of the HN polygon: each edge (x, y) becomes (x, c*y),
/// re-expressed canonically.  Rank is preserved, degree multiplied by c.
Bundle stretch(const Bundle& b, std::int64_t c);

/// Sub-sum of HN blocks whose slopes satisfy the comparison against mu.
Bundle slice(const Bundle& b, Slope mu, SliceMode mode);

std::int64_t rank_slice(const Bundle& b, Slope mu, SliceMode mode);

/// y-value of the HN polygon at integer x, 0 <= x <= rank (left endpoint at
/// the origin).
Rational polygon_height(const Bundle& b, std::int64_t x);

/// Degree of the slope >= 0 part.
std::int64_t degree_nonneg(const Bundle& b);

}  // namespace hnp
