#include "hnp/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace hnp {

namespace {

// HN slopes of both bundles, deduplicated.
std::vector<Slope> slope_union(const Bundle& a, const Bundle& b) {
  std::vector<Slope> mus;
  for (const auto& f : a.factors()) mus.push_back(f.slope);
  for (const auto& f : b.factors()) mus.push_back(f.slope);
  std::sort(mus.begin(), mus.end());
  mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
  return mus;
}

// Factors of b with slope <= mu, as a trailing subsequence view.
// Slice equality reduces to equality of these suffixes.
bool le_slices_equal(const Bundle& e, const Bundle& f, const Slope& mu) {
  return slice(e, mu, SliceMode::LessEq) == slice(f, mu, SliceMode::LessEq);
}

bool ge_slices_equal(const Bundle& e, const Bundle& f, const Slope& mu) {
  return slice(e, mu, SliceMode::GreaterEq) == slice(f, mu, SliceMode::GreaterEq);
}

// Slope of the right-aligned polygon of b on [-i, -i+1], 1 <= i <= rank(b).
Slope slope_from_right(const Bundle& b, std::int64_t i) {
  return b.slope_on_interval(b.rank() - i + 1);
}

// Vertex x-offsets measured from the right endpoint.
std::vector<std::int64_t> right_vertex_offsets(const Bundle& b) {
  std::vector<std::int64_t> out;
  const std::int64_t r = b.rank();
  for (std::int64_t v : b.vertex_set()) out.push_back(r - v);
  std::sort(out.begin(), out.end());
  return out;
}

// Right-aligned polygons agree on [-j, 0].
bool agree_from_right(const Bundle& e, const Bundle& f, std::int64_t j) {
  if (j > e.rank() || j > f.rank()) return false;
  for (std::int64_t t = 1; t <= j; ++t)
    if (!(slope_from_right(e, t) == slope_from_right(f, t))) return false;
  return true;
}

}  // namespace

Verdict is_quotient(const Bundle& e, const Bundle& f) {
  if (f.is_zero()) return Verdict::yes();
  std::vector<Slope> mus = slope_union(e, f);
  // sentinel below every slope; both slices are zero there
  mus.insert(mus.begin(), mus.front() - Slope(1));
  for (const auto& mu : mus) {
    const std::int64_t re = rank_slice(e, mu, SliceMode::LessEq);
    const std::int64_t rf = rank_slice(f, mu, SliceMode::LessEq);
    if (re < rf) return Verdict::no(mu, FailedCondition::RankInequality);
    if (re == rf && !le_slices_equal(e, f, mu))
      return Verdict::no(mu, FailedCondition::EqualityCase);
  }
  return Verdict::yes();
}

Verdict is_quotient_polygonal(const Bundle& e, const Bundle& f) {
  if (f.is_zero()) return Verdict::yes();
  if (e.rank() < f.rank()) {
    // HN(E) has no segment on [-i, -i+1] for i > rank(E)
    return Verdict::no(slope_from_right(f, e.rank() + 1), FailedCondition::PolygonSlope);
  }
  for (std::int64_t i = 1; i <= f.rank(); ++i) {
    const Slope sf = slope_from_right(f, i);
    if (sf < slope_from_right(e, i))
      return Verdict::no(sf, FailedCondition::PolygonSlope);
  }
  const auto ve = right_vertex_offsets(e);
  const auto vf = right_vertex_offsets(f);
  std::vector<std::int64_t> common;
  std::set_intersection(ve.begin(), ve.end(), vf.begin(), vf.end(),
                        std::back_inserter(common));
  for (std::int64_t j : common) {
    if (j < 1) continue;  // at j = 0 the polygons agree on the degenerate [-0, 0]
    // F's segment [-j, -j+1] exists since j <= rank(F); E's segment
    // [-j-1, -j] exists only when j < rank(E).
    const bool comparison_holds =
        j + 1 <= e.rank() && slope_from_right(f, j) >= slope_from_right(e, j + 1);
    if (!comparison_holds && !agree_from_right(e, f, j))
      return Verdict::no(slope_from_right(f, j), FailedCondition::PolygonVertex);
  }
  return Verdict::yes();
}

Verdict subbundle_sufficient(const Bundle& e, const Bundle& d) {
  if (d.is_zero()) return Verdict::yes();
  std::vector<Slope> mus = slope_union(e, d);
  // sentinel above every slope; both slices are zero there
  mus.push_back(mus.back() + Slope(1));
  for (const auto& mu : mus) {
    const std::int64_t re = rank_slice(e, mu, SliceMode::GreaterEq);
    const std::int64_t rd = rank_slice(d, mu, SliceMode::GreaterEq);
    if (re < rd) return Verdict::no(mu, FailedCondition::RankInequality);
    if (re == rd && !ge_slices_equal(e, d, mu))
      return Verdict::no(mu, FailedCondition::EqualityCase);
  }
  return Verdict::yes();
}

bool subbundle_necessary(const Bundle& e, const Bundle& d) {
  std::vector<Slope> mus = slope_union(e, d);
  for (const auto& mu : mus)
    if (rank_slice(e, mu, SliceMode::GreaterEq) < rank_slice(d, mu, SliceMode::GreaterEq))
      return false;
  return true;
}

bool is_globally_generated(const Bundle& f, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("need at least one section");
  if (f.is_zero()) return true;
  if (f.mu_min() < Slope(0)) return false;
  const std::int64_t r = f.rank();
  if (r > n) return false;
  if (r == n) return f == Bundle::trivial(n);
  return true;
}

}  // namespace hnp
