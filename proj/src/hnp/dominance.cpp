#include "hnp/dominance.hpp"

#include <algorithm>
#include <stdexcept>

namespace hnp {

bool slopewise_dominates(const Bundle& v, const Bundle& w) {
  if (v.rank() < w.rank()) return false;
  // walk both block sequences in parallel over rank units
  std::size_t iv = 0, iw = 0;
  std::int64_t cv = 0, cw = 0;  // rank units consumed so far in current blocks
  const auto& fv = v.factors();
  const auto& fw = w.factors();
  std::int64_t i = 0;
  const std::int64_t rw = w.rank();
  while (i < rw) {
    const std::int64_t bv = checked_mul(fv[iv].mult, fv[iv].slope.den);
    const std::int64_t bw = checked_mul(fw[iw].mult, fw[iw].slope.den);
    if (fw[iw].slope > fv[iv].slope) return false;
    const std::int64_t step = std::min(bv - cv, bw - cw);
    i += step;
    cv += step;
    cw += step;
    if (cv == bv) { ++iv; cv = 0; }
    if (cw == bw) { ++iw; cw = 0; }
  }
  return true;
}

bool dominates_via_ranks(const Bundle& v, const Bundle& w) {
  std::vector<Slope> mus;
  for (const auto& f : v.factors()) mus.push_back(f.slope);
  for (const auto& f : w.factors()) mus.push_back(f.slope);
  for (const auto& mu : mus)
    if (rank_slice(v, mu, SliceMode::GreaterEq) < rank_slice(w, mu, SliceMode::GreaterEq))
      return false;
  return true;
}

namespace {

// Initial part of b spanning rank units [0, r]; r must land on a vertex.
Bundle prefix_by_rank(const Bundle& b, std::int64_t r) {
  std::vector<std::pair<Slope, std::int64_t>> pairs;
  std::int64_t cum = 0;
  for (const auto& f : b.factors()) {
    if (cum == r) break;
    const std::int64_t block = checked_mul(f.mult, f.slope.den);
    if (cum + block > r) throw std::logic_error("prefix cut inside a block");
    pairs.emplace_back(f.slope, f.mult);
    cum += block;
  }
  if (cum != r) throw std::logic_error("prefix rank exceeds bundle rank");
  return Bundle::from_factors(std::move(pairs));
}

Bundle multiset_difference(const Bundle& whole, const Bundle& part) {
  std::vector<std::pair<Slope, std::int64_t>> pairs;
  std::size_t ip = 0;
  const auto& pf = part.factors();
  for (const auto& f : whole.factors()) {
    std::int64_t m = f.mult;
    if (ip < pf.size() && pf[ip].slope == f.slope) {
      if (pf[ip].mult > m) throw std::logic_error("multiset difference underflow");
      m -= pf[ip].mult;
      ++ip;
    }
    if (m > 0) pairs.emplace_back(f.slope, m);
  }
  if (ip != pf.size()) throw std::logic_error("subtrahend is not contained");
  return Bundle::from_factors(std::move(pairs));
}

}  // namespace

CommonFactorDecomposition common_factor_decompose(const Bundle& v, const Bundle& w) {
  if (!slopewise_dominates(v, w))
    throw std::invalid_argument("common factor decomposition needs slopewise dominance");
  // The vertical gap between the left-aligned polygons is nonnegative and
  // nondecreasing, and it vanishes exactly on [0, r] for an integer r.
  std::int64_t r = 0;
  for (std::int64_t x = 1; x <= w.rank(); ++x) {
    if (polygon_height(v, x) == polygon_height(w, x))
      r = x;
    else
      break;
  }
  CommonFactorDecomposition out;
  out.common = prefix_by_rank(w, r);
  out.v_rest = multiset_difference(v, out.common);
  out.w_rest = multiset_difference(w, out.common);
  return out;
}

bool equal_rank_duality_holds(const Bundle& v, const Bundle& w) {
  if (v.rank() != w.rank())
    throw std::invalid_argument("equal rank duality needs equal ranks");
  const bool forward = slopewise_dominates(v, w);
  const bool dualized = slopewise_dominates(dual(w), dual(v));
  if (forward != dualized)
    throw std::logic_error("slopewise dominance duality violated");
  return forward;
}

}  // namespace hnp
