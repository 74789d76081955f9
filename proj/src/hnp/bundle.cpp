#include "hnp/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hnp {

Bundle Bundle::from_factors(std::vector<std::pair<Slope, std::int64_t>> pairs) {
  for (const auto& p : pairs)
    if (p.second < 0) throw std::invalid_argument("negative multiplicity");
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return b.first < a.first; });
  Bundle out;
  for (const auto& [slope, mult] : pairs) {
    if (mult == 0) continue;
    if (!out.factors_.empty() && out.factors_.back().slope == slope)
      out.factors_.back().mult = checked_add(out.factors_.back().mult, mult);
    else
      out.factors_.push_back({slope, mult});
  }
  return out;
}

Bundle Bundle::stable(Slope lambda) { return stable_power(lambda, 1); }

Bundle Bundle::stable_power(Slope lambda, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("negative multiplicity");
  Bundle out;
  if (m > 0) out.factors_.push_back({lambda, m});
  return out;
}

Bundle Bundle::trivial(std::int64_t n) { return stable_power(Slope(0), n); }

std::int64_t Bundle::rank() const {
  std::int64_t r = 0;
  for (const auto& f : factors_) r = checked_add(r, checked_mul(f.mult, f.slope.den));
  return r;
}

std::int64_t Bundle::degree() const {
  std::int64_t d = 0;
  for (const auto& f : factors_) d = checked_add(d, checked_mul(f.mult, f.slope.num));
  return d;
}

Slope Bundle::mu() const {
  if (is_zero()) throw std::invalid_argument("mu of the zero bundle");
  return Slope(degree(), rank());
}

Slope Bundle::mu_min() const {
  if (is_zero()) throw std::invalid_argument("mu_min of the zero bundle");
  return factors_.back().slope;
}

Slope Bundle::mu_max() const {
  if (is_zero()) throw std::invalid_argument("mu_max of the zero bundle");
  return factors_.front().slope;
}

bool Bundle::is_semistable() const { return factors_.size() <= 1; }

bool Bundle::all_slopes_integer() const {
  for (const auto& f : factors_)
    if (!f.slope.is_integer()) return false;
  return true;
}

std::vector<std::int64_t> Bundle::vertex_set() const {
  std::vector<std::int64_t> v{0};
  std::int64_t cum = 0;
  for (const auto& f : factors_) {
    cum = checked_add(cum, checked_mul(f.mult, f.slope.den));
    v.push_back(cum);
  }
  return v;
}

std::vector<HNVector> Bundle::hn_vectors() const {
  std::vector<HNVector> v;
  v.reserve(factors_.size());
  for (const auto& f : factors_)
    v.push_back({checked_mul(f.mult, f.slope.den), checked_mul(f.mult, f.slope.num)});
  return v;
}

Slope Bundle::slope_on_interval(std::int64_t i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("interval index out of range");
  std::int64_t cum = 0;
  for (const auto& f : factors_) {
    cum = checked_add(cum, checked_mul(f.mult, f.slope.den));
    if (i <= cum) return f.slope;
  }
  throw std::logic_error("unreachable");
}

Bundle dual(const Bundle& b) {
  // negating strictly decreasing slopes and reversing keeps the order strict
  Bundle out;
  std::vector<std::pair<Slope, std::int64_t>> pairs;
  pairs.reserve(b.factors().size());
  for (auto it = b.factors().rbegin(); it != b.factors().rend(); ++it)
    pairs.emplace_back(-it->slope, it->mult);
  return Bundle::from_factors(std::move(pairs));
}

Bundle direct_sum(const Bundle& a, const Bundle& b) {
  std::vector<std::pair<Slope, std::int64_t>> pairs;
  pairs.reserve(a.factors().size() + b.factors().size());
  for (const auto& f : a.factors()) pairs.emplace_back(f.slope, f.mult);
  for (const auto& f : b.factors()) pairs.emplace_back(f.slope, f.mult);
  return Bundle::from_factors(std::move(pairs));
}

Bundle tensor(const Bundle& a, const Bundle& b) {
  std::vector<std::pair<Slope, std::int64_t>> pairs;
  pairs.reserve(a.factors().size() * b.factors().size());
  for (const auto& fa : a.factors()) {
    for (const auto& fb : b.factors()) {
      const std::int64_t s = fa.slope.den, r = fa.slope.num;
      const std::int64_t s2 = fb.slope.den, r2 = fb.slope.num;
      const std::int64_t g =
          std::gcd(checked_mul(s, s2),
                   checked_add(checked_mul(r, s2), checked_mul(r2, s)));
      pairs.emplace_back(fa.slope + fb.slope,
                         checked_mul(checked_mul(fa.mult, fb.mult), g));
    }
  }
  return Bundle::from_factors(std::move(pairs));
}

Bundle twist(const Bundle& b, Slope lambda) { return tensor(b, Bundle::stable(lambda)); }

Bundle stretch(const Bundle& b, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("stretch factor must be positive");
  std::vector<std::pair<Slope, std::int64_t>> pairs;
  pairs.reserve(b.factors().size());
  for (const auto& f : b.factors()) {
    const std::int64_t x = checked_mul(f.mult, f.slope.den);
    const Slope scaled(checked_mul(c, f.slope.num), f.slope.den);
    // x is divisible by the reduced denominator, so the multiplicity is exact
    pairs.emplace_back(scaled, x / scaled.den);
  }
  return Bundle::from_factors(std::move(pairs));
}

namespace {

bool slice_keep(const Slope& s, const Slope& mu, SliceMode mode) {
  switch (mode) {
    case SliceMode::LessEq: return s <= mu;
    case SliceMode::Less: return s < mu;
    case SliceMode::GreaterEq: return s >= mu;
    case SliceMode::Greater: return s > mu;
  }
  throw std::invalid_argument("bad slice mode");
}

}  // namespace

Bundle slice(const Bundle& b, Slope mu, SliceMode mode) {
  std::vector<std::pair<Slope, std::int64_t>> pairs;
  for (const auto& f : b.factors())
    if (slice_keep(f.slope, mu, mode)) pairs.emplace_back(f.slope, f.mult);
  return Bundle::from_factors(std::move(pairs));
}

std::int64_t rank_slice(const Bundle& b, Slope mu, SliceMode mode) {
  std::int64_t r = 0;
  for (const auto& f : b.factors())
    if (slice_keep(f.slope, mu, mode))
      r = checked_add(r, checked_mul(f.mult, f.slope.den));
  return r;
}

Rational polygon_height(const Bundle& b, std::int64_t x) {
  if (x < 0 || x > b.rank()) throw std::invalid_argument("x outside the polygon");
  Rational y(0);
  std::int64_t cum = 0;
  for (const auto& f : b.factors()) {
    const std::int64_t block = checked_mul(f.mult, f.slope.den);
    if (x >= cum + block) {
      y = y + Rational(checked_mul(f.mult, f.slope.num));
    } else {
      y = y + f.slope * Rational(x - cum);
      return y;
    }
    cum += block;
  }
  return y;
}

std::int64_t degree_nonneg(const Bundle& b) {
  return slice(b, Slope(0), SliceMode::GreaterEq).degree();
}

}  // namespace hnp
