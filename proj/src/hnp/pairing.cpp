#include "hnp/pairing.hpp"

#include <stdexcept>

namespace hnp {

std::int64_t cross(const HNVector& v, const HNVector& w) {
  return checked_sub(checked_mul(v.x, w.y), checked_mul(v.y, w.x));
}

bool preceq(const HNVector& v, const HNVector& w) {
  if (v.x <= 0 || w.x <= 0)
    throw std::invalid_argument("slope comparison needs positive x-components");
  return checked_mul(v.y, w.x) <= checked_mul(w.y, v.x);
}

std::int64_t deg_pair(const Bundle& v, const Bundle& w) {
  std::int64_t total = 0;
  for (const auto& fv : v.factors()) {
    const HNVector a{checked_mul(fv.mult, fv.slope.den), checked_mul(fv.mult, fv.slope.num)};
    for (const auto& fw : w.factors()) {
      const HNVector b{checked_mul(fw.mult, fw.slope.den), checked_mul(fw.mult, fw.slope.num)};
      total = checked_add(total, cross(a, b));
    }
  }
  return total;
}

std::int64_t deg_pair_nonneg(const Bundle& v, const Bundle& w) {
  std::int64_t total = 0;
  for (const auto& fv : v.factors()) {
    const HNVector a{checked_mul(fv.mult, fv.slope.den), checked_mul(fv.mult, fv.slope.num)};
    for (const auto& fw : w.factors()) {
      const HNVector b{checked_mul(fw.mult, fw.slope.den), checked_mul(fw.mult, fw.slope.num)};
      if (preceq(a, b)) total = checked_add(total, cross(a, b));
    }
  }
  return total;
}

bool hom_is_zero(const Bundle& v, const Bundle& w) {
  if (v.is_zero() || w.is_zero()) return true;
  return v.mu_min() > w.mu_max();
}

std::int64_t hom_moduli_dim(const Bundle& v, const Bundle& w) {
  return deg_pair_nonneg(v, w);
}

CohomologyVanishing cohomology_vanishing(Slope lambda) {
  const bool nonneg = lambda >= Slope(0);
  return {!nonneg, nonneg};
}

bool ext1_vanishes_sufficient(const Bundle& v, const Bundle& w) {
  if (v.is_zero() || w.is_zero())
    throw std::invalid_argument("ext1 criterion needs nonzero bundles");
  return w.mu_min() >= v.mu_max();
}

}  // namespace hnp
