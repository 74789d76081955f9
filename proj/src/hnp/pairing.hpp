#pragma once

#include "hnp/bundle.hpp"

namespace hnp {

/// Scalar 2D cross product v_x*w_y - v_y*w_x.
std::int64_t cross(const HNVector& v, const HNVector& w);

/// Exact slope comparison mu(v) <= mu(w), via v_y*w_x <= w_y*v_x.
/// Both x-components must be positive.
bool preceq(const HNVector& v, const HNVector& w);

/// deg(V^dual (x) W), summed as cross products over all HN-vector pairs.
std::int64_t deg_pair(const Bundle& v, const Bundle& w);

/// deg(V^dual (x) W)^{>=0}: sum of v_i x w_j over pairs with v_i preceq w_j.
/// Every summand is nonnegative, so the result is.
std::int64_t deg_pair_nonneg(const Bundle& v, const Bundle& w);

/// Hom(V, W) = 0, which for nonzero bundles holds exactly when
/// mu_min(V) > mu_max(W).  Zero bundles give an empty Hom, hence true.
bool hom_is_zero(const Bundle& v, const Bundle& w);

/// Dimension of the moduli of bundle maps V -> W; equals deg_pair_nonneg.
/// Zero exactly when mu_min(V) >= mu_max(W) (both nonzero).
std::int64_t hom_moduli_dim(const Bundle& v, const Bundle& w);

struct CohomologyVanishing {
  bool h0_is_zero = false;  // holds iff lambda < 0
  bool h1_is_zero = false;  // guaranteed for lambda >= 0; false means "not guaranteed"
};

CohomologyVanishing cohomology_vanishing(Slope lambda);

/// Sufficient criterion for Ext^1(V, W) = 0: every slope of V^dual (x) W is
/// nonnegative, i.e. mu_min(W) >= mu_max(V).  A false result means the
/// criterion gives no guarantee.  Rejects zero bundles.
bool ext1_vanishes_sufficient(const Bundle& v, const Bundle& w);

}  // namespace hnp
