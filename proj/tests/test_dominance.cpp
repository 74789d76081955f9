#include <doctest.h>

#include "hnp/dominance.hpp"
#include "hnp/enumerate.hpp"

using namespace hnp;

namespace {

Bundle B(std::vector<std::pair<Slope, std::int64_t>> fs) {
  return Bundle::from_factors(std::move(fs));
}

}  // namespace

TEST_CASE("slopewise dominance by interval slopes") {
  CHECK(slopewise_dominates(B({{Slope(1), 1}, {Slope(0), 1}}),
                            B({{Slope(0), 1}, {Slope(-1), 1}})));
  CHECK_FALSE(slopewise_dominates(Bundle::stable_power(Slope(1), 2),
                                  Bundle::stable(Slope(2))));
  CHECK(slopewise_dominates(B({{Slope(1), 1}}), Bundle{}));
  CHECK(slopewise_dominates(Bundle{}, Bundle{}));
  CHECK_FALSE(slopewise_dominates(Bundle{}, Bundle::trivial(1)));
}

TEST_CASE("rank characterization agrees") {
  CHECK(dominates_via_ranks(B({{Slope(1), 1}, {Slope(0), 1}}),
                            B({{Slope(0), 1}, {Slope(-1), 1}})));
  // fails at mu = 2 where rank(V^{>=2}) = 0 < 1 = rank(W^{>=2})
  CHECK_FALSE(dominates_via_ranks(Bundle::stable_power(Slope(1), 2),
                                  Bundle::stable(Slope(2))));
  const Bundle v = B({{Slope(1, 2), 2}, {Slope(-1), 1}});
  CHECK(dominates_via_ranks(v, v));

  const auto family = enumerate_bundles({3, 2, 2, true});
  for (const auto& a : family)
    for (const auto& b : family)
      CHECK(slopewise_dominates(a, b) == dominates_via_ranks(a, b));
}

TEST_CASE("common factor decomposition") {
  const auto dec = common_factor_decompose(B({{Slope(2), 1}, {Slope(1), 1}}),
                                           B({{Slope(2), 1}, {Slope(-1), 1}}));
  CHECK(dec.common == Bundle::stable(Slope(2)));
  CHECK(dec.v_rest == Bundle::stable(Slope(1)));
  CHECK(dec.w_rest == Bundle::stable(Slope(-1)));

  const auto sep = common_factor_decompose(Bundle::stable(Slope(1)), Bundle::trivial(1));
  CHECK(sep.common.is_zero());
  CHECK(sep.v_rest == Bundle::stable(Slope(1)));
  CHECK(sep.w_rest == Bundle::trivial(1));

  const Bundle v = B({{Slope(1), 2}, {Slope(0), 1}});
  const auto same = common_factor_decompose(v, v);
  CHECK(same.common == v);
  CHECK(same.v_rest.is_zero());
  CHECK(same.w_rest.is_zero());

  CHECK_THROWS_AS(common_factor_decompose(Bundle::trivial(1), Bundle::stable(Slope(1))),
                  std::invalid_argument);
}

TEST_CASE("decomposition splits inside a block when needed") {
  // common part ends in the middle of V's slope-1 block
  const auto dec = common_factor_decompose(Bundle::stable_power(Slope(1), 3),
                                           B({{Slope(1), 2}, {Slope(0), 1}}));
  CHECK(dec.common == Bundle::stable_power(Slope(1), 2));
  CHECK(dec.v_rest == Bundle::stable(Slope(1)));
  CHECK(dec.w_rest == Bundle::trivial(1));
}

TEST_CASE("decomposition invariants over an enumerated family") {
  const auto family = enumerate_bundles({3, 2, 2, true});
  for (const auto& v : family) {
    for (const auto& w : family) {
      if (!slopewise_dominates(v, w)) continue;
      const auto dec = common_factor_decompose(v, w);
      CHECK(direct_sum(dec.common, dec.v_rest) == v);
      CHECK(direct_sum(dec.common, dec.w_rest) == w);
      CHECK(slopewise_dominates(dec.v_rest, dec.w_rest));
      if (!dec.w_rest.is_zero()) {
        CHECK(dec.v_rest.mu_max() > dec.w_rest.mu_max());
        if (!dec.common.is_zero())
          CHECK(dec.common.mu_min() >= dec.v_rest.mu_max());
      }
    }
  }
}

TEST_CASE("equal rank duality") {
  CHECK(equal_rank_duality_holds(B({{Slope(1), 1}, {Slope(0), 1}}),
                                 B({{Slope(0), 1}, {Slope(-1), 1}})));
  const Bundle v = B({{Slope(1), 1}, {Slope(-2), 1}});
  CHECK(equal_rank_duality_holds(v, v));
  CHECK_THROWS_AS(equal_rank_duality_holds(Bundle::stable(Slope(2)), Bundle::trivial(2)),
                  std::invalid_argument);
}

TEST_CASE("total degree is not monotone under dominance") {
  const Bundle v = B({{Slope(1), 4}, {Slope(-1), 4}});
  const Bundle w = Bundle::stable(Slope(1, 3));
  CHECK(slopewise_dominates(v, w));
  CHECK(v.degree() < w.degree());
  // the nonnegative parts still compare the right way
  CHECK(degree_nonneg(v) >= degree_nonneg(w));
}
