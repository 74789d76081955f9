#include <doctest.h>

#include "hnp/reduction.hpp"

using namespace hnp;

namespace {

Bundle B(std::vector<std::pair<Slope, std::int64_t>> fs) {
  return Bundle::from_factors(std::move(fs));
}

}  // namespace

TEST_CASE("c value") {
  CHECK(c_value(Bundle::trivial(3), Bundle::trivial(2), Bundle::trivial(1)) == 0);

  const Bundle e = B({{Slope(2), 1}, {Slope(-1), 2}});
  const Bundle f = B({{Slope(1), 1}, {Slope(0), 1}});
  CHECK(c_value(e, f, f) == 0);

  // 8 + 1 - 6 - 2
  CHECK(c_value(B({{Slope(1), 2}, {Slope(-1), 2}}), Bundle::stable_power(Slope(1), 2),
                B({{Slope(1), 1}, {Slope(0), 1}})) == 1);

  CHECK(c_value(Bundle{}, Bundle{}, Bundle{}) == 0);
}

TEST_CASE("maximal slope reduction") {
  CHECK(max_slope_reduction(B({{Slope(3), 1}, {Slope(1), 1}}),
                            B({{Slope(1), 1}, {Slope(0), 1}})) ==
        Bundle::stable_power(Slope(1), 2));

  // equal top slopes leave the bundle unchanged
  const Bundle v = B({{Slope(2), 1}, {Slope(0), 1}});
  const Bundle w = B({{Slope(2), 1}, {Slope(-1), 1}});
  CHECK(max_slope_reduction(v, w) == v);

  CHECK(max_slope_reduction(Bundle::stable_power(Slope(2), 2), Bundle::trivial(2)) ==
        Bundle::trivial(2));

  CHECK_THROWS_AS(max_slope_reduction(Bundle{}, Bundle::trivial(1)), std::invalid_argument);
  CHECK_THROWS_AS(max_slope_reduction(Bundle::stable_power(Slope(1), 3),
                                      Bundle::stable(Slope(1, 2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(max_slope_reduction(Bundle::trivial(1), Bundle::stable(Slope(1))),
                  std::invalid_argument);
}

TEST_CASE("slope reduction sequence") {
  const Bundle e = B({{Slope(1), 2}, {Slope(-1), 2}});
  const Bundle f = Bundle::stable_power(Slope(1), 2);
  const Bundle q = B({{Slope(1), 1}, {Slope(0), 1}});

  const auto trace = slope_reduction_sequence(e, f, q);
  CHECK(trace.terminated);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].f == f);
  CHECK(trace.steps[0].common_u == Bundle::stable(Slope(1)));
  CHECK(trace.steps[0].c == 1);
  CHECK(trace.steps[1].f == q);
  CHECK(trace.steps[1].common_u == q);
  CHECK(trace.steps[1].c == 0);
}

TEST_CASE("immediate termination when F equals Q") {
  const Bundle f = B({{Slope(1), 1}, {Slope(0), 1}});
  const auto trace = slope_reduction_sequence(Bundle::trivial(2), f, f);
  CHECK(trace.terminated);
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].c == 0);
  CHECK(trace.steps[0].common_u == f);
}

TEST_CASE("reduction walks down to Q") {
  const Bundle e = B({{Slope(0), 2}, {Slope(-1), 1}});
  const Bundle f = B({{Slope(2), 1}, {Slope(0), 1}});
  const Bundle q = Bundle::trivial(2);
  const auto trace = slope_reduction_sequence(e, f, q);
  CHECK(trace.terminated);
  CHECK(trace.steps.size() <= 3);
  CHECK(trace.steps.back().f == q);
}

TEST_CASE("reduction preconditions") {
  const Bundle f = Bundle::stable_power(Slope(1), 2);
  const Bundle q = B({{Slope(1), 1}, {Slope(0), 1}});
  CHECK_THROWS_AS(slope_reduction_sequence(Bundle::trivial(1), Bundle{}, q),
                  std::invalid_argument);
  CHECK_THROWS_AS(slope_reduction_sequence(Bundle::trivial(1), f, Bundle::trivial(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      slope_reduction_sequence(Bundle::stable(Slope(1, 2)), f, q),
      std::invalid_argument);
  CHECK_THROWS_AS(slope_reduction_sequence(Bundle::trivial(1), q, f),
                  std::invalid_argument);
}

TEST_CASE("equality case clause") {
  // hypotheses (i)-(iv) alone do not force the equality case: here c = 0
  // with F != Q, and the clause is what rules the instance out
  const Bundle e = B({{Slope(2), 1}, {Slope(1), 1}});
  const Bundle f = Bundle::stable(Slope(2));
  const Bundle q = Bundle::stable(Slope(1));
  const auto rep = key_inequality_check(e, f, q);
  CHECK(rep.hypotheses_ok);
  CHECK(rep.c == 0);
  CHECK_FALSE(rep.equality_consistent);
  CHECK_FALSE(equality_case_clause(e, f, q));

  // with the clause in place the equality case is honest
  const Bundle e2 = B({{Slope(1), 2}, {Slope(-1), 2}});
  const Bundle f2 = Bundle::stable_power(Slope(1), 2);
  const Bundle q2 = B({{Slope(1), 1}, {Slope(0), 1}});
  CHECK(equality_case_clause(e2, f2, q2));
  CHECK(equality_case_clause(e2, f2, f2));
}

TEST_CASE("key inequality report") {
  // hypotheses hold, c positive, F != Q
  const auto good = key_inequality_check(B({{Slope(1), 2}, {Slope(-1), 2}}),
                                         Bundle::stable_power(Slope(1), 2),
                                         B({{Slope(1), 1}, {Slope(0), 1}}));
  CHECK(good.hypotheses_ok);
  CHECK(good.c == 1);
  CHECK(good.equality_consistent);

  // equal minimal slopes break the last hypothesis and the equality case
  const auto flat =
      key_inequality_check(Bundle::trivial(3), Bundle::trivial(2), Bundle::trivial(1));
  CHECK_FALSE(flat.hypotheses_ok);
  CHECK(flat.violated_hypothesis == Hypothesis::IV);
  CHECK(flat.c == 0);
  CHECK_FALSE(flat.equality_consistent);

  // F = Q with the remaining hypotheses in place
  const auto same = key_inequality_check(B({{Slope(1), 1}, {Slope(-1), 1}}),
                                         Bundle::stable(Slope(1)), Bundle::stable(Slope(1)));
  CHECK(same.hypotheses_ok);
  CHECK(same.c == 0);
  CHECK(same.equality_consistent);
}
