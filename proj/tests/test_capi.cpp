#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "hnpoly.h"

namespace {

struct Handle {
  hnp_bundle* b = nullptr;
  ~Handle() { hnp_bundle_free(b); }
  hnp_bundle* get() const { return b; }
  hnp_bundle** out() { return &b; }
};

std::string fmt(const hnp_bundle* b) {
  char* raw = nullptr;
  REQUIRE(hnp_format(b, &raw) == HNP_OK);
  std::string s(raw);
  hnp_string_free(raw);
  return s;
}

Handle parse(const char* text) {
  Handle h;
  REQUIRE(hnp_bundle_parse(text, h.out()) == HNP_OK);
  return h;
}

}  // namespace

TEST_CASE("parse, format and basic queries") {
  Handle b = parse("O(-1) + O(1/2)^3");
  CHECK(fmt(b.get()) == "O(1/2)^3 + O(-1)");
  CHECK(hnp_rank(b.get()) == 7);
  CHECK(hnp_degree(b.get()) == 2);
  CHECK(hnp_is_zero(b.get()) == 0);
  CHECK(hnp_is_semistable(b.get()) == 0);
  CHECK(hnp_factor_count(b.get()) == 2);

  int64_t num = 0, den = 0, mult = 0;
  REQUIRE(hnp_factor(b.get(), 0, &num, &den, &mult) == HNP_OK);
  CHECK(num == 1);
  CHECK(den == 2);
  CHECK(mult == 3);
  CHECK(hnp_factor(b.get(), 2, &num, &den, &mult) == HNP_ERROR_INVALID);

  REQUIRE(hnp_mu(b.get(), &num, &den) == HNP_OK);
  CHECK(num == 2);
  CHECK(den == 7);
  REQUIRE(hnp_mu_min(b.get(), &num, &den) == HNP_OK);
  CHECK(num == -1);
  REQUIRE(hnp_slope_on_interval(b.get(), 7, &num, &den) == HNP_OK);
  CHECK(num == -1);
  CHECK(den == 1);
}

TEST_CASE("error reporting") {
  Handle bad;
  CHECK(hnp_bundle_parse("O(1", bad.out()) == HNP_ERROR_PARSE);
  CHECK(std::string(hnp_last_error()).find("offset") != std::string::npos);

  Handle zero;
  REQUIRE(hnp_bundle_zero(zero.out()) == HNP_OK);
  int64_t num = 0, den = 0;
  CHECK(hnp_mu(zero.get(), &num, &den) == HNP_ERROR_INVALID);

  Handle big;
  CHECK(hnp_bundle_parse("O(99999999999999999999)", big.out()) == HNP_ERROR_PARSE);

  Handle a = parse("O(3000000000)");
  Handle out;
  CHECK(hnp_stretch(a.get(), 4000000000, out.out()) == HNP_ERROR_OVERFLOW);
}

TEST_CASE("bundle construction from factors") {
  const int64_t nums[] = {1, 1, -1};
  const int64_t dens[] = {2, 2, 1};
  const int64_t mults[] = {1, 2, 1};
  Handle b;
  REQUIRE(hnp_bundle_from_factors(3, nums, dens, mults, b.out()) == HNP_OK);
  CHECK(fmt(b.get()) == "O(1/2)^3 + O(-1)");

  const int64_t bad_mult[] = {-1};
  Handle c;
  CHECK(hnp_bundle_from_factors(1, nums, dens, bad_mult, c.out()) == HNP_ERROR_INVALID);
}

TEST_CASE("operations through the C surface") {
  Handle a = parse("O(1/2)");
  Handle b = parse("O(1/3)");
  Handle t;
  REQUIRE(hnp_tensor(a.get(), b.get(), t.out()) == HNP_OK);
  CHECK(fmt(t.get()) == "O(5/6)");

  Handle d;
  REQUIRE(hnp_dual(t.get(), d.out()) == HNP_OK);
  CHECK(fmt(d.get()) == "O(-5/6)");

  Handle sum;
  REQUIRE(hnp_direct_sum(a.get(), a.get(), sum.out()) == HNP_OK);
  CHECK(fmt(sum.get()) == "O(1/2)^2");

  Handle tw;
  REQUIRE(hnp_twist(a.get(), 1, 2, tw.out()) == HNP_OK);
  CHECK(fmt(tw.get()) == "O(1)^4");

  Handle st;
  REQUIRE(hnp_stretch(a.get(), 2, st.out()) == HNP_OK);
  CHECK(fmt(st.get()) == "O(1)^2");

  Handle mixed = parse("O(2) + O(1/2)^2 + O(-1)");
  Handle sliced;
  REQUIRE(hnp_slice(mixed.get(), 1, 2, HNP_SLICE_GE, sliced.out()) == HNP_OK);
  CHECK(fmt(sliced.get()) == "O(2) + O(1/2)^2");

  CHECK(hnp_equal(a.get(), a.get()) == 1);
  CHECK(hnp_equal(a.get(), b.get()) == 0);
}

TEST_CASE("pairings and dominance") {
  Handle v = parse("O(1) + O(-1)");
  int64_t out = 0;
  REQUIRE(hnp_deg_pair(v.get(), v.get(), &out) == HNP_OK);
  CHECK(out == 0);
  REQUIRE(hnp_deg_pair_nonneg(v.get(), v.get(), &out) == HNP_OK);
  CHECK(out == 2);
  REQUIRE(hnp_hom_moduli_dim(v.get(), v.get(), &out) == HNP_OK);
  CHECK(out == 2);

  Handle one = parse("O(1)");
  Handle triv = parse("O(0)");
  CHECK(hnp_hom_is_zero(one.get(), triv.get()) == 1);
  CHECK(hnp_hom_is_zero(triv.get(), triv.get()) == 0);

  int h0 = 0, h1 = 0;
  REQUIRE(hnp_cohomology_vanishing(-1, 1, &h0, &h1) == HNP_OK);
  CHECK(h0 == 1);
  CHECK(h1 == 0);

  int flag = 0;
  REQUIRE(hnp_ext1_vanishes_sufficient(triv.get(), one.get(), &flag) == HNP_OK);
  CHECK(flag == 1);

  Handle w = parse("O(0) + O(-1)");
  Handle big = parse("O(1) + O(0)");
  CHECK(hnp_slopewise_dominates(big.get(), w.get()) == 1);
  CHECK(hnp_dominates_via_ranks(big.get(), w.get()) == 1);
  CHECK(hnp_slopewise_dominates(w.get(), big.get()) == 0);

  int dual_holds = 0;
  REQUIRE(hnp_equal_rank_duality_holds(big.get(), w.get(), &dual_holds) == HNP_OK);
  CHECK(dual_holds == 1);

  Handle va = parse("O(2) + O(1)");
  Handle wa = parse("O(2) + O(-1)");
  Handle common, v_rest, w_rest;
  REQUIRE(hnp_common_factor_decompose(va.get(), wa.get(), common.out(), v_rest.out(),
                                      w_rest.out()) == HNP_OK);
  CHECK(fmt(common.get()) == "O(2)");
  CHECK(fmt(v_rest.get()) == "O(1)");
  CHECK(fmt(w_rest.get()) == "O(-1)");
}

TEST_CASE("classification verdicts") {
  Handle e = parse("O(0)^2");
  Handle f = parse("O(1)");
  hnp_verdict v{};
  REQUIRE(hnp_is_quotient(e.get(), f.get(), &v) == HNP_OK);
  CHECK(v.answer == 1);
  CHECK(v.failed == HNP_FAIL_NONE);

  Handle e2 = parse("O(1) + O(-1)");
  Handle f2 = parse("O(0)");
  REQUIRE(hnp_is_quotient(e2.get(), f2.get(), &v) == HNP_OK);
  CHECK(v.answer == 0);
  CHECK(v.has_witness == 1);
  CHECK(v.witness_num == 0);
  CHECK(v.failed == HNP_FAIL_EQUALITY_CASE);

  REQUIRE(hnp_is_quotient_polygonal(e2.get(), f2.get(), &v) == HNP_OK);
  CHECK(v.answer == 0);

  REQUIRE(hnp_subbundle_sufficient(e.get(), f.get(), &v) == HNP_OK);
  CHECK(v.answer == 0);
  CHECK(hnp_subbundle_necessary(e.get(), f.get()) == 0);

  int gg = 0;
  REQUIRE(hnp_is_globally_generated(f.get(), 2, &gg) == HNP_OK);
  CHECK(gg == 1);
  CHECK(hnp_is_globally_generated(f.get(), 0, &gg) == HNP_ERROR_INVALID);
}

TEST_CASE("reduction machinery") {
  Handle e = parse("O(1)^2 + O(-1)^2");
  Handle f = parse("O(1)^2");
  Handle q = parse("O(1) + O(0)");

  int64_t c = 0;
  REQUIRE(hnp_c_value(e.get(), f.get(), q.get(), &c) == HNP_OK);
  CHECK(c == 1);

  hnp_key_inequality_report rep{};
  REQUIRE(hnp_key_inequality_check(e.get(), f.get(), q.get(), &rep) == HNP_OK);
  CHECK(rep.c == 1);
  CHECK(rep.hypotheses_ok == 1);
  CHECK(rep.equality_consistent == 1);

  Handle e3 = parse("O(0)^3");
  Handle f3 = parse("O(0)^2");
  Handle q3 = parse("O(0)");
  REQUIRE(hnp_key_inequality_check(e3.get(), f3.get(), q3.get(), &rep) == HNP_OK);
  CHECK(rep.c == 0);
  CHECK(rep.hypotheses_ok == 0);
  CHECK(rep.violated_hypothesis == 4);
  CHECK(rep.equality_consistent == 0);

  // equal top slopes leave F unchanged
  Handle reduced;
  REQUIRE(hnp_max_slope_reduction(f.get(), q.get(), reduced.out()) == HNP_OK);
  CHECK(fmt(reduced.get()) == "O(1)^2");

  Handle v = parse("O(3) + O(1)");
  Handle reduced2;
  REQUIRE(hnp_max_slope_reduction(v.get(), q.get(), reduced2.out()) == HNP_OK);
  CHECK(fmt(reduced2.get()) == "O(1)^2");

  char* trace = nullptr;
  size_t steps = 0;
  int terminated = 0;
  Handle final_bundle;
  REQUIRE(hnp_slope_reduction(e.get(), f.get(), q.get(), &trace, &steps, &terminated,
                              final_bundle.out()) == HNP_OK);
  CHECK(steps == 2);
  CHECK(terminated == 1);
  CHECK(fmt(final_bundle.get()) == "O(1) + O(0)");
  CHECK(std::string(trace).find("\"terminated\":true") != std::string::npos);
  hnp_string_free(trace);

  // rank mismatch violates the preconditions
  Handle q_bad = parse("O(1)");
  CHECK(hnp_slope_reduction(e.get(), f.get(), q_bad.get(), nullptr, &steps, &terminated,
                            nullptr) == HNP_ERROR_INVALID);
}

TEST_CASE("enumeration and suite") {
  const hnp_enum_bounds bounds{1, 1, 1, 0};
  int64_t count = 0;
  REQUIRE(hnp_enumerate_count(&bounds, &count) == HNP_OK);
  CHECK(count == 3);

  char* report = nullptr;
  int all_pass = 0;
  REQUIRE(hnp_run_property_suite(&bounds, 2, &report, &all_pass) == HNP_OK);
  CHECK(all_pass == 1);
  CHECK(std::string(report).find("\"properties\"") != std::string::npos);
  hnp_string_free(report);
}

TEST_CASE("svg rendering") {
  Handle a = parse("O(1)^2");
  Handle b = parse("O(1) + O(0)");
  const hnp_bundle* list[] = {a.get(), b.get()};
  char* svg = nullptr;
  REQUIRE(hnp_render_svg(list, 2, 1, &svg) == HNP_OK);
  const std::string s(svg);
  hnp_string_free(svg);
  CHECK(s.find("<svg") != std::string::npos);
  CHECK(s.find("polyline") != std::string::npos);
}
