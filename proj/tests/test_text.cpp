#include <doctest.h>

#include "hnp/enumerate.hpp"
#include "hnp/serialize.hpp"
#include "hnp/text.hpp"

using namespace hnp;

TEST_CASE("parsing the grammar") {
  CHECK(parse_bundle("O(1/2)^3 + O(-1)") ==
        Bundle::from_factors({{Slope(1, 2), 3}, {Slope(-1), 1}}));
  CHECK(parse_bundle("0").is_zero());
  CHECK(parse_bundle("O(2/4)") == Bundle::stable(Slope(1, 2)));
  CHECK(parse_bundle("  O ( -1 ) ^ 2 +O(3/2)  ") ==
        Bundle::from_factors({{Slope(3, 2), 1}, {Slope(-1), 2}}));
  // repeated slopes merge
  CHECK(parse_bundle("O(1) + O(1)") == Bundle::stable_power(Slope(1), 2));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_bundle(""), ParseError);
  CHECK_THROWS_AS(parse_bundle("O(1"), ParseError);
  CHECK_THROWS_AS(parse_bundle("X(1)"), ParseError);
  CHECK_THROWS_AS(parse_bundle("O(1) + "), ParseError);
  CHECK_THROWS_AS(parse_bundle("0 + O(1)"), ParseError);
  CHECK_THROWS_AS(parse_bundle("O(1)junk"), ParseError);
  CHECK_THROWS_AS(parse_bundle("O(1/-2)"), ParseError);
  CHECK_THROWS_AS(parse_bundle("O(1)^0"), ParseError);
  CHECK_THROWS_AS(parse_bundle("O(99999999999999999999)"), ParseError);

  try {
    parse_bundle("O(1/0)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
    CHECK(std::string(e.what()).find("denominator") != std::string::npos);
  }
}

TEST_CASE("formatting") {
  CHECK(format_bundle(parse_bundle("O(-1) + O(1/2)^3")) == "O(1/2)^3 + O(-1)");
  CHECK(format_bundle(Bundle{}) == "0");
  CHECK(format_bundle(Bundle::trivial(2)) == "O(0)^2");
  CHECK(format_slope(Slope(-1, 2)) == "-1/2");
  CHECK(format_slope(Slope(3)) == "3");
}

TEST_CASE("round trip over an enumerated family") {
  for (const auto& b : enumerate_bundles({3, 3, 3, true}))
    CHECK(parse_bundle(format_bundle(b)) == b);
}

TEST_CASE("json fixtures are byte stable") {
  const Bundle b = Bundle::from_factors({{Slope(1, 2), 3}, {Slope(-1), 1}});
  CHECK(bundle_to_json(b) ==
        "{\"factors\":[{\"mult\":3,\"slope\":{\"den\":2,\"num\":1}},"
        "{\"mult\":1,\"slope\":{\"den\":1,\"num\":-1}}]}");
  CHECK(bundle_to_json(Bundle{}) == "{\"factors\":[]}");

  ReductionTrace trace;
  trace.steps.push_back({Bundle::stable(Slope(1)), Bundle::stable(Slope(1)), 0});
  trace.terminated = true;
  CHECK(trace_to_json(trace) ==
        "{\"steps\":[{\"c\":0,\"f\":{\"factors\":[{\"mult\":1,\"slope\":"
        "{\"den\":1,\"num\":1}}]},\"u\":{\"factors\":[{\"mult\":1,\"slope\":"
        "{\"den\":1,\"num\":1}}]}}],\"terminated\":true}");

  VerifyReport report;
  report.properties["p"] = PropertyResult{2, {}};
  CHECK(report_to_json(report) == "{\"properties\":{\"p\":{\"checked\":2,\"failures\":[]}}}");
}
