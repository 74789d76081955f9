#include "hnp/serialize.hpp"

#include <json.hpp>

namespace hnp {

namespace {

nlohmann::json bundle_json(const Bundle& b) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : b.factors())
    factors.push_back({{"slope", {{"num", f.slope.num}, {"den", f.slope.den}}},
                       {"mult", f.mult}});
  return {{"factors", std::move(factors)}};
}

}  // namespace

std::string bundle_to_json(const Bundle& b) { return bundle_json(b).dump(); }

std::string trace_to_json(const ReductionTrace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"f", bundle_json(s.f)}, {"u", bundle_json(s.common_u)}, {"c", s.c}});
  nlohmann::json j{{"steps", std::move(steps)}, {"terminated", t.terminated}};
  return j.dump();
}

std::string report_to_json(const VerifyReport& r) {
  nlohmann::json props = nlohmann::json::object();
  for (const auto& [name, result] : r.properties)
    props[name] = {{"checked", result.checked}, {"failures", result.failures}};
  nlohmann::json j{{"properties", std::move(props)}};
  return j.dump();
}

}  // namespace hnp
