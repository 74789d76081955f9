#pragma once

#include <string>

#include "hnp/bundle.hpp"
#include "hnp/reduction.hpp"
#include "hnp/suite.hpp"

namespace hnp {

// JSON schemas (keys serialized in sorted order, byte-stable):
//   Bundle         {"factors":[{"mult":int,"slope":{"den":int,"num":int}}]}
//   ReductionTrace {"steps":[{"c":int,"f":Bundle,"u":Bundle}],"terminated":bool}
//   VerifyReport   {"properties":{name:{"checked":int,"failures":[string]}}}

std::string bundle_to_json(const Bundle& b);
std::string trace_to_json(const ReductionTrace& t);
std::string report_to_json(const VerifyReport& r);

}  // namespace hnp
