#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnp/enumerate.hpp"

namespace hnp {

/// Independent route to deg(V^dual (x) W)^{>=0}: fully expand the tensor
/// product into stable summands via the gcd formula and sum the degrees of
/// the summands with nonnegative slope.
std::int64_t oracle_deg_pair_nonneg(const Bundle& v, const Bundle& w);

struct PropertyResult {
  std::int64_t checked = 0;
  std::vector<std::string> failures;  // at most kMaxFailures counterexamples
};

struct VerifyReport {
  std::map<std::string, PropertyResult> properties;

  bool all_passed() const;
  std::int64_t total_checked() const;
  std::int64_t total_failures() const;
};

/// Raised when a run dies of memory exhaustion; distinct from a property
/// violation.
struct ResourceExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shared instance domains, derived once from the bounds.
struct SuiteInput {
  EnumBounds bounds;
  std::vector<Bundle> all;       // full enumeration under the bounds
  std::vector<Bundle> compact;   // smaller family for cubic-cost checks
  std::vector<Bundle> integral;  // integer slopes in [-2, 2], for triple checks
};

SuiteInput make_suite_input(const EnumBounds& bounds);

/// One verifiable statement quantified over an indexed instance space.
/// check(i, out) appends a counterexample description when instance i fails.
struct PropertyBody {
  std::int64_t size = 0;
  std::function<void(std::int64_t, std::vector<std::string>&)> check;
};

struct Property {
  std::string name;
  std::function<PropertyBody(const SuiteInput&)> body;
};

/// Every invariant in the repository as a named property.
std::vector<Property> standard_properties();

/// Runs the given properties over the bounds.  Instance spaces are split
/// into contiguous shards across `jobs` workers; the merged report is
/// identical for every worker count.
VerifyReport run_properties(const std::vector<Property>& props, const EnumBounds& bounds,
                            int jobs = 1);

VerifyReport run_property_suite(const EnumBounds& bounds, int jobs = 1);

}  // namespace hnp
