#include "hnpoly.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hnp/bundle.hpp"
#include "hnp/classify.hpp"
#include "hnp/dominance.hpp"
#include "hnp/enumerate.hpp"
#include "hnp/pairing.hpp"
#include "hnp/reduction.hpp"
#include "hnp/serialize.hpp"
#include "hnp/suite.hpp"
#include "hnp/svg.hpp"
#include "hnp/text.hpp"

struct hnp_bundle {
  hnp::Bundle value;
};

namespace {

thread_local std::string g_last_error;

const hnp::Bundle& get(const hnp_bundle* b) { return b->value; }

hnp_status fail(hnp_status code, const char* message) {
  g_last_error = message;
  return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
hnp_status guarded(Fn&& fn) {
  try {
    fn();
    return HNP_OK;
  } catch (const hnp::ParseError& e) {
    return fail(HNP_ERROR_PARSE, e.what());
  } catch (const std::overflow_error& e) {
    return fail(HNP_ERROR_OVERFLOW, e.what());
  } catch (const hnp::ResourceExhausted& e) {
    return fail(HNP_ERROR_NOMEM, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HNP_ERROR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(HNP_ERROR_INVALID, e.what());
  }
}

hnp_status make_bundle(hnp::Bundle value, hnp_bundle** out) {
  *out = new (std::nothrow) hnp_bundle{std::move(value)};
  if (!*out) return fail(HNP_ERROR_NOMEM, "out of memory");
  return HNP_OK;
}

hnp_status make_string(const std::string& s, char** out) {
  char* copy = static_cast<char*>(::malloc(s.size() + 1));
  if (!copy) return fail(HNP_ERROR_NOMEM, "out of memory");
  std::memcpy(copy, s.c_str(), s.size() + 1);
  *out = copy;
  return HNP_OK;
}

hnp::SliceMode to_slice_mode(hnp_slice_mode mode) {
  switch (mode) {
    case HNP_SLICE_LE: return hnp::SliceMode::LessEq;
    case HNP_SLICE_LT: return hnp::SliceMode::Less;
    case HNP_SLICE_GE: return hnp::SliceMode::GreaterEq;
    case HNP_SLICE_GT: return hnp::SliceMode::Greater;
  }
  throw std::invalid_argument("bad slice mode");
}

hnp_verdict to_verdict(const hnp::Verdict& v) {
  hnp_verdict out{};
  out.answer = v.answer ? 1 : 0;
  out.has_witness = v.witness_mu.has_value() ? 1 : 0;
  out.witness_num = v.witness_mu ? v.witness_mu->num : 0;
  out.witness_den = v.witness_mu ? v.witness_mu->den : 1;
  out.failed = HNP_FAIL_NONE;
  if (v.failed_condition) {
    switch (*v.failed_condition) {
      case hnp::FailedCondition::RankInequality: out.failed = HNP_FAIL_RANK_INEQUALITY; break;
      case hnp::FailedCondition::EqualityCase: out.failed = HNP_FAIL_EQUALITY_CASE; break;
      case hnp::FailedCondition::PolygonSlope: out.failed = HNP_FAIL_POLYGON_SLOPE; break;
      case hnp::FailedCondition::PolygonVertex: out.failed = HNP_FAIL_POLYGON_VERTEX; break;
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* hnp_last_error(void) { return g_last_error.c_str(); }

void hnp_string_free(char* s) { ::free(s); }

hnp_status hnp_bundle_parse(const char* text, hnp_bundle** out) {
  if (!text || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    hnp::Bundle b = hnp::parse_bundle(text);
    if (hnp_status st = make_bundle(std::move(b), out); st != HNP_OK) throw std::bad_alloc();
  });
}

hnp_status hnp_bundle_zero(hnp_bundle** out) {
  if (!out) return fail(HNP_ERROR_INVALID, "null argument");
  return make_bundle(hnp::Bundle{}, out);
}

hnp_status hnp_bundle_from_factors(size_t n, const int64_t* slope_num,
                                   const int64_t* slope_den, const int64_t* mult,
                                   hnp_bundle** out) {
  if (!out || (n > 0 && (!slope_num || !slope_den || !mult)))
    return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    std::vector<std::pair<hnp::Slope, std::int64_t>> pairs;
    pairs.reserve(n);
    for (size_t i = 0; i < n; ++i)
      pairs.emplace_back(hnp::Slope(slope_num[i], slope_den[i]), mult[i]);
    hnp::Bundle b = hnp::Bundle::from_factors(std::move(pairs));
    if (hnp_status st = make_bundle(std::move(b), out); st != HNP_OK) throw std::bad_alloc();
  });
}

void hnp_bundle_free(hnp_bundle* b) { delete b; }

int64_t hnp_rank(const hnp_bundle* b) { return get(b).rank(); }
int64_t hnp_degree(const hnp_bundle* b) { return get(b).degree(); }
int hnp_is_zero(const hnp_bundle* b) { return get(b).is_zero() ? 1 : 0; }
int hnp_is_semistable(const hnp_bundle* b) { return get(b).is_semistable() ? 1 : 0; }
int hnp_equal(const hnp_bundle* a, const hnp_bundle* b) { return get(a) == get(b) ? 1 : 0; }

hnp_status hnp_mu(const hnp_bundle* b, int64_t* num, int64_t* den) {
  if (!b || !num || !den) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    const hnp::Slope s = get(b).mu();
    *num = s.num;
    *den = s.den;
  });
}

hnp_status hnp_mu_min(const hnp_bundle* b, int64_t* num, int64_t* den) {
  if (!b || !num || !den) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    const hnp::Slope s = get(b).mu_min();
    *num = s.num;
    *den = s.den;
  });
}

hnp_status hnp_mu_max(const hnp_bundle* b, int64_t* num, int64_t* den) {
  if (!b || !num || !den) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    const hnp::Slope s = get(b).mu_max();
    *num = s.num;
    *den = s.den;
  });
}

size_t hnp_factor_count(const hnp_bundle* b) { return get(b).factors().size(); }

hnp_status hnp_factor(const hnp_bundle* b, size_t i, int64_t* slope_num,
                      int64_t* slope_den, int64_t* mult) {
  if (!b || !slope_num || !slope_den || !mult)
    return fail(HNP_ERROR_INVALID, "null argument");
  if (i >= get(b).factors().size()) return fail(HNP_ERROR_INVALID, "factor index out of range");
  const auto& f = get(b).factors()[i];
  *slope_num = f.slope.num;
  *slope_den = f.slope.den;
  *mult = f.mult;
  return HNP_OK;
}

hnp_status hnp_slope_on_interval(const hnp_bundle* b, int64_t i, int64_t* num, int64_t* den) {
  if (!b || !num || !den) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    const hnp::Slope s = get(b).slope_on_interval(i);
    *num = s.num;
    *den = s.den;
  });
}

hnp_status hnp_format(const hnp_bundle* b, char** out) {
  if (!b || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return make_string(hnp::format_bundle(get(b)), out);
}

hnp_status hnp_to_json(const hnp_bundle* b, char** out) {
  if (!b || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    if (hnp_status st = make_string(hnp::bundle_to_json(get(b)), out); st != HNP_OK)
      throw std::bad_alloc();
  });
}

hnp_status hnp_dual(const hnp_bundle* b, hnp_bundle** out) {
  if (!b || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    hnp::Bundle r = hnp::dual(get(b));
    if (hnp_status st = make_bundle(std::move(r), out); st != HNP_OK) throw std::bad_alloc();
  });
}

hnp_status hnp_direct_sum(const hnp_bundle* a, const hnp_bundle* b, hnp_bundle** out) {
  if (!a || !b || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    hnp::Bundle r = hnp::direct_sum(get(a), get(b));
    if (hnp_status st = make_bundle(std::move(r), out); st != HNP_OK) throw std::bad_alloc();
  });
}

hnp_status hnp_tensor(const hnp_bundle* a, const hnp_bundle* b, hnp_bundle** out) {
  if (!a || !b || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    hnp::Bundle r = hnp::tensor(get(a), get(b));
    if (hnp_status st = make_bundle(std::move(r), out); st != HNP_OK) throw std::bad_alloc();
  });
}

hnp_status hnp_twist(const hnp_bundle* b, int64_t num, int64_t den, hnp_bundle** out) {
  if (!b || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    hnp::Bundle r = hnp::twist(get(b), hnp::Slope(num, den));
    if (hnp_status st = make_bundle(std::move(r), out); st != HNP_OK) throw std::bad_alloc();
  });
}

hnp_status hnp_stretch(const hnp_bundle* b, int64_t factor, hnp_bundle** out) {
  if (!b || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    hnp::Bundle r = hnp::stretch(get(b), factor);
    if (hnp_status st = make_bundle(std::move(r), out); st != HNP_OK) throw std::bad_alloc();
  });
}

hnp_status hnp_slice(const hnp_bundle* b, int64_t num, int64_t den, hnp_slice_mode mode,
                     hnp_bundle** out) {
  if (!b || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    hnp::Bundle r = hnp::slice(get(b), hnp::Slope(num, den), to_slice_mode(mode));
    if (hnp_status st = make_bundle(std::move(r), out); st != HNP_OK) throw std::bad_alloc();
  });
}

hnp_status hnp_deg_pair(const hnp_bundle* v, const hnp_bundle* w, int64_t* out) {
  if (!v || !w || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] { *out = hnp::deg_pair(get(v), get(w)); });
}

hnp_status hnp_deg_pair_nonneg(const hnp_bundle* v, const hnp_bundle* w, int64_t* out) {
  if (!v || !w || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] { *out = hnp::deg_pair_nonneg(get(v), get(w)); });
}

int hnp_hom_is_zero(const hnp_bundle* v, const hnp_bundle* w) {
  return hnp::hom_is_zero(get(v), get(w)) ? 1 : 0;
}

hnp_status hnp_hom_moduli_dim(const hnp_bundle* v, const hnp_bundle* w, int64_t* out) {
  if (!v || !w || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] { *out = hnp::hom_moduli_dim(get(v), get(w)); });
}

hnp_status hnp_cohomology_vanishing(int64_t num, int64_t den, int* h0_is_zero,
                                    int* h1_is_zero) {
  if (!h0_is_zero || !h1_is_zero) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    const auto v = hnp::cohomology_vanishing(hnp::Slope(num, den));
    *h0_is_zero = v.h0_is_zero ? 1 : 0;
    *h1_is_zero = v.h1_is_zero ? 1 : 0;
  });
}

hnp_status hnp_ext1_vanishes_sufficient(const hnp_bundle* v, const hnp_bundle* w, int* out) {
  if (!v || !w || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] { *out = hnp::ext1_vanishes_sufficient(get(v), get(w)) ? 1 : 0; });
}

int hnp_slopewise_dominates(const hnp_bundle* v, const hnp_bundle* w) {
  return hnp::slopewise_dominates(get(v), get(w)) ? 1 : 0;
}

int hnp_dominates_via_ranks(const hnp_bundle* v, const hnp_bundle* w) {
  return hnp::dominates_via_ranks(get(v), get(w)) ? 1 : 0;
}

hnp_status hnp_common_factor_decompose(const hnp_bundle* v, const hnp_bundle* w,
                                       hnp_bundle** common, hnp_bundle** v_rest,
                                       hnp_bundle** w_rest) {
  if (!v || !w || !common || !v_rest || !w_rest)
    return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    auto dec = hnp::common_factor_decompose(get(v), get(w));
    hnp_bundle* u = nullptr;
    hnp_bundle* vr = nullptr;
    hnp_bundle* wr = nullptr;
    if (make_bundle(std::move(dec.common), &u) != HNP_OK) throw std::bad_alloc();
    if (make_bundle(std::move(dec.v_rest), &vr) != HNP_OK) {
      hnp_bundle_free(u);
      throw std::bad_alloc();
    }
    if (make_bundle(std::move(dec.w_rest), &wr) != HNP_OK) {
      hnp_bundle_free(u);
      hnp_bundle_free(vr);
      throw std::bad_alloc();
    }
    *common = u;
    *v_rest = vr;
    *w_rest = wr;
  });
}

hnp_status hnp_equal_rank_duality_holds(const hnp_bundle* v, const hnp_bundle* w, int* out) {
  if (!v || !w || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] { *out = hnp::equal_rank_duality_holds(get(v), get(w)) ? 1 : 0; });
}

hnp_status hnp_is_quotient(const hnp_bundle* e, const hnp_bundle* f, hnp_verdict* out) {
  if (!e || !f || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] { *out = to_verdict(hnp::is_quotient(get(e), get(f))); });
}

hnp_status hnp_is_quotient_polygonal(const hnp_bundle* e, const hnp_bundle* f,
                                     hnp_verdict* out) {
  if (!e || !f || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] { *out = to_verdict(hnp::is_quotient_polygonal(get(e), get(f))); });
}

hnp_status hnp_subbundle_sufficient(const hnp_bundle* e, const hnp_bundle* d,
                                    hnp_verdict* out) {
  if (!e || !d || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] { *out = to_verdict(hnp::subbundle_sufficient(get(e), get(d))); });
}

int hnp_subbundle_necessary(const hnp_bundle* e, const hnp_bundle* d) {
  return hnp::subbundle_necessary(get(e), get(d)) ? 1 : 0;
}

hnp_status hnp_is_globally_generated(const hnp_bundle* f, int64_t n, int* out) {
  if (!f || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] { *out = hnp::is_globally_generated(get(f), n) ? 1 : 0; });
}

hnp_status hnp_c_value(const hnp_bundle* e, const hnp_bundle* f, const hnp_bundle* q,
                       int64_t* out) {
  if (!e || !f || !q || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] { *out = hnp::c_value(get(e), get(f), get(q)); });
}

hnp_status hnp_max_slope_reduction(const hnp_bundle* v, const hnp_bundle* w,
                                   hnp_bundle** out) {
  if (!v || !w || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    hnp::Bundle r = hnp::max_slope_reduction(get(v), get(w));
    if (hnp_status st = make_bundle(std::move(r), out); st != HNP_OK) throw std::bad_alloc();
  });
}

hnp_status hnp_key_inequality_check(const hnp_bundle* e, const hnp_bundle* f,
                                    const hnp_bundle* q, hnp_key_inequality_report* out) {
  if (!e || !f || !q || !out) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    const auto rep = hnp::key_inequality_check(get(e), get(f), get(q));
    out->c = rep.c;
    out->hypotheses_ok = rep.hypotheses_ok ? 1 : 0;
    out->violated_hypothesis =
        rep.violated_hypothesis ? static_cast<int>(*rep.violated_hypothesis) : 0;
    out->equality_consistent = rep.equality_consistent ? 1 : 0;
  });
}

hnp_status hnp_slope_reduction(const hnp_bundle* e, const hnp_bundle* f,
                               const hnp_bundle* q, char** trace_json, size_t* num_steps,
                               int* terminated, hnp_bundle** final_bundle) {
  if (!e || !f || !q) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    const auto trace = hnp::slope_reduction_sequence(get(e), get(f), get(q));
    if (trace_json) {
      if (make_string(hnp::trace_to_json(trace), trace_json) != HNP_OK)
        throw std::bad_alloc();
    }
    if (num_steps) *num_steps = trace.steps.size();
    if (terminated) *terminated = trace.terminated ? 1 : 0;
    if (final_bundle) {
      if (make_bundle(trace.steps.back().f, final_bundle) != HNP_OK) {
        if (trace_json) {
          hnp_string_free(*trace_json);
          *trace_json = nullptr;
        }
        throw std::bad_alloc();
      }
    }
  });
}

hnp_status hnp_enumerate_count(const hnp_enum_bounds* bounds, int64_t* count) {
  if (!bounds || !count) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    hnp::EnumBounds b{bounds->max_rank, bounds->max_abs_degree, bounds->max_denominator,
                      bounds->include_zero != 0};
    std::int64_t n = 0;
    hnp::for_each_bundle(b, [&](const hnp::Bundle&) { ++n; });
    *count = n;
  });
}

hnp_status hnp_run_property_suite(const hnp_enum_bounds* bounds, int jobs,
                                  char** report_json, int* all_pass) {
  if (!bounds) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    hnp::EnumBounds b{bounds->max_rank, bounds->max_abs_degree, bounds->max_denominator,
                      bounds->include_zero != 0};
    const hnp::VerifyReport report = hnp::run_property_suite(b, jobs);
    if (report_json) {
      if (make_string(hnp::report_to_json(report), report_json) != HNP_OK)
        throw std::bad_alloc();
    }
    if (all_pass) *all_pass = report.all_passed() ? 1 : 0;
  });
}

hnp_status hnp_render_svg(const hnp_bundle* const* bundles, size_t n, int align_right,
                          char** svg_out) {
  if (!svg_out || (n > 0 && !bundles)) return fail(HNP_ERROR_INVALID, "null argument");
  return guarded([&] {
    std::vector<hnp::Bundle> bs;
    bs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (!bundles[i]) throw std::invalid_argument("null bundle handle");
      bs.push_back(get(bundles[i]));
    }
    const std::string svg = hnp::render_svg(bs, align_right != 0);
    if (make_string(svg, svg_out) != HNP_OK) throw std::bad_alloc();
  });
}

}  // extern "C"
