#include "hnp/suite.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "hnp/classify.hpp"
#include "hnp/dominance.hpp"
#include "hnp/pairing.hpp"
#include "hnp/reduction.hpp"
#include "hnp/text.hpp"

namespace hnp {

namespace {

constexpr std::size_t kMaxFailures = 64;

std::string show(const char* tag, const Bundle& b) {
  return std::string(tag) + "=" + format_bundle(b);
}

// Rank condition of the quotient criterion without its equality clause.
bool quotient_rank_condition(const Bundle& e, const Bundle& f) {
  for (const auto& bf : {&e, &f})
    for (const auto& fac : bf->factors())
      if (rank_slice(e, fac.slope, SliceMode::LessEq) <
          rank_slice(f, fac.slope, SliceMode::LessEq))
        return false;
  return true;
}

}  // namespace

std::int64_t oracle_deg_pair_nonneg(const Bundle& v, const Bundle& w) {
  return degree_nonneg(tensor(dual(v), w));
}

bool VerifyReport::all_passed() const {
  for (const auto& [name, r] : properties)
    if (!r.failures.empty()) return false;
  return true;
}

std::int64_t VerifyReport::total_checked() const {
  std::int64_t n = 0;
  for (const auto& [name, r] : properties) n += r.checked;
  return n;
}

std::int64_t VerifyReport::total_failures() const {
  std::int64_t n = 0;
  for (const auto& [name, r] : properties) n += static_cast<std::int64_t>(r.failures.size());
  return n;
}

SuiteInput make_suite_input(const EnumBounds& bounds) {
  SuiteInput in;
  in.bounds = bounds;
  in.all = enumerate_bundles(bounds);
  EnumBounds small{std::min<std::int64_t>(bounds.max_rank, 3),
                   std::min<std::int64_t>(bounds.max_abs_degree, 2),
                   std::min<std::int64_t>(bounds.max_denominator, 2), bounds.include_zero};
  in.compact = enumerate_bundles(small);
  in.integral = enumerate_integer_slope_bundles(-2, 2, bounds.max_rank);
  return in;
}

namespace {

using Check = std::function<void(std::int64_t, std::vector<std::string>&)>;

Property singles(std::string name, std::vector<Bundle> SuiteInput::*domain,
                 std::function<void(const Bundle&, std::vector<std::string>&)> fn) {
  return {std::move(name), [domain, fn](const SuiteInput& in) {
            const auto* dom = &(in.*domain);
            return PropertyBody{static_cast<std::int64_t>(dom->size()),
                                [dom, fn](std::int64_t i, std::vector<std::string>& out) {
                                  fn((*dom)[static_cast<std::size_t>(i)], out);
                                }};
          }};
}

Property pairs(std::string name, std::vector<Bundle> SuiteInput::*domain,
               std::function<void(const Bundle&, const Bundle&, std::vector<std::string>&)> fn) {
  return {std::move(name), [domain, fn](const SuiteInput& in) {
            const auto* dom = &(in.*domain);
            const std::int64_t n = static_cast<std::int64_t>(dom->size());
            return PropertyBody{n * n, [dom, fn, n](std::int64_t i, std::vector<std::string>& out) {
                                  fn((*dom)[static_cast<std::size_t>(i / n)],
                                     (*dom)[static_cast<std::size_t>(i % n)], out);
                                }};
          }};
}

Property triples(std::string name, std::vector<Bundle> SuiteInput::*domain,
                 std::function<void(const Bundle&, const Bundle&, const Bundle&,
                                    std::vector<std::string>&)> fn) {
  return {std::move(name), [domain, fn](const SuiteInput& in) {
            const auto* dom = &(in.*domain);
            const std::int64_t n = static_cast<std::int64_t>(dom->size());
            return PropertyBody{n * n * n,
                                [dom, fn, n](std::int64_t i, std::vector<std::string>& out) {
                                  fn((*dom)[static_cast<std::size_t>(i / (n * n))],
                                     (*dom)[static_cast<std::size_t>((i / n) % n)],
                                     (*dom)[static_cast<std::size_t>(i % n)], out);
                                }};
          }};
}

Property pinned(std::string name, std::function<void(std::vector<std::string>&)> fn) {
  return {std::move(name), [fn](const SuiteInput&) {
            return PropertyBody{1, [fn](std::int64_t, std::vector<std::string>& out) { fn(out); }};
          }};
}

}  // namespace

std::vector<Property> standard_properties() {
  std::vector<Property> props;

  props.push_back(singles("canonical_roundtrip", &SuiteInput::all,
                          [](const Bundle& b, std::vector<std::string>& out) {
    std::vector<std::pair<Slope, std::int64_t>> fs;
    for (const auto& f : b.factors()) {
      fs.emplace_back(f.slope, f.mult);
      if (f.mult < 1) out.push_back(show("B", b) + ": nonpositive multiplicity");
      if (std::gcd(f.slope.num < 0 ? -f.slope.num : f.slope.num, f.slope.den) != 1 ||
          f.slope.den < 1)
        out.push_back(show("B", b) + ": slope not in lowest terms");
    }
    for (std::size_t i = 1; i < b.factors().size(); ++i)
      if (!(b.factors()[i].slope < b.factors()[i - 1].slope))
        out.push_back(show("B", b) + ": slopes not strictly decreasing");
    if (!(Bundle::from_factors(fs) == b))
      out.push_back(show("B", b) + ": canonicalization is not idempotent");
  }));

  props.push_back(singles("dual_laws", &SuiteInput::all,
                          [](const Bundle& b, std::vector<std::string>& out) {
    const Bundle d = dual(b);
    if (!(dual(d) == b)) out.push_back(show("B", b) + ": dual is not an involution");
    if (d.rank() != b.rank()) out.push_back(show("B", b) + ": dual changes rank");
    if (d.degree() != checked_neg(b.degree()))
      out.push_back(show("B", b) + ": dual does not negate degree");
    for (const auto& f : b.factors()) {
      const Slope mu = f.slope;
      if (!(slice(d, -mu, SliceMode::LessEq) == dual(slice(b, mu, SliceMode::GreaterEq))))
        out.push_back(show("B", b) + ": slice-dual law fails at mu=" + format_slope(mu));
    }
  }));

  props.push_back(singles("hn_vector_sums", &SuiteInput::all,
                          [](const Bundle& b, std::vector<std::string>& out) {
    std::int64_t sx = 0, sy = 0;
    for (const auto& v : b.hn_vectors()) {
      if (v.x <= 0) out.push_back(show("B", b) + ": HN vector with nonpositive x");
      sx += v.x;
      sy += v.y;
    }
    if (sx != b.rank() || sy != b.degree())
      out.push_back(show("B", b) + ": HN vector sums disagree with rank/degree");
  }));

  props.push_back(singles("interval_slope_convexity", &SuiteInput::all,
                          [](const Bundle& b, std::vector<std::string>& out) {
    for (std::int64_t i = 2; i <= b.rank(); ++i)
      if (b.slope_on_interval(i) > b.slope_on_interval(i - 1))
        out.push_back(show("B", b) + ": interval slopes increase at i=" + std::to_string(i));
    const auto vs = b.vertex_set();
    if (vs.front() != 0 || vs.back() != b.rank())
      out.push_back(show("B", b) + ": vertex set endpoints wrong");
  }));

  props.push_back(singles("stretch_laws", &SuiteInput::all,
                          [](const Bundle& b, std::vector<std::string>& out) {
    for (std::int64_t c1 = 1; c1 <= 3; ++c1) {
      const Bundle s1 = stretch(b, c1);
      if (s1.rank() != b.rank())
        out.push_back(show("B", b) + ": stretch changes rank at C=" + std::to_string(c1));
      if (s1.degree() != checked_mul(c1, b.degree()))
        out.push_back(show("B", b) + ": stretch degree law fails at C=" + std::to_string(c1));
      for (std::int64_t c2 = 1; c2 <= 3; ++c2)
        if (!(stretch(s1, c2) == stretch(b, c1 * c2)))
          out.push_back(show("B", b) + ": stretch composition fails at C1=" +
                        std::to_string(c1) + " C2=" + std::to_string(c2));
    }
  }));

  props.push_back(singles("tensor_unit", &SuiteInput::all,
                          [](const Bundle& b, std::vector<std::string>& out) {
    if (!(tensor(b, Bundle::trivial(1)) == b))
      out.push_back(show("B", b) + ": tensor unit law fails");
    if (!tensor(b, Bundle{}).is_zero())
      out.push_back(show("B", b) + ": tensor with zero is not zero");
  }));

  props.push_back(singles("classify_reflexivity", &SuiteInput::all,
                          [](const Bundle& b, std::vector<std::string>& out) {
    if (!is_quotient(b, b).answer) out.push_back(show("B", b) + ": not a quotient of itself");
    if (!subbundle_sufficient(b, b).answer)
      out.push_back(show("B", b) + ": not a subbundle of itself");
  }));

  props.push_back(singles("globgen_quotient_consistency", &SuiteInput::all,
                          [](const Bundle& b, std::vector<std::string>& out) {
    for (std::int64_t n = 1; n <= 4; ++n)
      if (is_globally_generated(b, n) != is_quotient(Bundle::trivial(n), b).answer)
        out.push_back(show("F", b) + ": global generation disagrees at n=" + std::to_string(n));
  }));

  props.push_back(pairs("tensor_rank_degree", &SuiteInput::all,
                        [](const Bundle& a, const Bundle& b, std::vector<std::string>& out) {
    const Bundle t = tensor(a, b);
    if (t.rank() != checked_mul(a.rank(), b.rank()))
      out.push_back(show("A", a) + "; " + show("B", b) + ": tensor rank law fails");
    if (t.degree() != checked_add(checked_mul(a.rank(), b.degree()),
                                  checked_mul(b.rank(), a.degree())))
      out.push_back(show("A", a) + "; " + show("B", b) + ": tensor degree law fails");
  }));

  props.push_back(pairs("tensor_commutative", &SuiteInput::all,
                        [](const Bundle& a, const Bundle& b, std::vector<std::string>& out) {
    if (!(tensor(a, b) == tensor(b, a)))
      out.push_back(show("A", a) + "; " + show("B", b) + ": tensor is not commutative");
  }));

  props.push_back(pairs("deg_pair_total", &SuiteInput::all,
                        [](const Bundle& v, const Bundle& w, std::vector<std::string>& out) {
    if (deg_pair(v, w) != tensor(dual(v), w).degree())
      out.push_back(show("V", v) + "; " + show("W", w) + ": cross-product degree sum disagrees");
  }));

  props.push_back(pairs("deg_pair_nonneg_oracle", &SuiteInput::all,
                        [](const Bundle& v, const Bundle& w, std::vector<std::string>& out) {
    const std::int64_t fast = deg_pair_nonneg(v, w);
    const std::int64_t slow = oracle_deg_pair_nonneg(v, w);
    if (fast != slow)
      out.push_back(show("V", v) + "; " + show("W", w) + ": " + std::to_string(fast) +
                    " != oracle " + std::to_string(slow));
  }));

  props.push_back(pairs("shear_identity", &SuiteInput::compact,
                        [](const Bundle& v, const Bundle& w, std::vector<std::string>& out) {
    static const std::vector<Slope> lambdas{Slope(-2), Slope(-1), Slope(0), Slope(1),
                                            Slope(1, 2), Slope(-2, 3), Slope(2, 3)};
    const std::int64_t base = deg_pair_nonneg(v, w);
    for (const auto& lam : lambdas) {
      const std::int64_t scale = checked_mul(lam.den, lam.den);
      if (deg_pair_nonneg(twist(v, lam), twist(w, lam)) != checked_mul(scale, base))
        out.push_back(show("V", v) + "; " + show("W", w) + ": shear identity fails at lambda=" +
                      format_slope(lam));
    }
  }));

  props.push_back(pairs("stretch_identity", &SuiteInput::compact,
                        [](const Bundle& v, const Bundle& w, std::vector<std::string>& out) {
    const std::int64_t base = deg_pair_nonneg(v, w);
    for (std::int64_t c = 1; c <= 3; ++c)
      if (deg_pair_nonneg(stretch(v, c), stretch(w, c)) != checked_mul(c, base))
        out.push_back(show("V", v) + "; " + show("W", w) + ": stretch identity fails at C=" +
                      std::to_string(c));
  }));

  props.push_back(pairs("hom_dim_zero_law", &SuiteInput::all,
                        [](const Bundle& v, const Bundle& w, std::vector<std::string>& out) {
    const std::int64_t dim = hom_moduli_dim(v, w);
    if (dim < 0) out.push_back(show("V", v) + "; " + show("W", w) + ": negative dimension");
    if (!v.is_zero() && !w.is_zero()) {
      if ((dim == 0) != (v.mu_min() >= w.mu_max()))
        out.push_back(show("V", v) + "; " + show("W", w) + ": zero-dimension law fails");
    }
    if (hom_is_zero(v, w) && dim != 0)
      out.push_back(show("V", v) + "; " + show("W", w) + ": zero Hom with positive dimension");
  }));

  props.push_back(pairs("dominance_characterization", &SuiteInput::all,
                        [](const Bundle& v, const Bundle& w, std::vector<std::string>& out) {
    if (slopewise_dominates(v, w) != dominates_via_ranks(v, w))
      out.push_back(show("V", v) + "; " + show("W", w) + ": dominance characterizations differ");
  }));

  props.push_back(pairs("dominance_decomposition", &SuiteInput::all,
                        [](const Bundle& v, const Bundle& w, std::vector<std::string>& out) {
    if (!slopewise_dominates(v, w)) return;
    const auto dec = common_factor_decompose(v, w);
    const std::string inst = show("V", v) + "; " + show("W", w);
    if (!(direct_sum(dec.common, dec.v_rest) == v) || !(direct_sum(dec.common, dec.w_rest) == w))
      out.push_back(inst + ": decomposition does not reassemble");
    if (!slopewise_dominates(dec.v_rest, dec.w_rest))
      out.push_back(inst + ": rest parts lose dominance");
    if (!dec.w_rest.is_zero()) {
      if (!(dec.v_rest.mu_max() > dec.w_rest.mu_max()))
        out.push_back(inst + ": max slope separation fails");
      if (!dec.common.is_zero() && !(dec.common.mu_min() >= dec.v_rest.mu_max()))
        out.push_back(inst + ": common factor slope bound fails");
    }
  }));

  props.push_back(pairs("equal_rank_duality", &SuiteInput::all,
                        [](const Bundle& v, const Bundle& w, std::vector<std::string>& out) {
    if (v.rank() != w.rank()) return;
    if (equal_rank_duality_holds(v, w) != slopewise_dominates(v, w))
      out.push_back(show("V", v) + "; " + show("W", w) + ": equal-rank duality check disagrees");
  }));

  props.push_back(pairs("deg_nonneg_monotone", &SuiteInput::all,
                        [](const Bundle& v, const Bundle& w, std::vector<std::string>& out) {
    if (!slopewise_dominates(v, w)) return;
    if (degree_nonneg(v) < degree_nonneg(w))
      out.push_back(show("V", v) + "; " + show("W", w) + ": nonnegative part not monotone");
  }));

  props.push_back(pairs("quotient_equivalence", &SuiteInput::all,
                        [](const Bundle& e, const Bundle& f, std::vector<std::string>& out) {
    if (is_quotient(e, f).answer != is_quotient_polygonal(e, f).answer)
      out.push_back(show("E", e) + "; " + show("F", f) + ": quotient characterizations differ");
  }));

  props.push_back(pairs("quotient_duality_bridge", &SuiteInput::all,
                        [](const Bundle& e, const Bundle& f, std::vector<std::string>& out) {
    if (quotient_rank_condition(e, f) != slopewise_dominates(dual(e), dual(f)))
      out.push_back(show("E", e) + "; " + show("F", f) + ": rank condition dual bridge fails");
  }));

  props.push_back(pairs("subbundle_quotient_duality", &SuiteInput::all,
                        [](const Bundle& e, const Bundle& d, std::vector<std::string>& out) {
    if (subbundle_sufficient(e, d).answer != is_quotient(dual(e), dual(d)).answer)
      out.push_back(show("E", e) + "; " + show("D", d) + ": subbundle/quotient duality fails");
    if (subbundle_necessary(e, d) != slopewise_dominates(e, d))
      out.push_back(show("E", e) + "; " + show("D", d) +
                    ": necessary condition is not dominance");
  }));

  props.push_back(triples("tensor_algebra", &SuiteInput::compact,
                          [](const Bundle& a, const Bundle& b, const Bundle& c,
                             std::vector<std::string>& out) {
    const std::string inst = show("A", a) + "; " + show("B", b) + "; " + show("C", c);
    if (!(tensor(a, direct_sum(b, c)) == direct_sum(tensor(a, b), tensor(a, c))))
      out.push_back(inst + ": tensor does not distribute over direct sum");
    if (!(tensor(tensor(a, b), c) == tensor(a, tensor(b, c))))
      out.push_back(inst + ": tensor is not associative");
  }));

  props.push_back(triples("dominance_transitive", &SuiteInput::compact,
                          [](const Bundle& a, const Bundle& b, const Bundle& c,
                             std::vector<std::string>& out) {
    if (slopewise_dominates(a, b) && slopewise_dominates(b, c) && !slopewise_dominates(a, c))
      out.push_back(show("A", a) + "; " + show("B", b) + "; " + show("C", c) +
                    ": dominance is not transitive");
  }));

  props.push_back(triples("quotient_transitive", &SuiteInput::compact,
                          [](const Bundle& a, const Bundle& b, const Bundle& c,
                             std::vector<std::string>& out) {
    if (is_quotient(a, b).answer && is_quotient(b, c).answer && !is_quotient(a, c).answer)
      out.push_back(show("A", a) + "; " + show("B", b) + "; " + show("C", c) +
                    ": quotient relation is not transitive");
  }));

  props.push_back(triples("key_inequality", &SuiteInput::integral,
                          [](const Bundle& e, const Bundle& f, const Bundle& q,
                             std::vector<std::string>& out) {
    const auto rep = key_inequality_check(e, f, q);
    if (!rep.hypotheses_ok) return;
    const std::string inst = show("E", e) + "; " + show("F", f) + "; " + show("Q", q);
    if (rep.c < 0) out.push_back(inst + ": c = " + std::to_string(rep.c) + " < 0");
    // the equality case additionally needs the equality-case clause; see
    // the key_inequality_equality_gap property for why
    if (equality_case_clause(e, f, q) && !rep.equality_consistent)
      out.push_back(inst + ": equality case inconsistent");
  }));

  props.push_back(pinned("key_inequality_equality_gap", [](std::vector<std::string>& out) {
    // documented counterexample to the equality case without the clause:
    // all four hypotheses hold, yet c = 0 with F != Q
    const Bundle e = Bundle::from_factors({{Slope(2), 1}, {Slope(1), 1}});
    const Bundle f = Bundle::stable(Slope(2));
    const Bundle q = Bundle::stable(Slope(1));
    const auto rep = key_inequality_check(e, f, q);
    if (!rep.hypotheses_ok) out.push_back("gap instance no longer satisfies the hypotheses");
    if (rep.c != 0 || rep.equality_consistent)
      out.push_back("gap instance no longer exhibits the equality gap");
    if (equality_case_clause(e, f, q))
      out.push_back("gap instance unexpectedly satisfies the equality-case clause");
  }));

  props.push_back(triples("c_value_stretch_shear", &SuiteInput::integral,
                          [](const Bundle& e, const Bundle& f, const Bundle& q,
                             std::vector<std::string>& out) {
    const std::int64_t base = c_value(e, f, q);
    const std::string inst = show("E", e) + "; " + show("F", f) + "; " + show("Q", q);
    for (std::int64_t c = 2; c <= 3; ++c)
      if (c_value(stretch(e, c), stretch(f, c), stretch(q, c)) != checked_mul(c, base))
        out.push_back(inst + ": c stretch law fails at C=" + std::to_string(c));
    for (std::int64_t lam : {-1, 1, 2}) {
      const Slope shift(-lam);
      if (c_value(twist(e, shift), twist(f, shift), twist(q, shift)) != base)
        out.push_back(inst + ": c shear invariance fails at lambda=" + std::to_string(lam));
    }
  }));

  props.push_back(triples("reduction_trace", &SuiteInput::integral,
                          [](const Bundle& e, const Bundle& f, const Bundle& q,
                             std::vector<std::string>& out) {
    if (f.rank() != q.rank() || !slopewise_dominates(f, q)) return;
    const std::string inst = show("E", e) + "; " + show("F", f) + "; " + show("Q", q);
    const auto trace = slope_reduction_sequence(e, f, q);
    if (!trace.terminated) {
      out.push_back(inst + ": reduction did not terminate");
      return;
    }
    if (static_cast<std::int64_t>(trace.steps.size()) > q.rank() + 1)
      out.push_back(inst + ": trace longer than rank(Q)+1");
    if (!(trace.steps.back().f == q)) out.push_back(inst + ": final bundle is not Q");
    if (trace.steps.front().c != c_value(e, f, q))
      out.push_back(inst + ": first c disagrees with c_value");
    // nonincreasing c along the trace needs the single-step hypotheses
    const bool single_step_hyps = quotient_rank_condition(e, f) && is_quotient(e, q).answer;
    if (single_step_hyps) {
      for (std::size_t n = 1; n < trace.steps.size(); ++n)
        if (trace.steps[n].c > trace.steps[n - 1].c)
          out.push_back(inst + ": c increases at step " + std::to_string(n));
      if (trace.steps.size() >= 2 && equality_case_clause(e, f, q) &&
          !(trace.steps[1].c < trace.steps[0].c))
        out.push_back(inst + ": first step is not strictly decreasing");
    }
  }));

  props.push_back(triples("max_reduction_step", &SuiteInput::integral,
                          [](const Bundle& e, const Bundle& f, const Bundle& q,
                             std::vector<std::string>& out) {
    if (f.rank() != q.rank() || !slopewise_dominates(f, q)) return;
    if (!quotient_rank_condition(e, f) || !is_quotient(e, q).answer) return;
    const Bundle reduced = max_slope_reduction(f, q);
    if (c_value(e, f, q) < c_value(e, reduced, q))
      out.push_back(show("E", e) + "; " + show("F", f) + "; " + show("Q", q) +
                    ": c increases under maximal slope reduction");
  }));

  props.push_back(pinned("degree_not_monotone_example", [](std::vector<std::string>& out) {
    const Bundle v = Bundle::from_factors({{Slope(1), 4}, {Slope(-1), 4}});
    const Bundle w = Bundle::stable(Slope(1, 3));
    if (!slopewise_dominates(v, w)) out.push_back("pinned pair is not dominant");
    if (!(v.degree() < w.degree()))
      out.push_back("pinned pair fails to show non-monotone total degree");
    if (degree_nonneg(v) < degree_nonneg(w))
      out.push_back("pinned pair violates nonnegative-part monotonicity");
  }));

  props.push_back(pinned("key_inequality_flat_example", [](std::vector<std::string>& out) {
    const auto rep =
        key_inequality_check(Bundle::trivial(3), Bundle::trivial(2), Bundle::trivial(1));
    if (rep.c != 0) out.push_back("flat example has c != 0");
    if (rep.hypotheses_ok || rep.violated_hypothesis != Hypothesis::IV)
      out.push_back("flat example does not violate the minimum-slope hypothesis");
    if (rep.equality_consistent)
      out.push_back("flat example unexpectedly satisfies the equality case");
  }));

  props.push_back({"enumeration_soundness", [](const SuiteInput& in) {
    const auto* all = &in.all;
    const EnumBounds bounds = in.bounds;
    return PropertyBody{static_cast<std::int64_t>(all->size()),
                        [all, bounds](std::int64_t i, std::vector<std::string>& out) {
      const Bundle& b = (*all)[static_cast<std::size_t>(i)];
      if (b.is_zero()) {
        if (!bounds.include_zero) out.push_back("zero bundle emitted but excluded");
        return;
      }
      if (b.rank() > bounds.max_rank) out.push_back(show("B", b) + ": rank bound violated");
      for (const auto& f : b.factors())
        if (f.slope.den > bounds.max_denominator)
          out.push_back(show("B", b) + ": denominator bound violated");
      for (std::int64_t x : b.vertex_set()) {
        const Rational y = polygon_height(b, x);
        if (y < Rational(-bounds.max_abs_degree) || y > Rational(bounds.max_abs_degree))
          out.push_back(show("B", b) + ": vertex height bound violated");
      }
    }};
  }});

  props.push_back({"enumeration_unique", [](const SuiteInput& in) {
    const auto* all = &in.all;
    return PropertyBody{1, [all](std::int64_t, std::vector<std::string>& out) {
      std::set<std::string> seen;
      for (const auto& b : *all)
        if (!seen.insert(format_bundle(b)).second)
          out.push_back(show("B", b) + ": emitted twice");
    }};
  }});

  return props;
}

namespace {

void run_shard(const PropertyBody& body, std::int64_t begin, std::int64_t end,
               std::vector<std::string>& failures, std::atomic<bool>& exhausted) {
  for (std::int64_t i = begin; i < end; ++i) {
    try {
      body.check(i, failures);
    } catch (const std::bad_alloc&) {
      exhausted.store(true);
      return;
    } catch (const std::exception& ex) {
      if (failures.size() < kMaxFailures)
        failures.push_back("instance " + std::to_string(i) + " raised: " + ex.what());
    }
    if (failures.size() > kMaxFailures) failures.resize(kMaxFailures);
  }
}

}  // namespace

VerifyReport run_properties(const std::vector<Property>& props, const EnumBounds& bounds,
                            int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
  const SuiteInput input = make_suite_input(bounds);
  VerifyReport report;
  std::atomic<bool> exhausted{false};
  for (const auto& prop : props) {
    const PropertyBody body = prop.body(input);
    PropertyResult result;
    result.checked = body.size;
    const int workers = static_cast<int>(
        std::min<std::int64_t>(jobs, std::max<std::int64_t>(body.size, 1)));
    std::vector<std::vector<std::string>> shard_failures(static_cast<std::size_t>(workers));
    if (workers == 1) {
      run_shard(body, 0, body.size, shard_failures[0], exhausted);
    } else {
      std::vector<std::thread> threads;
      const std::int64_t chunk = (body.size + workers - 1) / workers;
      for (int t = 0; t < workers; ++t) {
        const std::int64_t begin = std::min<std::int64_t>(t * chunk, body.size);
        const std::int64_t end = std::min<std::int64_t>(begin + chunk, body.size);
        threads.emplace_back(run_shard, std::cref(body), begin, end,
                             std::ref(shard_failures[static_cast<std::size_t>(t)]),
                             std::ref(exhausted));
      }
      for (auto& th : threads) th.join();
    }
    if (exhausted.load()) throw ResourceExhausted("out of memory while checking " + prop.name);
    // contiguous shards merged in order keep the report independent of jobs
    for (const auto& sf : shard_failures)
      for (const auto& f : sf)
        if (result.failures.size() < kMaxFailures) result.failures.push_back(f);
    report.properties.emplace(prop.name, std::move(result));
  }
  return report;
}

VerifyReport run_property_suite(const EnumBounds& bounds, int jobs) {
  return run_properties(standard_properties(), bounds, jobs);
}

}  // namespace hnp
