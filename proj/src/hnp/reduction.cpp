#include "hnp/reduction.hpp"

#include <stdexcept>

#include "hnp/classify.hpp"
#include "hnp/dominance.hpp"
#include "hnp/pairing.hpp"

namespace hnp {

std::int64_t c_value(const Bundle& e, const Bundle& f, const Bundle& q) {
  return checked_sub(
      checked_add(deg_pair_nonneg(e, f), deg_pair_nonneg(q, q)),
      checked_add(deg_pair_nonneg(e, q), deg_pair_nonneg(q, f)));
}

Bundle max_slope_reduction(const Bundle& v, const Bundle& w) {
  if (v.is_zero() || w.is_zero())
    throw std::invalid_argument("maximal slope reduction needs nonzero bundles");
  if (!v.all_slopes_integer() || !w.all_slopes_integer())
    throw std::invalid_argument("maximal slope reduction needs integer slopes");
  if (!slopewise_dominates(v, w))
    throw std::invalid_argument("maximal slope reduction needs slopewise dominance");
  const Slope lam = w.mu_max();
  const std::int64_t above = rank_slice(v, lam, SliceMode::Greater);
  return direct_sum(Bundle::stable_power(lam, above), slice(v, lam, SliceMode::LessEq));
}

ReductionTrace slope_reduction_sequence(const Bundle& e, const Bundle& f, const Bundle& q) {
  if (f.is_zero() || q.is_zero())
    throw std::invalid_argument("slope reduction needs nonzero bundles");
  if (f.rank() != q.rank())
    throw std::invalid_argument("slope reduction needs equal ranks");
  if (!e.all_slopes_integer() || !f.all_slopes_integer() || !q.all_slopes_integer())
    throw std::invalid_argument("slope reduction needs integer slopes");
  if (!slopewise_dominates(f, q))
    throw std::invalid_argument("slope reduction needs slopewise dominance");

  ReductionTrace trace;
  Bundle fn = f;
  // rank(U_n) grows strictly, so the sequence has at most rank(Q)+1 terms
  while (static_cast<std::int64_t>(trace.steps.size()) <= q.rank()) {
    auto dec = common_factor_decompose(fn, q);
    trace.steps.push_back({fn, dec.common, c_value(e, fn, q)});
    if (dec.w_rest.is_zero()) {
      // equal ranks force the remainder of F_n to vanish too: F_n = Q
      trace.terminated = true;
      break;
    }
    fn = direct_sum(dec.common, max_slope_reduction(dec.v_rest, dec.w_rest));
  }
  return trace;
}

bool equality_case_clause(const Bundle& e, const Bundle& f, const Bundle& q) {
  for (const auto* b : {&e, &f, &q}) {
    for (const auto& fac : b->factors()) {
      const Slope mu = fac.slope;
      if (rank_slice(e, mu, SliceMode::LessEq) == rank_slice(q, mu, SliceMode::LessEq) &&
          !(slice(e, mu, SliceMode::LessEq) == slice(f, mu, SliceMode::LessEq)))
        return false;
    }
  }
  return true;
}

KeyInequalityReport key_inequality_check(const Bundle& e, const Bundle& f, const Bundle& q) {
  KeyInequalityReport report;
  report.c = c_value(e, f, q);
  if (!is_quotient(e, f).answer)
    report.violated_hypothesis = Hypothesis::I;
  else if (!is_quotient(e, q).answer)
    report.violated_hypothesis = Hypothesis::II;
  else if (!slopewise_dominates(f, q))
    report.violated_hypothesis = Hypothesis::III;
  else if (e.is_zero() || f.is_zero() || !(e.mu_min() < f.mu_min()))
    report.violated_hypothesis = Hypothesis::IV;
  report.hypotheses_ok = !report.violated_hypothesis.has_value();
  report.equality_consistent = (report.c == 0) == (f == q);
  return report;
}

}  // namespace hnp
