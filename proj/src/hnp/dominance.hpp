#pragma once

#include "hnp/bundle.hpp"

namespace hnp {

/// Splitting of a slopewise-dominant pair (V, W) as V = U + V', W = U + W'
/// where U is the maximal common initial part of the left-aligned polygons.
struct CommonFactorDecomposition {
  Bundle common;  // U
  Bundle v_rest;  // V'
  Bundle w_rest;  // W'
};

/// V slopewise dominates W: rank(V) >= rank(W) and on every unit interval
/// [i-1, i] with i <= rank(W) the slope of HN(W) is <= the slope of HN(V).
/// The zero bundle is dominated by everything.
bool slopewise_dominates(const Bundle& v, const Bundle& w);

/// Equivalent characterization: rank(V^{>=mu}) >= rank(W^{>=mu}) for every
/// mu, checked on the finite set of HN slopes of V and W where the rank
/// step functions jump.
bool dominates_via_ranks(const Bundle& v, const Bundle& w);

/// Requires slopewise_dominates(v, w).  The decomposition satisfies:
/// v_rest slopewise dominates w_rest; if w_rest != 0 then
/// mu_max(v_rest) > mu_max(w_rest); if additionally common != 0 then
/// mu_min(common) >= mu_max(v_rest).
CommonFactorDecomposition common_factor_decompose(const Bundle& v, const Bundle& w);

/// For rank(V) = rank(W): V slopewise dominates W iff W^dual slopewise
/// dominates V^dual.  Evaluates both sides and reports the shared answer;
/// a disagreement would be an internal error.
bool equal_rank_duality_holds(const Bundle& v, const Bundle& w);

}  // namespace hnp
