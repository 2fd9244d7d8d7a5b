#include "liftlog/valuation.hpp"

#include <algorithm>
#include <numeric>

#include "liftlog/closures.hpp"

namespace liftlog {

weight_valuation::weight_valuation(ring_context c, std::vector<long long> weights)
    : ctx(std::move(c)), w(std::move(weights)) {
  if ((int)w.size() != ctx.n())
    throw dimension_mismatch("weight valuation: length mismatch");
  bool positive = false;
  for (long long x : w) {
    if (x < 0) throw error("weight valuation: negative weight");
    if (x > 0) positive = true;
  }
  if (!positive) throw zero_weight("weight valuation: zero weight vector");
}

long long value(const weight_valuation& v, const expvec& a) {
  check_dim(v.ctx, a);
  if (!all_nonneg(a)) throw error("value: negative exponent");
  return dotll(v.w, a);
}

long long value_ideal(const weight_valuation& v, const monomial_ideal& I) {
  if (v.ctx != I.ctx()) throw dimension_mismatch("value_ideal: different rings");
  if (I.is_zero()) throw zero_ideal_error("value_ideal: zero ideal");
  long long best = dotll(v.w, I.min_gens()[0]);
  for (const auto& g : I.min_gens()) best = std::min(best, dotll(v.w, g));
  return best;
}

derivation_module log_module(const weight_valuation& v, const monomial_ideal& I,
                             int box_margin) {
  if (v.ctx != I.ctx()) throw dimension_mismatch("log module: different rings");
  if (!I.is_proper()) throw error("log module: ideal must be nonzero and proper");
  const int n = I.ctx().n();

  // The value condition on a graded piece does not see the ideal: a degree-b
  // derivation moves every monomial of I by weight w.b, so the piece is full
  // when w.b >= 0 and empty otherwise.  (Checking the inequality on minimal
  // generators alone would admit extra pieces that depend on the chosen
  // defining ideal, which the independence lemma forbids.)
  piece_fn piece = [&v, n](const expvec& b) {
    std::vector<bool> allowed(n, false);
    int negs = 0, neg_at = -1;
    for (int i = 0; i < n; ++i)
      if (b[i] < 0) { ++negs; neg_at = i; }
    if (negs == 0)
      std::fill(allowed.begin(), allowed.end(), true);
    else if (negs == 1 && b[neg_at] == -1)
      allowed[neg_at] = true;
    else
      return qspace{n, {}};

    if (dotll(v.w, b) >= 0) return full_space(n, allowed);
    return qspace{n, {}};
  };

  // box large enough that every minimal monomial derivation x^u d_i with
  // w.u >= w_i fits, and the w.b sign is stable beyond the shell
  long long w_sum = std::accumulate(v.w.begin(), v.w.end(), 0LL);
  expvec sat(n, 1);
  for (int i = 0; i < n; ++i) {
    if (v.w[i] > 0)
      sat[i] = std::max<long long>(1, (w_sum + v.w[i] - 1) / v.w[i]);
  }
  expvec box = sat;
  for (int& x : box) x += std::max(0, box_margin - 1);

  derivation_module M = build_module(I.ctx(), piece, std::move(box), sat);
  for (const auto& g : M.gens) {
    if (dotll(v.w, g.degree) < 0)
      throw error("log module: generator lowers the valuation");
  }
  return M;
}

std::vector<std::pair<weight_valuation, long long>> rees_valuations(
    const monomial_ideal& I) {
  if (I.is_zero()) throw zero_ideal_error("rees valuations: zero ideal");
  if (I.is_unit()) throw error("rees valuations: unit ideal has no critical locus");
  std::vector<std::pair<weight_valuation, long long>> out;
  for (const auto& f : newton_hull(I).facets) {
    weight_valuation v(I.ctx(), f.w);
    long long d = value_ideal(v, I);
    out.emplace_back(std::move(v), d);
  }
  return out;
}

derivation_module liftable_module(const monomial_ideal& I) {
  auto rees = rees_valuations(I);
  derivation_module L;
  bool first = true;
  for (const auto& [v, d] : rees) {
    (void)d;
    derivation_module piece = log_module(v, I);
    L = first ? std::move(piece) : module_intersect(L, piece);
    first = false;
  }
  if (first) {
    // no facets cannot happen for a proper nonzero ideal
    throw error("liftable module: empty valuation set");
  }
  return L;
}

lift_report sandwich_report(const monomial_ideal& I) {
  if (!I.is_proper()) throw error("sandwich: ideal must be nonzero and proper");
  lift_report rep;
  rep.T_I = tangent_module(I);
  rep.T_rr = tangent_module(rr_closure(I).closure);
  rep.L = liftable_module(I);
  rep.T_bar = tangent_module(integral_closure(I));
  rep.T_rad = tangent_module(radical(I));
  rep.rees = rees_valuations(I);

  rep.chain_ok = module_contains(rep.T_rr, rep.T_I) &&
                 module_contains(rep.L, rep.T_rr) &&
                 module_contains(rep.T_bar, rep.L);

  monomial_ideal rad = radical(I);
  rep.uniformly_ramified = true;
  for (const auto& [v, d] : rep.rees) {
    (void)d;
    long long val = dotll(v.w, rad.min_gens()[0]);
    for (const auto& g : rad.min_gens())
      if (dotll(v.w, g) != val) { rep.uniformly_ramified = false; break; }
    if (!rep.uniformly_ramified) break;
  }
  rep.differentially_ramified = module_equal(rep.L, rep.T_rad);
  return rep;
}

} // namespace liftlog
