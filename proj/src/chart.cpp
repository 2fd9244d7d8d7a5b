#include "liftlog/chart.hpp"

#include <algorithm>

namespace liftlog {

namespace {

// M^T b over the integers
std::vector<long long> transpose_apply(const std::vector<expvec>& rows,
                                       const expvec& b) {
  const size_t n = rows[0].size();
  std::vector<long long> out(n, 0);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < n; ++j) out[j] += (long long)b[i] * rows[i][j];
  return out;
}

qmat inverse_matrix(const std::vector<expvec>& rows) {
  const int n = (int)rows.size();
  qmat m(n, qvec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = rat(rows[i][j]);
  qmat inv = invert(m);
  if (inv.empty())
    throw singular_exponent_matrix("chart: exponent matrix not invertible over Q");
  return inv;
}

} // namespace

monomial_map::monomial_map(ring_context src, ring_context tgt,
                           std::vector<expvec> exps)
    : source(std::move(src)), target(std::move(tgt)), rows(std::move(exps)) {
  if (source.n() != target.n())
    throw dimension_mismatch("chart: source and target must have equal rank");
  if ((int)rows.size() != source.n())
    throw dimension_mismatch("chart: one exponent row per source variable");
  for (const auto& r : rows) {
    check_dim(target, r);
    if (!all_nonneg(r)) throw error("chart: negative exponent in variable image");
    if (std::all_of(r.begin(), r.end(), [](int e) { return e == 0; }))
      throw error("chart: variable maps to a constant");
  }
  inverse_matrix(rows); // must be invertible
}

laurent_poly laurent_normalize(laurent_poly p) {
  std::sort(p.begin(), p.end(), [](const laurent_term& a, const laurent_term& b) {
    return a.e < b.e;
  });
  laurent_poly out;
  for (auto& t : p) {
    if (!out.empty() && out.back().e == t.e)
      out.back().c += t.c;
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const laurent_term& t) { return t.c.is_zero(); }),
            out.end());
  return out;
}

weight_valuation induced_weight(const monomial_map& map, int j) {
  if (j < 0 || j >= map.target.n()) throw error("induced weight: bad coordinate");
  std::vector<long long> w;
  bool any = false;
  for (const auto& r : map.rows) {
    w.push_back(r[j]);
    if (r[j] > 0) any = true;
  }
  if (!any)
    throw zero_weight("induced weight: coordinate vanishes on no variable image");
  return weight_valuation(map.source, std::move(w));
}

bool critical_weight_degenerate(const monomial_map& map, int j) {
  weight_valuation v = induced_weight(map, j);
  int ones = 0, zeros = 0;
  for (long long x : v.w) {
    if (x == 1) ++ones;
    if (x == 0) ++zeros;
  }
  return ones == 1 && zeros == (int)v.w.size() - 1;
}

derivation_module chart_liftable(const monomial_map& map,
                                 const std::vector<int>& critical) {
  if (critical.empty()) throw error("chart: empty critical set");
  monomial_ideal m = maximal_ideal(map.source);
  derivation_module M;
  bool first = true;
  for (int j : critical) {
    derivation_module piece = log_module(induced_weight(map, j), m);
    M = first ? std::move(piece) : module_intersect(M, piece);
    first = false;
  }
  return M;
}

laurent_derivation_image direct_lift(const monomial_map& map,
                                     const graded_derivation& d) {
  check_dim(map.source, d.degree);
  const int n = map.source.n();
  qmat inv = inverse_matrix(map.rows);
  std::vector<long long> mb = transpose_apply(map.rows, d.degree);

  laurent_derivation_image out;
  out.ctx = map.target;
  out.images.resize(n);
  for (int j = 0; j < n; ++j) {
    rat q(0);
    for (int i = 0; i < n; ++i) q += inv[j][i] * d.coeffs[i];
    if (q.is_zero()) continue;
    laurent_term t;
    t.c = q;
    t.e = mb;
    t.e[j] += 1;
    out.images[j] = laurent_normalize({t});
  }
  return out;
}

laurent_derivation_image direct_lift(const monomial_map& map,
                                     const laurent_derivation_image& d) {
  if (d.ctx != map.source)
    throw dimension_mismatch("direct lift: derivation lives on the wrong ring");
  const int n = map.source.n();
  qmat inv = inverse_matrix(map.rows);

  // R_i = (d(x_i)/x_i) composed with the chart
  std::vector<laurent_poly> R(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& t : d.images[i]) {
      expvec shifted(n);
      for (int k = 0; k < n; ++k) shifted[k] = (int)t.e[k] - (k == i ? 1 : 0);
      laurent_term img;
      img.c = t.c;
      img.e = transpose_apply(map.rows, shifted);
      R[i].push_back(std::move(img));
    }
    R[i] = laurent_normalize(std::move(R[i]));
  }

  laurent_derivation_image out;
  out.ctx = map.target;
  out.images.resize(n);
  for (int j = 0; j < n; ++j) {
    laurent_poly acc;
    for (int i = 0; i < n; ++i) {
      for (const auto& t : R[i]) {
        laurent_term s;
        s.c = inv[j][i] * t.c;
        s.e = t.e;
        s.e[j] += 1;
        acc.push_back(std::move(s));
      }
    }
    out.images[j] = laurent_normalize(std::move(acc));
  }
  return out;
}

bool lifts_regularly(const monomial_map& map, const graded_derivation& d,
                     const std::vector<int>& critical) {
  laurent_derivation_image lift = direct_lift(map, d);
  for (const auto& img : lift.images)
    for (const auto& t : img)
      for (int j : critical)
        if (t.e[j] < 0) return false;
  return true;
}

bool lifts_regularly_weighted(const monomial_map& map, const graded_derivation& d,
                              const std::vector<long long>& target_weight) {
  if ((int)target_weight.size() != map.target.n())
    throw dimension_mismatch("weighted lift check: weight length mismatch");
  laurent_derivation_image lift = direct_lift(map, d);
  for (int j = 0; j < map.target.n(); ++j) {
    for (const auto& t : lift.images[j]) {
      long long v = 0;
      for (int k = 0; k < map.target.n(); ++k) v += target_weight[k] * t.e[k];
      if (v < target_weight[j]) return false;
    }
  }
  return true;
}

bool tangency_check(const monomial_map& map, const graded_derivation& d,
                    const std::vector<int>& critical) {
  if (!lifts_regularly(map, d, critical))
    throw not_liftable("tangency: derivation does not lift regularly");
  laurent_derivation_image lift = direct_lift(map, d);
  for (int j : critical)
    for (const auto& t : lift.images[j])
      if (t.e[j] < 1) return false;
  return true;
}

} // namespace liftlog
