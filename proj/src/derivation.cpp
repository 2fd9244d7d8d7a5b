#include "liftlog/derivation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace liftlog {

namespace {

int degree_cap() {
  if (const char* s = std::getenv("LIFTLOG_MAX_DEGREE")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 64;
}

std::vector<bool> allowed_slots(const expvec& b) {
  const int n = (int)b.size();
  std::vector<bool> allowed(n, false);
  int negs = 0, neg_at = -1;
  for (int i = 0; i < n; ++i) {
    if (b[i] < 0) { ++negs; neg_at = i; }
  }
  if (negs == 0) {
    std::fill(allowed.begin(), allowed.end(), true);
  } else if (negs == 1 && b[neg_at] == -1) {
    allowed[neg_at] = true;
  }
  return allowed;
}

void enumerate_box(const expvec& lo, const expvec& hi, expvec& cur, int i,
                   std::vector<expvec>& out) {
  if (i == (int)lo.size()) { out.push_back(cur); return; }
  for (int v = lo[i]; v <= hi[i]; ++v) {
    cur[i] = v;
    enumerate_box(lo, hi, cur, i + 1, out);
  }
}

int vec_sum(const expvec& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool sweep_order(const expvec& a, const expvec& b) {
  int sa = vec_sum(a), sb = vec_sum(b);
  if (sa != sb) return sa < sb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool gen_order(const graded_derivation& a, const graded_derivation& b) {
  if (a.degree != b.degree) return lex_less(a.degree, b.degree);
  auto pivot = [](const qvec& c) {
    for (size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) return (int)i;
    return (int)c.size();
  };
  int pa = pivot(a.coeffs), pb = pivot(b.coeffs);
  if (pa != pb) return pa < pb;
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
  }
  return false;
}

qspace reachable_span(const std::vector<graded_derivation>& gens, const expvec& b,
                      int n) {
  qmat rows;
  for (const auto& g : gens)
    if (divides(g.degree, b)) rows.push_back(g.coeffs);
  return make_space(n, std::move(rows));
}

} // namespace

graded_derivation::graded_derivation(expvec b, qvec c)
    : degree(std::move(b)), coeffs(std::move(c)) {
  if (degree.size() != coeffs.size())
    throw dimension_mismatch("graded derivation: degree/coeff length mismatch");
  bool any = false;
  std::vector<bool> allowed = allowed_slots(degree);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (degree[i] < -1) throw error("graded derivation: degree entry below -1");
    if (!coeffs[i].is_zero()) {
      if (!allowed[i])
        throw error("graded derivation: coefficient on a negative monomial");
      any = true;
    }
  }
  if (!any) throw error("graded derivation: zero coefficient vector");
}

std::optional<std::pair<rat, expvec>> apply(const graded_derivation& d,
                                            const expvec& a) {
  if (!all_nonneg(a)) throw error("apply: negative exponent");
  rat c(0);
  for (size_t i = 0; i < a.size(); ++i) c += d.coeffs[i] * rat(a[i]);
  if (c.is_zero()) return std::nullopt;
  return std::make_pair(c, vec_add(a, d.degree));
}

bool preserves(const graded_derivation& d, const monomial_ideal& I) {
  for (const auto& a : I.min_gens()) {
    auto im = apply(d, a);
    if (im && !member(I, im->second)) return false;
  }
  return true;
}

std::optional<graded_derivation> lie_bracket(const graded_derivation& a,
                                             const graded_derivation& b) {
  const size_t n = a.degree.size();
  auto dotq = [n](const qvec& c, const expvec& e) {
    rat s(0);
    for (size_t i = 0; i < n; ++i) s += c[i] * rat(e[i]);
    return s;
  };
  rat ca_db = dotq(a.coeffs, b.degree);
  rat cb_da = dotq(b.coeffs, a.degree);
  qvec c(n, rat(0));
  bool any = false;
  for (size_t i = 0; i < n; ++i) {
    c[i] = ca_db * b.coeffs[i] - cb_da * a.coeffs[i];
    if (!c[i].is_zero()) any = true;
  }
  if (!any) return std::nullopt;
  return graded_derivation(vec_add(a.degree, b.degree), std::move(c));
}

derivation_module build_module(const ring_context& ctx, const piece_fn& piece,
                               expvec box_max, const expvec& saturation) {
  const int n = ctx.n();
  const int cap = degree_cap();
  for (int i = 0; i < n; ++i)
    box_max[i] = std::max(box_max[i], saturation[i] - 1);

  while (true) {
    for (int v : box_max)
      if (v > cap)
        throw error("degree box exceeds LIFTLOG_MAX_DEGREE");

    std::vector<expvec> degrees;
    expvec cur(n);
    enumerate_box(expvec(n, -1), box_max, cur, 0, degrees);
    std::sort(degrees.begin(), degrees.end(), sweep_order);

    std::vector<graded_derivation> gens;
    for (const auto& b : degrees) {
      qspace v = piece(b);
      if (v.dim() == 0) continue;
      qspace have = reachable_span(gens, b, n);
      for (const auto& row : v.basis) {
        if (have.contains(row)) continue;
        gens.emplace_back(b, primitive_integer(row));
        have = span_sum(have, make_space(n, {row}));
      }
    }

    // completeness certificate on the shell one step outside the box
    expvec shell_hi = box_max;
    for (int& v : shell_hi) ++v;
    std::vector<expvec> ext;
    enumerate_box(expvec(n, -1), shell_hi, cur, 0, ext);
    bool ok = true;
    for (const auto& b : ext) {
      bool on_shell = false;
      for (int i = 0; i < n; ++i)
        if (b[i] == shell_hi[i]) on_shell = true;
      if (!on_shell) continue;
      qspace v = piece(b);
      qspace have = reachable_span(gens, b, n);
      if (!(have.contains(v) && v.contains(have))) { ok = false; break; }
    }
    if (ok) {
      std::sort(gens.begin(), gens.end(), gen_order);
      return derivation_module{ctx, std::move(gens), std::move(box_max)};
    }
    for (int& v : box_max) v += 2;
  }
}

derivation_module make_module(const ring_context& ctx,
                              std::vector<graded_derivation> gens) {
  expvec box(ctx.n(), 0);
  for (const auto& g : gens) {
    check_dim(ctx, g.degree);
    box = vec_max(box, g.degree);
  }
  for (int& v : box) ++v;
  std::sort(gens.begin(), gens.end(), gen_order);
  return derivation_module{ctx, std::move(gens), std::move(box)};
}

derivation_module tangent_module(const monomial_ideal& I, int box_margin) {
  if (I.is_zero()) throw zero_ideal_error("tangent module: zero ideal");
  const int n = I.ctx().n();
  piece_fn piece = [&I, n](const expvec& b) {
    std::vector<bool> allowed = allowed_slots(b);
    if (std::none_of(allowed.begin(), allowed.end(), [](bool x) { return x; }))
      return qspace{n, {}};
    qmat rows;
    for (const auto& a : I.min_gens()) {
      expvec ab = vec_add(a, b);
      if (!all_nonneg(ab) || member(I, ab)) continue;
      qvec r(n);
      for (int i = 0; i < n; ++i) r[i] = rat(a[i]);
      rows.push_back(std::move(r));
    }
    return solve_kernel(n, rows, allowed);
  };
  expvec box(n, I.max_exponent() + std::max(1, box_margin));
  derivation_module M = build_module(I.ctx(), piece, std::move(box), I.gen_box());
  for (const auto& g : M.gens) {
    if (!preserves(g, I)) throw error("tangent module: generator fails check");
  }
  return M;
}

staircase_data staircase_T_2var(const monomial_ideal& I) {
  if (I.ctx().n() != 2) throw not_two_variables("staircase form needs 2 variables");
  if (!is_m_primary(I)) throw not_m_primary("staircase form needs an m-primary ideal");
  const auto& gens = I.min_gens(); // descending lex: a strictly decreasing
  int p = 0, q = 0;
  for (size_t i = 0; i + 1 < gens.size(); ++i) {
    q = std::max(q, gens[i][0] - gens[i + 1][0]);
    p = std::max(p, gens[i + 1][1] - gens[i][1]);
  }
  std::vector<graded_derivation> out;
  out.emplace_back(expvec{0, 0}, qvec{rat(1), rat(0)});
  out.emplace_back(expvec{0, 0}, qvec{rat(0), rat(1)});
  out.emplace_back(expvec{-1, p}, qvec{rat(1), rat(0)});
  out.emplace_back(expvec{q, -1}, qvec{rat(0), rat(1)});
  return staircase_data{p, q, make_module(I.ctx(), std::move(out))};
}

qspace module_piece(const derivation_module& M, const expvec& b) {
  return reachable_span(M.gens, b, M.ctx.n());
}

bool module_contains(const derivation_module& M, const graded_derivation& d) {
  check_dim(M.ctx, d.degree);
  return module_piece(M, d.degree).contains(d.coeffs);
}

bool module_contains(const derivation_module& M, const derivation_module& N) {
  if (M.ctx != N.ctx) throw dimension_mismatch("module contains: different rings");
  for (const auto& g : N.gens)
    if (!module_contains(M, g)) return false;
  return true;
}

bool module_equal(const derivation_module& M, const derivation_module& N) {
  return module_contains(M, N) && module_contains(N, M);
}

derivation_module module_intersect(const derivation_module& M,
                                   const derivation_module& N, int box_margin) {
  if (M.ctx != N.ctx) throw dimension_mismatch("module intersect: different rings");
  const int n = M.ctx.n();
  piece_fn piece = [&M, &N](const expvec& b) {
    return space_intersect(module_piece(M, b), module_piece(N, b));
  };
  expvec sat(n, 0);
  for (const auto& g : M.gens) sat = vec_max(sat, g.degree);
  for (const auto& g : N.gens) sat = vec_max(sat, g.degree);
  expvec box = sat;
  for (int& v : box) v += std::max(1, box_margin);
  derivation_module R = build_module(M.ctx, piece, std::move(box), sat);
  for (const auto& g : R.gens) {
    if (!module_contains(M, g) || !module_contains(N, g))
      throw error("module intersect: generator fails membership check");
  }
  return R;
}

} // namespace liftlog
