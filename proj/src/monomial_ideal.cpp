#include "liftlog/monomial_ideal.hpp"

#include <algorithm>

namespace liftlog {

monomial_ideal::monomial_ideal(ring_context ctx, std::vector<expvec> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    check_dim(ctx_, g);
    if (!all_nonneg(g)) throw error("monomial ideal: negative exponent");
  }
}

bool monomial_ideal::is_unit() const {
  return gens_.size() == 1 &&
         std::all_of(gens_[0].begin(), gens_[0].end(), [](int e) { return e == 0; });
}

expvec monomial_ideal::gen_box() const {
  expvec box(ctx_.n(), 0);
  for (const auto& g : gens_) box = vec_max(box, g);
  return box;
}

int monomial_ideal::max_exponent() const {
  int d = 0;
  for (const auto& g : gens_)
    for (int e : g) d = std::max(d, e);
  return d;
}

std::string monomial_ideal::str() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  for (size_t k = 0; k < gens_.size(); ++k) {
    if (k) s += ", ";
    bool any = false;
    for (int i = 0; i < ctx_.n(); ++i) {
      int e = gens_[k][i];
      if (e == 0) continue;
      if (any) s += "*";
      s += ctx_.vars[i];
      if (e > 1) s += "^" + std::to_string(e);
      any = true;
    }
    if (!any) s += "1";
  }
  return s + ")";
}

monomial_ideal minimalize(const ring_context& ctx, std::vector<expvec> gens) {
  for (const auto& g : gens) {
    check_dim(ctx, g);
    if (!all_nonneg(g)) throw error("minimalize: negative exponent");
  }
  std::sort(gens.begin(), gens.end(), lex_greater);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<expvec> kept;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < gens.size() && !dominated; ++j)
      if (j != i && divides(gens[j], gens[i])) dominated = true;
    if (!dominated) kept.push_back(gens[i]);
  }
  return monomial_ideal(ctx, std::move(kept));
}

monomial_ideal zero_ideal(const ring_context& ctx) { return monomial_ideal(ctx, {}); }

monomial_ideal unit_ideal(const ring_context& ctx) {
  return monomial_ideal(ctx, {expvec(ctx.n(), 0)});
}

monomial_ideal maximal_ideal(const ring_context& ctx) {
  std::vector<expvec> gens;
  for (int i = 0; i < ctx.n(); ++i) {
    expvec e(ctx.n(), 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return minimalize(ctx, gens);
}

bool member(const monomial_ideal& I, const expvec& a) {
  check_dim(I.ctx(), a);
  if (!all_nonneg(a)) throw error("member: negative exponent");
  for (const auto& g : I.min_gens())
    if (divides(g, a)) return true;
  return false;
}

bool contains(const monomial_ideal& I, const monomial_ideal& J) {
  if (I.ctx() != J.ctx()) throw dimension_mismatch("contains: different rings");
  for (const auto& g : J.min_gens())
    if (!member(I, g)) return false;
  return true;
}

monomial_ideal sum(const monomial_ideal& I, const monomial_ideal& J) {
  if (I.ctx() != J.ctx()) throw dimension_mismatch("sum: different rings");
  std::vector<expvec> gens = I.min_gens();
  gens.insert(gens.end(), J.min_gens().begin(), J.min_gens().end());
  return minimalize(I.ctx(), std::move(gens));
}

monomial_ideal product(const monomial_ideal& I, const monomial_ideal& J) {
  if (I.ctx() != J.ctx()) throw dimension_mismatch("product: different rings");
  std::vector<expvec> gens;
  for (const auto& a : I.min_gens())
    for (const auto& b : J.min_gens()) gens.push_back(vec_add(a, b));
  return minimalize(I.ctx(), std::move(gens));
}

monomial_ideal power(const monomial_ideal& I, int k) {
  if (k < 0) throw error("power: negative exponent");
  monomial_ideal r = unit_ideal(I.ctx());
  for (int i = 0; i < k; ++i) r = product(r, I);
  return r;
}

monomial_ideal quotient(const monomial_ideal& I, const monomial_ideal& J) {
  if (I.ctx() != J.ctx()) throw dimension_mismatch("quotient: different rings");
  if (J.is_zero()) throw zero_ideal_error("quotient: zero divisor ideal");
  bool first = true;
  monomial_ideal result;
  for (const auto& g : J.min_gens()) {
    std::vector<expvec> shifted;
    for (const auto& m : I.min_gens()) shifted.push_back(vec_sub_clamped(m, g));
    monomial_ideal part = minimalize(I.ctx(), std::move(shifted));
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

monomial_ideal intersect(const monomial_ideal& I, const monomial_ideal& J) {
  if (I.ctx() != J.ctx()) throw dimension_mismatch("intersect: different rings");
  std::vector<expvec> gens;
  for (const auto& a : I.min_gens())
    for (const auto& b : J.min_gens()) gens.push_back(vec_max(a, b));
  return minimalize(I.ctx(), std::move(gens));
}

monomial_ideal radical(const monomial_ideal& I) {
  if (I.is_zero()) throw zero_ideal_error("radical: zero ideal");
  std::vector<expvec> gens;
  for (const auto& g : I.min_gens()) {
    expvec s(g.size());
    for (size_t i = 0; i < g.size(); ++i) s[i] = g[i] > 0 ? 1 : 0;
    gens.push_back(s);
  }
  return minimalize(I.ctx(), std::move(gens));
}

bool is_m_primary(const monomial_ideal& I) {
  for (int i = 0; i < I.ctx().n(); ++i) {
    bool found = false;
    for (const auto& g : I.min_gens()) {
      if (g[i] == 0) continue;
      bool pure = true;
      for (int j = 0; j < I.ctx().n(); ++j)
        if (j != i && g[j] != 0) pure = false;
      if (pure) { found = true; break; }
    }
    if (!found) return false;
  }
  return true;
}

} // namespace liftlog
