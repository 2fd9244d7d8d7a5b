#include "liftlog/closures.hpp"

namespace liftlog {

rr_report rr_closure(const monomial_ideal& I, int n_max, int window) {
  if (I.is_zero()) throw zero_ideal_error("rr closure: zero ideal");
  if (window < 1 || n_max < window)
    throw error("rr closure: need n_max >= window >= 1");

  std::vector<monomial_ideal> q; // q[i] = [I^{i+2} : I^{i+1}] at index i = n-1
  monomial_ideal pw = I;         // I^n while iterating
  int stable_start = -1;
  for (int n = 1; n <= n_max; ++n) {
    monomial_ideal next = product(pw, I); // I^{n+1}
    q.push_back(quotient(next, pw));
    pw = next;
    if ((int)q.size() >= window) {
      bool flat = true;
      for (int k = (int)q.size() - window; k + 1 < (int)q.size() && flat; ++k)
        if (!(q[k] == q[k + 1])) flat = false;
      if (flat) { stable_start = n - window + 1; break; }
    }
  }
  if (stable_start < 0)
    throw no_stabilization("rr closure: no stable window up to n_max");

  rr_report rep;
  rep.closure = q.back();
  rep.stabilized_at = stable_start + window - 1;
  rep.checked_window = window;
  rep.power_check_passed = true;
  for (int m = rep.stabilized_at; m <= rep.stabilized_at + 2; ++m) {
    if (!(power(rep.closure, m) == power(I, m))) {
      rep.power_check_passed = false;
      break;
    }
  }
  return rep;
}

namespace {

void scan_box(const newton_polyhedron& np, const expvec& box, expvec& cur, int coord,
              std::vector<expvec>& out) {
  if (coord == (int)box.size()) {
    if (np.contains(cur)) out.push_back(cur);
    return;
  }
  for (int v = 0; v <= box[coord]; ++v) {
    cur[coord] = v;
    scan_box(np, box, cur, coord + 1, out);
  }
}

} // namespace

monomial_ideal integral_closure(const monomial_ideal& I) {
  if (I.is_zero()) throw zero_ideal_error("integral closure: zero ideal");
  newton_polyhedron np = newton_hull(I);
  expvec box = I.gen_box();
  expvec cur(I.ctx().n(), 0);
  std::vector<expvec> pts;
  scan_box(np, box, cur, 0, pts);
  return minimalize(I.ctx(), std::move(pts));
}

bool integral_member_oracle(const monomial_ideal& I, const expvec& a, int k_max) {
  check_dim(I.ctx(), a);
  if (!all_nonneg(a)) throw error("integral oracle: negative exponent");
  monomial_ideal pw = I;
  for (int k = 1; k <= k_max; ++k) {
    expvec ka(a.size());
    for (size_t i = 0; i < a.size(); ++i) ka[i] = k * a[i];
    if (member(pw, ka)) return true;
    if (k < k_max) pw = product(pw, I);
  }
  return false;
}

integral_oracle::integral_oracle(const monomial_ideal& I, int k_max) {
  if (k_max < 1) throw error("integral oracle: k_max must be positive");
  pows_.push_back(I);
  for (int k = 2; k <= k_max; ++k) pows_.push_back(product(pows_.back(), I));
}

bool integral_oracle::member_integral(const expvec& a) const {
  for (size_t k = 1; k <= pows_.size(); ++k) {
    expvec ka(a.size());
    for (size_t i = 0; i < a.size(); ++i) ka[i] = (int)k * a[i];
    if (member(pows_[k - 1], ka)) return true;
  }
  return false;
}

int integral_oracle_kmax(const monomial_ideal& I) {
  int f = 1;
  for (int i = 2; i <= I.ctx().n(); ++i) f *= i;
  return f * std::max(1, I.max_exponent()) * 4;
}

} // namespace liftlog
