#include "liftlog/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace liftlog {

numerical_semigroup::numerical_semigroup(std::vector<long long> generators)
    : gens_(std::move(generators)) {
  if (gens_.empty()) throw error("semigroup: need generators");
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  long long g = 0;
  for (long long x : gens_) {
    if (x <= 0) throw error("semigroup: generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw error("semigroup: generators must have gcd 1");

  long long bound = 2 * gens_.front() * gens_.back() + gens_.back() + 2;
  table_.assign(bound + 1, false);
  table_[0] = true;
  for (long long s = 1; s <= bound; ++s)
    for (long long x : gens_) {
      if (s - x >= 0 && table_[s - x]) { table_[s] = true; break; }
    }
  frobenius_ = -1;
  for (long long s = bound; s >= 0; --s)
    if (!table_[s]) { frobenius_ = s; break; }

  for (long long x : gens_) {
    bool composite = false;
    for (long long s = 1; s < x && !composite; ++s)
      if (contains(s) && contains(x - s)) composite = true;
    if (!composite) min_gens_.push_back(x);
  }
}

bool numerical_semigroup::contains(long long s) const {
  if (s < 0) return false;
  if (s >= (long long)table_.size()) return true;
  return table_[s];
}

namespace {

// drop shifts reachable from a smaller one through S
std::vector<long long> minimal_shifts(const numerical_semigroup& S,
                                      std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<long long> kept;
  for (long long e : v) {
    bool covered = false;
    for (long long k : kept)
      if (S.contains(e - k)) { covered = true; break; }
    if (!covered) kept.push_back(e);
  }
  return kept;
}

} // namespace

semigroup_ideal::semigroup_ideal(numerical_semigroup S, std::vector<long long> shifts)
    : S_(std::make_shared<numerical_semigroup>(std::move(S))) {
  for (long long e : shifts)
    if (e < 0) throw error("semigroup ideal: negative shift");
  gens_ = minimal_shifts(*S_, std::move(shifts));
}

bool semigroup_ideal::contains(long long m) const {
  for (long long e : gens_)
    if (S_->contains(m - e)) return true;
  return false;
}

semigroup_ideal sgr_unit_ideal(const numerical_semigroup& S) {
  return semigroup_ideal(S, {0});
}

semigroup_ideal sgr_maximal_ideal(const numerical_semigroup& S) {
  return semigroup_ideal(S, S.min_gens());
}

semigroup_ideal sgr_product(const semigroup_ideal& E, const semigroup_ideal& F) {
  if (!(E.sgr() == F.sgr())) throw error("sgr product: different semigroups");
  std::vector<long long> sums;
  for (long long e : E.gens())
    for (long long f : F.gens()) sums.push_back(e + f);
  return semigroup_ideal(E.sgr(), std::move(sums));
}

semigroup_ideal sgr_power(const semigroup_ideal& E, int k) {
  if (k < 0) throw error("sgr power: negative exponent");
  semigroup_ideal r = sgr_unit_ideal(E.sgr());
  for (int i = 0; i < k; ++i) r = sgr_product(r, E);
  return r;
}

semigroup_ideal sgr_quotient(const semigroup_ideal& E, const semigroup_ideal& F) {
  if (!(E.sgr() == F.sgr())) throw error("sgr quotient: different semigroups");
  if (F.is_zero()) throw error("sgr quotient: empty divisor");
  const numerical_semigroup& S = E.sgr();
  long long max_e = E.gens().empty() ? 0 : E.gens().back();
  long long max_f = F.gens().back();
  long long bound = S.frobenius() + 1 + S.min_gens().back() + max_e + max_f;
  std::vector<long long> members;
  for (long long s = 0; s <= bound; ++s) {
    if (!S.contains(s)) continue;
    bool ok = true;
    for (long long f : F.gens())
      if (!E.contains(s + f)) { ok = false; break; }
    if (ok) members.push_back(s);
  }
  return semigroup_ideal(S, std::move(members));
}

sgr_rr_report sgr_rr_closure(const semigroup_ideal& E, int n_max, int window) {
  if (E.is_zero()) throw error("sgr rr closure: zero ideal");
  if (window < 1 || n_max < window)
    throw error("sgr rr closure: need n_max >= window >= 1");
  std::vector<semigroup_ideal> q;
  semigroup_ideal pw = E;
  int stable_start = -1;
  for (int n = 1; n <= n_max; ++n) {
    semigroup_ideal next = sgr_product(pw, E);
    q.push_back(sgr_quotient(next, pw));
    pw = next;
    if ((int)q.size() >= window) {
      bool flat = true;
      for (int k = (int)q.size() - window; k + 1 < (int)q.size() && flat; ++k)
        if (q[k] != q[k + 1]) flat = false;
      if (flat) { stable_start = n - window + 1; break; }
    }
  }
  if (stable_start < 0)
    throw no_stabilization("sgr rr closure: no stable window up to n_max");
  sgr_rr_report rep;
  rep.closure = q.back();
  rep.stabilized_at = stable_start + window - 1;
  rep.checked_window = window;
  rep.power_check_passed = true;
  for (int m = rep.stabilized_at; m <= rep.stabilized_at + 2; ++m)
    if (sgr_power(rep.closure, m) != sgr_power(E, m)) {
      rep.power_check_passed = false;
      break;
    }
  return rep;
}

bool order_set::contains(long long k) const {
  if (k >= threshold) return true;
  return std::binary_search(members_below_threshold.begin(),
                            members_below_threshold.end(), k);
}

namespace {

order_set collect_orders(const numerical_semigroup& S,
                         const std::function<bool(long long)>& in_K) {
  // every k >= frobenius + 2 passes both the ring and ideal conditions
  long long certain = S.frobenius() + 2;
  long long bound = 2 * certain + S.min_gens().back() + 4;
  std::vector<long long> members;
  for (long long k = 0; k <= bound; ++k)
    if (k >= certain || in_K(k)) members.push_back(k);

  order_set K;
  long long last_gap = -1;
  for (long long k = 0; k <= bound; ++k)
    if (!std::binary_search(members.begin(), members.end(), k)) last_gap = k;
  K.threshold = last_gap + 1;
  for (long long m : members) {
    if (m < K.threshold) K.members_below_threshold.push_back(m);
    bool covered = false;
    for (long long prev : K.min_orders)
      if (S.contains(m - prev)) { covered = true; break; }
    if (!covered) K.min_orders.push_back(m);
  }
  return K;
}

} // namespace

order_set sgr_tangent(const semigroup_ideal& E) {
  if (E.is_zero()) throw error("sgr tangent: zero ideal");
  const numerical_semigroup& S = E.sgr();
  return collect_orders(S, [&](long long k) {
    for (long long s : S.min_gens())
      if (!S.contains(s + k - 1)) return false;
    for (long long e : E.gens())
      if (e > 0 && !E.contains(e + k - 1)) return false;
    return true;
  });
}

order_set sgr_tangent_ring(const numerical_semigroup& S) {
  return collect_orders(S, [&](long long k) {
    for (long long s : S.min_gens())
      if (!S.contains(s + k - 1)) return false;
    return true;
  });
}

bool sgr_is_regular(const numerical_semigroup& S) { return S.contains(1); }

} // namespace liftlog
