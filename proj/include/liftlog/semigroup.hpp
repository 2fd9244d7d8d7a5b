#ifndef LIFTLOG_SEMIGROUP_HPP
#define LIFTLOG_SEMIGROUP_HPP

#include <memory>
#include <vector>

#include "liftlog/ring.hpp"

namespace liftlog {

/// A cofinite additive submonoid of N, the grading of Q[t^S].  Membership is
/// tabulated through the Frobenius number, so every later scan terminates.
class numerical_semigroup {
public:
  explicit numerical_semigroup(std::vector<long long> generators);

  const std::vector<long long>& raw_gens() const { return gens_; }
  const std::vector<long long>& min_gens() const { return min_gens_; }
  long long frobenius() const { return frobenius_; }
  bool contains(long long s) const;
  long long smallest_positive() const { return min_gens_.front(); }

  friend bool operator==(const numerical_semigroup& a, const numerical_semigroup& b) {
    return a.min_gens_ == b.min_gens_;
  }

private:
  std::vector<long long> gens_;
  std::vector<long long> min_gens_;
  long long frobenius_ = -1;
  std::vector<bool> table_;
};

/// Ideal of S: union of shifts e + S over a canonical minimal shift set
/// (no generator differs from another by an element of S).
class semigroup_ideal {
public:
  semigroup_ideal() = default;
  semigroup_ideal(numerical_semigroup S, std::vector<long long> shifts);

  const numerical_semigroup& sgr() const { return *S_; }
  const std::vector<long long>& gens() const { return gens_; }
  bool contains(long long m) const;
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0] == 0; }

  friend bool operator==(const semigroup_ideal& a, const semigroup_ideal& b) {
    return *a.S_ == *b.S_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const semigroup_ideal& a, const semigroup_ideal& b) {
    return !(a == b);
  }

private:
  std::shared_ptr<const numerical_semigroup> S_;
  std::vector<long long> gens_;
};

semigroup_ideal sgr_unit_ideal(const numerical_semigroup& S);
semigroup_ideal sgr_maximal_ideal(const numerical_semigroup& S);
semigroup_ideal sgr_product(const semigroup_ideal& E, const semigroup_ideal& F);
semigroup_ideal sgr_power(const semigroup_ideal& E, int k);

/// [E : F] = {s in S : s + f in E for all generators f}
semigroup_ideal sgr_quotient(const semigroup_ideal& E, const semigroup_ideal& F);

struct sgr_rr_report {
  semigroup_ideal closure;
  int stabilized_at = 0;
  int checked_window = 0;
  bool power_check_passed = false;
};
sgr_rr_report sgr_rr_closure(const semigroup_ideal& E, int n_max = 20, int window = 2);

/// Order set K of a derivation submodule {sum c_k t^k d/dt : k in K}:
/// S-closed subset of N, canonical minimal orders plus the threshold
/// presentation (every k >= threshold is a member).
struct order_set {
  std::vector<long long> min_orders;
  long long threshold = 0;
  std::vector<long long> members_below_threshold;

  bool contains(long long k) const;
  friend bool operator==(const order_set& a, const order_set& b) {
    return a.min_orders == b.min_orders;
  }
};

/// T_A(E): orders k with t^k d/dt preserving both the ring and the ideal.
/// A generator e imposes e + k - 1 in E only when e > 0; the unit t^0 is
/// killed by every derivation.
order_set sgr_tangent(const semigroup_ideal& E);

/// T_A: the ring condition alone
order_set sgr_tangent_ring(const numerical_semigroup& S);

/// S = N; equivalently some derivation has unit order coefficient at t
bool sgr_is_regular(const numerical_semigroup& S);

} // namespace liftlog

#endif
