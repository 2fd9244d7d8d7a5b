#ifndef LIFTLOG_RING_HPP
#define LIFTLOG_RING_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace liftlog {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct dimension_mismatch : error { using error::error; };
struct zero_ideal_error : error { using error::error; };
struct no_stabilization : error { using error::error; };
struct not_m_primary : error { using error::error; };
struct not_two_variables : error { using error::error; };
struct zero_weight : error { using error::error; };
struct singular_exponent_matrix : error { using error::error; };
struct not_liftable : error { using error::error; };

/// The ambient polynomial ring Q[x_1,...,x_n]: an ordered list of distinct
/// variable names.  Everything downstream carries one of these by value.
struct ring_context {
  std::vector<std::string> vars;

  ring_context() = default;
  explicit ring_context(std::vector<std::string> names) : vars(std::move(names)) {
    if (vars.empty()) throw error("ring: need at least one variable");
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size()) throw error("ring: duplicate variable name");
  }

  int n() const { return (int)vars.size(); }

  friend bool operator==(const ring_context& a, const ring_context& b) {
    return a.vars == b.vars;
  }
  friend bool operator!=(const ring_context& a, const ring_context& b) {
    return !(a == b);
  }
};

/// Exponent vectors double as monomial exponents (entries >= 0) and as
/// multigraded degrees (entries >= -1).
using expvec = std::vector<int>;

inline void check_dim(const ring_context& ctx, const expvec& a) {
  if ((int)a.size() != ctx.n())
    throw dimension_mismatch("exponent vector length does not match ring");
}

inline bool all_nonneg(const expvec& a) {
  return std::all_of(a.begin(), a.end(), [](int e) { return e >= 0; });
}

// componentwise a <= b
inline bool divides(const expvec& a, const expvec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline expvec vec_add(const expvec& a, const expvec& b) {
  expvec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// max(a - b, 0) componentwise
inline expvec vec_sub_clamped(const expvec& a, const expvec& b) {
  expvec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i] - b[i], 0);
  return r;
}

inline expvec vec_max(const expvec& a, const expvec& b) {
  expvec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline long long dotll(const std::vector<long long>& w, const expvec& a) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += w[i] * (long long)a[i];
  return s;
}

// descending lexicographic, the canonical generator order
inline bool lex_greater(const expvec& a, const expvec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

inline bool lex_less(const expvec& a, const expvec& b) { return lex_greater(b, a); }

} // namespace liftlog

#endif
