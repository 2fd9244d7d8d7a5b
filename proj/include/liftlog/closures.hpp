#ifndef LIFTLOG_CLOSURES_HPP
#define LIFTLOG_CLOSURES_HPP

#include "liftlog/monomial_ideal.hpp"
#include "liftlog/newton.hpp"

namespace liftlog {

/// Result of the stabilizing colon iteration [I^{n+1} : I^n].  stabilized_at
/// is the last index of the detected stability window; the power check then
/// compares closure^m against I^m for m = stabilized_at .. stabilized_at+2,
/// which is the property characterizing the closure.
struct rr_report {
  monomial_ideal closure;
  int stabilized_at = 0;
  int checked_window = 0;
  bool power_check_passed = false;
};

/// Ratliff-Rush closure by colon iteration.  Throws no_stabilization when
/// n_max is hit; the closure exists, the bound was just too small.
rr_report rr_closure(const monomial_ideal& I, int n_max = 20, int window = 2);

/// Integral closure: all lattice points of the Newton polyhedron inside the
/// generator bounding box, minimalized.  The box suffices: a minimal
/// generator exceeding it in some coordinate would stay in the polyhedron
/// after dropping that coordinate by one, contradicting minimality.
monomial_ideal integral_closure(const monomial_ideal& I);

/// Power-membership cross-check: x^a integral over I iff x^{ka} lies in I^k
/// for some k.  Advisory oracle only, never the production path.
bool integral_member_oracle(const monomial_ideal& I, const expvec& a, int k_max);

/// Same oracle with the powers of I computed once, for scanning many points.
class integral_oracle {
public:
  integral_oracle(const monomial_ideal& I, int k_max);
  bool member_integral(const expvec& a) const;

private:
  std::vector<monomial_ideal> pows_;
};

/// Default oracle depth used by the randomized agreement suites.
int integral_oracle_kmax(const monomial_ideal& I);

} // namespace liftlog

#endif
