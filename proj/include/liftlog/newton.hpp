#ifndef LIFTLOG_NEWTON_HPP
#define LIFTLOG_NEWTON_HPP

#include <vector>

#include "liftlog/monomial_ideal.hpp"

namespace liftlog {

/// One bounding inequality w . a >= d of the Newton polyhedron, with w a
/// primitive nonnegative integer normal and d > 0.  The coordinate
/// inequalities a_i >= 0 are implicit and not listed.
struct newton_facet {
  std::vector<long long> w;
  long long d = 0;

  friend bool operator==(const newton_facet& a, const newton_facet& b) {
    return a.w == b.w && a.d == b.d;
  }
};

/// conv(min generators) + the nonnegative orthant, in facet form.
struct newton_polyhedron {
  ring_context ctx;
  std::vector<newton_facet> facets;

  bool contains(const expvec& a) const {
    if (!all_nonneg(a)) return false;
    for (const auto& f : facets)
      if (dotll(f.w, a) < f.d) return false;
    return true;
  }
};

/// Facet enumeration over exact rationals: a staircase sweep for n = 2,
/// double description on the homogenized cone for n >= 3.  The unit ideal
/// yields no facets; the zero ideal is an error.  max_dim guards runaway
/// inputs (the double description step is exponential in principle).
newton_polyhedron newton_hull(const monomial_ideal& I, int max_dim = 5);

namespace detail {
/// double description route regardless of dimension, for cross-checking the
/// 2-variable sweep
std::vector<newton_facet> facets_by_double_description(
    const ring_context& ctx, const std::vector<expvec>& gens);
}

} // namespace liftlog

#endif
