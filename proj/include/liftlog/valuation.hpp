#ifndef LIFTLOG_VALUATION_HPP
#define LIFTLOG_VALUATION_HPP

#include "liftlog/derivation.hpp"
#include "liftlog/newton.hpp"

namespace liftlog {

/// Monomial (weight) valuation: nu(x^a) = w . a, minimum over monomials for
/// polynomials.  Weights are nonnegative and not all zero; zero coordinates
/// are legal (facet normals of non-primary ideals).  Rees valuations carry
/// primitive normals because the hull constructs them that way; induced
/// chart weights keep their exponents as read off the map.
struct weight_valuation {
  ring_context ctx;
  std::vector<long long> w;

  weight_valuation(ring_context c, std::vector<long long> weights);

  friend bool operator==(const weight_valuation& a, const weight_valuation& b) {
    return a.ctx == b.ctx && a.w == b.w;
  }
};

long long value(const weight_valuation& v, const expvec& a);
long long value_ideal(const weight_valuation& v, const monomial_ideal& I);

/// T(log^v I): derivations that never lower the v-value of elements of I.
/// The degree-b piece is everything admissible when w.b >= 0 and zero
/// otherwise, so the module is generated by the monomial derivations
/// x^u d_i with w.u >= w_i and does not depend on the choice of defining
/// ideal; built with the same box/shell machinery as tangent_module.
derivation_module log_module(const weight_valuation& v, const monomial_ideal& I,
                             int box_margin = 1);

/// The divisorial valuations of the normalized blow-up of I, read off as the
/// Newton polyhedron facets; d is the value of the ideal at each.
std::vector<std::pair<weight_valuation, long long>> rees_valuations(
    const monomial_ideal& I);

/// L(I): intersection of T(log^w I) over the Rees valuations of I
derivation_module liftable_module(const monomial_ideal& I);

struct lift_report {
  derivation_module T_I, T_rr, L, T_bar, T_rad;
  std::vector<std::pair<weight_valuation, long long>> rees;
  bool chain_ok = false;
  bool uniformly_ramified = false;
  bool differentially_ramified = false;
};

/// The closure sandwich T(I), T(rr), L, T(integral), T(radical) with the
/// inclusion chain and the two ramification classifiers.  Uniform
/// ramification is read on monomial generating sets: every minimal generator
/// of radical(I) has the same value at each Rees valuation.
lift_report sandwich_report(const monomial_ideal& I);

} // namespace liftlog

#endif
