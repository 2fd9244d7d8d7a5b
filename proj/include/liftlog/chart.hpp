#ifndef LIFTLOG_CHART_HPP
#define LIFTLOG_CHART_HPP

#include <vector>

#include "liftlog/derivation.hpp"
#include "liftlog/valuation.hpp"

namespace liftlog {

/// A monomial chart morphism Q[y_1..y_n] -> Q[x_1..x_n], y_i |-> x^{m_i}.
/// The exponent matrix must be invertible over Q, so the map is birational
/// onto its image and derivations lift uniquely to the Laurent ring.
struct monomial_map {
  ring_context source;
  ring_context target;
  std::vector<expvec> rows; // rows[i] = exponent of the image of y_i

  monomial_map(ring_context src, ring_context tgt, std::vector<expvec> exps);
};

/// exact Laurent polynomial: sorted terms, integer exponents of either sign
struct laurent_term {
  rat c;
  std::vector<long long> e;
  friend bool operator==(const laurent_term& a, const laurent_term& b) {
    return a.c == b.c && a.e == b.e;
  }
};
using laurent_poly = std::vector<laurent_term>;
laurent_poly laurent_normalize(laurent_poly p);

/// the lifted derivation on the target Laurent ring, one image per variable
struct laurent_derivation_image {
  ring_context ctx;
  std::vector<laurent_poly> images;
  friend bool operator==(const laurent_derivation_image& a,
                         const laurent_derivation_image& b) {
    return a.ctx == b.ctx && a.images == b.images;
  }
};

/// the weight on the source induced by the critical coordinate x_j: the
/// x_j-exponents of the variable images
weight_valuation induced_weight(const monomial_map& map, int j);

/// true when the induced weight is a standard basis vector; the chart is then
/// unramified along that coordinate and the log constraint is vacuous
bool critical_weight_degenerate(const monomial_map& map, int j);

/// intersection of T(log^w m) over the declared critical coordinates
derivation_module chart_liftable(const monomial_map& map,
                                 const std::vector<int>& critical);

/// unique lift of a graded source derivation through the chart
laurent_derivation_image direct_lift(const monomial_map& map,
                                     const graded_derivation& d);

/// lift of a derivation already given by Laurent images (for composing lifts)
laurent_derivation_image direct_lift(const monomial_map& map,
                                     const laurent_derivation_image& d);

/// no denominators in any critical coordinate, term by term
bool lifts_regularly(const monomial_map& map, const graded_derivation& d,
                     const std::vector<int>& critical);

/// valuation-ring version: every term of every image of x_j has target
/// weight value at least that of x_j
bool lifts_regularly_weighted(const monomial_map& map, const graded_derivation& d,
                              const std::vector<long long>& target_weight);

/// the lifted field is tangent to the critical divisor: images of critical
/// coordinates vanish along them.  Requires lifts_regularly first.
bool tangency_check(const monomial_map& map, const graded_derivation& d,
                    const std::vector<int>& critical);

} // namespace liftlog

#endif
