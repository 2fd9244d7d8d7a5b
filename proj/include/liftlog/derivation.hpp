#ifndef LIFTLOG_DERIVATION_HPP
#define LIFTLOG_DERIVATION_HPP

#include <functional>
#include <optional>
#include <utility>

#include "liftlog/linalg.hpp"
#include "liftlog/monomial_ideal.hpp"

namespace liftlog {

/// One multigraded derivation sum_i c_i x^{b+e_i} d/dx_i.  The degree b may
/// dip to -1 per coordinate; the support rule forces c_i = 0 whenever the
/// coefficient monomial x^{b+e_i} would have a negative exponent, so the
/// object is always a genuine derivation of the polynomial ring.
struct graded_derivation {
  expvec degree;
  qvec coeffs;

  graded_derivation(expvec b, qvec c);
};

/// apply d to x^a: (c . a, a + b), or nothing when the coefficient vanishes
std::optional<std::pair<rat, expvec>> apply(const graded_derivation& d, const expvec& a);

/// d(I) subset of I, checked on min generators (enough by Leibniz)
bool preserves(const graded_derivation& d, const monomial_ideal& I);

/// zero bracket comes back empty
std::optional<graded_derivation> lie_bracket(const graded_derivation& a,
                                             const graded_derivation& b);

/// Finitely many multigraded generators of a submodule of the free module of
/// derivations.  Canonically ordered; box_max records the degree box the
/// graded sweep covered (the shell just outside certified completeness).
struct derivation_module {
  ring_context ctx;
  std::vector<graded_derivation> gens;
  expvec box_max;
};

/// graded piece of the candidate module at a degree, as a subspace of Q^n
using piece_fn = std::function<qspace(const expvec&)>;

/// Sweep all degrees in [-1, box_max]^n in increasing order, keep a basis of
/// every piece not already spanned by monomial multiples of earlier picks,
/// then certify completeness on the shell one step outside the box and grow
/// the box if certification fails.
///
/// saturation gives per-coordinate bounds S with piece(b) = piece(min(b, T))
/// for every T >= S; the box is raised to at least S - 1 up front, which is
/// what makes the shell certificate conclusive (an undersized box can pass
/// the shell while missing high-degree generators).  LIFTLOG_MAX_DEGREE caps
/// the box.
derivation_module build_module(const ring_context& ctx, const piece_fn& piece,
                               expvec box_max, const expvec& saturation);

derivation_module make_module(const ring_context& ctx,
                              std::vector<graded_derivation> gens);

/// T(I): derivations preserving the ideal
derivation_module tangent_module(const monomial_ideal& I, int box_margin = 1);

/// Closed form for 2-variable m-primary staircases: x dx, y dy, y^p dx,
/// x^q dy with p the largest y-gap and q the largest x-gap between
/// consecutive minimal generators.  Matches the worked values the general
/// algorithm produces; the transposed reading is reported alongside.
struct staircase_data {
  int p = 0;
  int q = 0;
  derivation_module module;
};
staircase_data staircase_T_2var(const monomial_ideal& I);

bool module_contains(const derivation_module& M, const graded_derivation& d);
bool module_contains(const derivation_module& M, const derivation_module& N);
bool module_equal(const derivation_module& M, const derivation_module& N);
derivation_module module_intersect(const derivation_module& M,
                                   const derivation_module& N, int box_margin = 1);

/// graded piece of the module generated by M's generators
qspace module_piece(const derivation_module& M, const expvec& b);

} // namespace liftlog

#endif
