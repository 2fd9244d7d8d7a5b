#ifndef LIFTLOG_LINALG_HPP
#define LIFTLOG_LINALG_HPP

#include <vector>

#include "liftlog/rational.hpp"

namespace liftlog {

using qvec = std::vector<rat>;
using qmat = std::vector<qvec>;

/// A subspace of Q^n held as its reduced row echelon basis (pivots strictly
/// increasing, pivot entries 1, pivot columns cleared).  Canonical: equal
/// subspaces have identical bases.
struct qspace {
  int n = 0;
  qmat basis; // RREF rows, no zero rows

  int dim() const { return (int)basis.size(); }
  bool contains(const qvec& v) const;
  bool contains(const qspace& other) const;
  friend bool operator==(const qspace& a, const qspace& b) {
    return a.n == b.n && a.basis == b.basis;
  }
};

/// in-place reduced row echelon form; returns pivot column per row
std::vector<int> rref(qmat& m);

qspace make_space(int n, qmat rows);
qspace full_space(int n, const std::vector<bool>& allowed);
qspace span_sum(const qspace& a, const qspace& b);
qspace space_intersect(const qspace& a, const qspace& b);

/// solution space of {v : rows . v = 0, v_i = 0 for i not allowed}
qspace solve_kernel(int n, const qmat& rows, const std::vector<bool>& allowed);

/// rows of the orthogonal complement (kernel of the row space)
qmat orthogonal_constraints(const qspace& s);

/// scale to integer entries with gcd 1 and positive leading entry
qvec primitive_integer(const qvec& v);

/// exact inverse; empty result if singular
qmat invert(const qmat& m);

} // namespace liftlog

#endif
