#ifndef LIFTLOG_MONOMIAL_IDEAL_HPP
#define LIFTLOG_MONOMIAL_IDEAL_HPP

#include <string>
#include <vector>

#include "liftlog/ring.hpp"

namespace liftlog {

/// A monomial ideal in canonical form: the minimal generators, none dividing
/// another, sorted descending lexicographic.  The empty list is the zero
/// ideal, the single vector (0,...,0) the unit ideal.  Two equal ideals have
/// identical generator lists, so golden tests can compare bit-exactly.
class monomial_ideal {
public:
  monomial_ideal() = default;
  monomial_ideal(ring_context ctx, std::vector<expvec> gens);

  const ring_context& ctx() const { return ctx_; }
  const std::vector<expvec>& min_gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_zero() && !is_unit(); }

  /// componentwise max over min generators; zero vector for zero/unit ideal
  expvec gen_box() const;
  /// largest exponent appearing in any generator
  int max_exponent() const;

  friend bool operator==(const monomial_ideal& a, const monomial_ideal& b) {
    return a.ctx_ == b.ctx_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const monomial_ideal& a, const monomial_ideal& b) {
    return !(a == b);
  }

  std::string str() const;

private:
  ring_context ctx_;
  std::vector<expvec> gens_;
};

monomial_ideal minimalize(const ring_context& ctx, std::vector<expvec> gens);
monomial_ideal zero_ideal(const ring_context& ctx);
monomial_ideal unit_ideal(const ring_context& ctx);
monomial_ideal maximal_ideal(const ring_context& ctx);

bool member(const monomial_ideal& I, const expvec& a);
bool contains(const monomial_ideal& I, const monomial_ideal& J); // J subset of I

monomial_ideal sum(const monomial_ideal& I, const monomial_ideal& J);
monomial_ideal product(const monomial_ideal& I, const monomial_ideal& J);
monomial_ideal power(const monomial_ideal& I, int k);

/// [I : J], intersected over the generators of J; J must be nonzero.
monomial_ideal quotient(const monomial_ideal& I, const monomial_ideal& J);
monomial_ideal intersect(const monomial_ideal& I, const monomial_ideal& J);

/// squarefree support ideal; I must be nonzero
monomial_ideal radical(const monomial_ideal& I);

/// a pure power of every variable among the minimal generators
bool is_m_primary(const monomial_ideal& I);

} // namespace liftlog

#endif
