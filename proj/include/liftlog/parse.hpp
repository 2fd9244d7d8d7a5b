#ifndef LIFTLOG_PARSE_HPP
#define LIFTLOG_PARSE_HPP

#include <string>
#include <utility>
#include <vector>

#include "liftlog/chart.hpp"
#include "liftlog/derivation.hpp"
#include "liftlog/monomial_ideal.hpp"

namespace liftlog {

/// Parse failure with 1-based line/column of the offending token.
struct parse_error : error {
  int line;
  int column;
  parse_error(const std::string& what, int l, int c)
      : error(what + " (line " + std::to_string(l) + ", column " +
              std::to_string(c) + ")"),
        line(l), column(c) {}
};

/// `ring x, y; x^10, x^8*y, x*y^4, y^5`
/// ideal ::= gen ("," gen)* ; gen ::= factor ("*" factor)* ;
/// factor ::= var ("^" posint)? ; an empty generator list is the zero ideal.
std::pair<ring_context, monomial_ideal> parse_ring_and_ideal(const std::string& text);

/// generator list only, against an existing ring
monomial_ideal parse_ideal(const ring_context& ctx, const std::string& text);

/// `y1 = x1; y2 = x1^2*x2`, optionally prefixed by explicit ring headers
/// `ring y1, y2 -> x1, x2;`.  Without headers the source ring is read off
/// the left-hand sides and the target ring from first use on the right.
monomial_map parse_monomial_map(const std::string& text);

/// `x^2*Dy` or `3/2*x*Dx + y*Dy`: one graded derivation, every term of the
/// same degree
graded_derivation parse_derivation(const ring_context& ctx, const std::string& text);

std::vector<long long> parse_weights(const std::string& text);
std::vector<long long> parse_integer_list(const std::string& text);

} // namespace liftlog

#endif
