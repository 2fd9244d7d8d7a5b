#include <doctest.h>

#include "helpers.hpp"
#include "liftlog/parse.hpp"
#include "liftlog/report.hpp"

using namespace lltest;

TEST_CASE("ring and ideal grammar") {
  auto [ctx, I] = parse_ring_and_ideal("ring x, y; x^10, x^8*y, x*y^4, y^5");
  CHECK(ctx.vars == std::vector<std::string>{"x", "y"});
  CHECK(I == mk(ctx, {{10, 0}, {8, 1}, {1, 4}, {0, 5}}));

  auto [c1, J] = parse_ring_and_ideal("ring x; x");
  CHECK(c1.n() == 1);
  CHECK(J.min_gens() == std::vector<expvec>{{1}});

  auto [c2, Z] = parse_ring_and_ideal("ring x,y;");
  CHECK(Z.is_zero());

  auto [c3, W] = parse_ring_and_ideal("ring x,y;  x * x ^ 2 , y");
  CHECK(W == mk(c3, {{3, 0}, {0, 1}}));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_ring_and_ideal("ring x,y; x^-1"), parse_error);
  try {
    parse_ring_and_ideal("ring x,y;\nx^2, z");
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 6);
    CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_ring_and_ideal("x, y"), parse_error);
  CHECK_THROWS_AS(parse_ring_and_ideal("ring x,y; x^0"), parse_error);
  CHECK_THROWS_AS(parse_ring_and_ideal("ring x,x; x"), error);
}

TEST_CASE("map grammar") {
  monomial_map m = parse_monomial_map("y1 = x1; y2 = x1^2*x2");
  CHECK(m.source.vars == std::vector<std::string>{"y1", "y2"});
  CHECK(m.target.vars == std::vector<std::string>{"x1", "x2"});
  CHECK(m.rows == std::vector<expvec>{{1, 0}, {2, 1}});

  monomial_map h = parse_monomial_map("ring a, b -> u, v; a = u; b = u^3*v");
  CHECK(h.rows == std::vector<expvec>{{1, 0}, {3, 1}});

  CHECK_THROWS_AS(parse_monomial_map("y1 = x1*x2; y2 = x1*x2"),
                  singular_exponent_matrix);
  CHECK_THROWS_AS(parse_monomial_map("ring a, b -> u; a = u; b = u"),
                  dimension_mismatch);
}

TEST_CASE("derivation grammar") {
  ring_context ctx = ring2();
  graded_derivation d = parse_derivation(ctx, "y^3*Dx");
  CHECK(d.degree == expvec{-1, 3});
  CHECK(d.coeffs == qvec{rat(1), rat(0)});

  d = parse_derivation(ctx, "x*Dx - y*Dy");
  CHECK(d.degree == expvec{0, 0});
  CHECK(d.coeffs == qvec{rat(1), rat(-1)});

  d = parse_derivation(ctx, "3/2*x*Dx + y*Dy");
  CHECK(d.coeffs == qvec{rat(3, 2), rat(1)});

  CHECK_THROWS_AS(parse_derivation(ctx, "x*Dx + Dy"), parse_error);
  CHECK_THROWS_AS(parse_derivation(ctx, "x*Dz"), parse_error);
}

TEST_CASE("pretty printing round trip") {
  ring_context ctx = ring2();
  derivation_module M = slot_module(ctx, {{{1, 0}, {0, 3}}, {{7, 0}, {0, 1}}});
  CHECK(pretty_module(M) == "(x,y^3)∂x + (x^7,y)∂y");
  graded_derivation e({0, 0}, {rat(1), rat(-1)});
  CHECK(pretty_derivation(ctx, e) == "x∂x - y∂y");
  monomial_ideal I = mk(ctx, {{10, 0}, {8, 1}, {1, 4}, {0, 5}});
  CHECK(I.str() == "(x^10, x^8*y, x*y^4, y^5)");
}

TEST_CASE("integer lists and weights") {
  CHECK(parse_integer_list("4,5,6,7") == std::vector<long long>{4, 5, 6, 7});
  CHECK(parse_weights("4, 9") == std::vector<long long>{4, 9});
  CHECK_THROWS_AS(parse_weights("-1,2"), parse_error);
}

TEST_CASE("garbage input raises cleanly") {
  rng r(81);
  const std::string alphabet = "xy,;^*+-/()123 D\n";
  for (int t = 0; t < 400; ++t) {
    std::string s;
    int len = r.below(24);
    for (int k = 0; k < len; ++k) s += alphabet[r.below((int)alphabet.size())];
    try {
      parse_ring_and_ideal(s);
    } catch (const std::exception&) {
      // any failure must surface as an exception, never a crash
    }
    try {
      parse_derivation(ring2(), s);
    } catch (const std::exception&) {
    }
  }
  CHECK(true);
}

TEST_CASE("rational overflow raises instead of wrapping") {
  rat big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * rat(4), std::overflow_error);
  CHECK_THROWS_AS(rat(1, 0), std::domain_error);
  CHECK((rat(1, 2) + rat(1, 3)).str() == "5/6");
  CHECK(rat(-6, -4).str() == "3/2");
  CHECK(rat(6, -4).str() == "-3/2");
}
