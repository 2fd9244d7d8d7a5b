#include <doctest.h>

#include "helpers.hpp"
#include "liftlog/closures.hpp"
#include "liftlog/newton.hpp"

using namespace lltest;

TEST_CASE("two-variable facets") {
  ring_context ctx = ring2();
  auto np = newton_hull(mk(ctx, {{1, 0}, {0, 2}}));
  REQUIRE(np.facets.size() == 1);
  CHECK(np.facets[0].w == std::vector<long long>{2, 1});
  CHECK(np.facets[0].d == 2);

  np = newton_hull(maximal_ideal(ctx));
  REQUIRE(np.facets.size() == 1);
  CHECK(np.facets[0].w == std::vector<long long>{1, 1});
  CHECK(np.facets[0].d == 1);

  for (int n = 1; n <= 4; ++n) {
    np = newton_hull(mk(ctx, {{n, 0}, {0, 1}}));
    REQUIRE(np.facets.size() == 1);
    CHECK(np.facets[0].w == std::vector<long long>{1, n});
    CHECK(np.facets[0].d == n);
  }
}

TEST_CASE("coordinate facets appear when no generator touches an axis") {
  ring_context ctx = ring2();
  auto np = newton_hull(mk(ctx, {{3, 0}, {2, 1}}));
  REQUIRE(np.facets.size() == 2);
  CHECK(np.facets[0].w == std::vector<long long>{1, 0});
  CHECK(np.facets[0].d == 2);
  CHECK(np.facets[1].w == std::vector<long long>{1, 1});
  CHECK(np.facets[1].d == 3);
}

TEST_CASE("degenerate ideals") {
  ring_context ctx = ring2();
  CHECK(newton_hull(unit_ideal(ctx)).facets.empty());
  CHECK_THROWS_AS(newton_hull(zero_ideal(ctx)), zero_ideal_error);
  ring_context t({"t"});
  auto np = newton_hull(mk(t, {{4}, {5}}));
  REQUIRE(np.facets.size() == 1);
  CHECK(np.facets[0].w == std::vector<long long>{1});
  CHECK(np.facets[0].d == 4);
}

TEST_CASE("three variables by double description") {
  ring_context ctx = ring3();
  auto np = newton_hull(mk(ctx, {{2, 1, 0}, {0, 0, 1}}));
  REQUIRE(np.facets.size() == 2);
  CHECK(np.facets[0].w == std::vector<long long>{0, 1, 1});
  CHECK(np.facets[0].d == 1);
  CHECK(np.facets[1].w == std::vector<long long>{1, 0, 2});
  CHECK(np.facets[1].d == 2);

  np = newton_hull(maximal_ideal(ctx));
  REQUIRE(np.facets.size() == 1);
  CHECK(np.facets[0].w == std::vector<long long>{1, 1, 1});
}

TEST_CASE("sweep and double description agree in two variables") {
  ring_context ctx = ring2();
  rng r(21);
  for (int t = 0; t < 60; ++t) {
    monomial_ideal I = random_ideal(r, ctx, 9);
    auto np = newton_hull(I);
    auto dd = liftlog::detail::facets_by_double_description(ctx, I.min_gens());
    CHECK(np.facets == dd);
  }
}

TEST_CASE("facets are valid and tight on random ideals") {
  rng r(22);
  for (int t = 0; t < 40; ++t) {
    ring_context ctx = t % 2 ? ring3() : ring2();
    monomial_ideal I = random_ideal(r, ctx, 6);
    auto np = newton_hull(I); // construction itself asserts the invariants
    for (const auto& g : I.min_gens()) CHECK(np.contains(g));
  }
}

TEST_CASE("dimension cap is configurable") {
  ring_context big({"a", "b", "c", "d", "e", "f"});
  monomial_ideal I = mk(big, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
                              {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
                              {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
  CHECK_THROWS_AS(newton_hull(I), error);
  auto np = newton_hull(I, 6);
  REQUIRE(np.facets.size() == 1);
  CHECK(np.facets[0].w == std::vector<long long>(6, 1));
}

TEST_CASE("four and five variable hulls stay consistent") {
  ring_context c4({"x", "y", "z", "w"});
  // simplex: single facet
  auto np = newton_hull(maximal_ideal(c4));
  REQUIRE(np.facets.size() == 1);
  CHECK(np.facets[0].w == std::vector<long long>(4, 1));
  CHECK(np.facets[0].d == 1);

  // product of two plane staircases: facets split by block
  monomial_ideal I = mk(c4, {{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
  np = newton_hull(I);
  for (const auto& g : I.min_gens()) CHECK(np.contains(g));
  CHECK_FALSE(np.contains({1, 0, 0, 0}));
  CHECK(np.contains({2, 0, 0, 0}));
  CHECK(np.contains({1, 1, 0, 0})); // hull midpoint territory

  ring_context c5({"a", "b", "c", "d", "e"});
  monomial_ideal J = mk(c5, {{2, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 2, 0, 0},
                             {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}, {1, 1, 0, 0, 0}});
  np = newton_hull(J);
  REQUIRE(np.facets.size() == 1);
  CHECK(np.facets[0].w == std::vector<long long>(5, 1));
  CHECK(np.facets[0].d == 2);
}

TEST_CASE("hull agrees with the power oracle in four variables") {
  ring_context c4({"x", "y", "z", "w"});
  rng r(23);
  for (int t = 0; t < 6; ++t) {
    monomial_ideal I = random_ideal(r, c4, 3);
    auto np = newton_hull(I);
    integral_oracle oracle(I, 24);
    expvec box = I.gen_box();
    expvec cur(4, 0);
    std::function<void(int)> scan = [&](int i) {
      if (i == 4) {
        // power membership certifies polyhedron membership exactly; in the
        // other direction a k <= 24 witness must stay inside the hull
        if (oracle.member_integral(cur)) CHECK(np.contains(cur));
        return;
      }
      for (int v = 0; v <= box[i]; ++v) {
        cur[i] = v;
        scan(i + 1);
      }
    };
    scan(0);
    monomial_ideal bar = integral_closure(I);
    CHECK(integral_closure(bar) == bar);
    for (const auto& g : bar.min_gens()) CHECK(oracle.member_integral(g));
  }
}
