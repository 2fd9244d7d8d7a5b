#include <doctest.h>

#include "helpers.hpp"
#include "liftlog/closures.hpp"

using namespace lltest;

namespace {
monomial_ideal running_ideal(const ring_context& ctx) {
  return mk(ctx, {{10, 0}, {8, 1}, {1, 4}, {0, 5}});
}
} // namespace

TEST_CASE("ratliff-rush closure of the running example") {
  ring_context ctx = ring2();
  rr_report r = rr_closure(running_ideal(ctx));
  CHECK(r.closure == mk(ctx, {{10, 0}, {8, 1}, {7, 2}, {6, 3}, {1, 4}, {0, 5}}));
  CHECK(r.stabilized_at >= 1);
  CHECK(r.power_check_passed);
}

TEST_CASE("radical ideals are ratliff-rush closed") {
  ring_context ctx = ring2();
  rr_report r = rr_closure(maximal_ideal(ctx));
  CHECK(r.closure == maximal_ideal(ctx));
  CHECK(r.power_check_passed);
}

TEST_CASE("immediate stabilization") {
  ring_context ctx = ring2();
  monomial_ideal I = mk(ctx, {{2, 0}, {1, 1}});
  rr_report r = rr_closure(I);
  CHECK(r.closure == I);
}

TEST_CASE("no stabilization inside a tiny bound raises") {
  ring_context ctx = ring2();
  CHECK_THROWS_AS(rr_closure(running_ideal(ctx), 1, 2), error);
}

TEST_CASE("integral closure of the running example") {
  ring_context ctx = ring2();
  CHECK(integral_closure(running_ideal(ctx)) ==
        mk(ctx, {{10, 0}, {8, 1}, {6, 2}, {4, 3}, {1, 4}, {0, 5}}));
  CHECK(integral_closure(maximal_ideal(ctx)) == maximal_ideal(ctx));
  CHECK(integral_closure(mk(ctx, {{2, 0}, {0, 2}})) ==
        mk(ctx, {{2, 0}, {1, 1}, {0, 2}}));
}

TEST_CASE("power-membership oracle") {
  ring_context ctx = ring2();
  CHECK(integral_member_oracle(mk(ctx, {{2, 0}, {0, 2}}), {1, 1}, 2));
  CHECK_FALSE(integral_member_oracle(maximal_ideal(ctx), {0, 0}, 6));
  CHECK(integral_member_oracle(running_ideal(ctx), {6, 2}, 8));
}

TEST_CASE("closure chain I in rr in integral in radical") {
  rng r(31);
  for (int t = 0; t < 25; ++t) {
    ring_context ctx = t % 2 ? ring3() : ring2();
    monomial_ideal I = random_ideal(r, ctx, 5);
    rr_report rr = rr_closure(I);
    monomial_ideal bar = integral_closure(I);
    CHECK(contains(rr.closure, I));
    CHECK(contains(bar, rr.closure));
    CHECK(contains(radical(I), bar));
  }
}

TEST_CASE("closures are idempotent") {
  rng r(32);
  for (int t = 0; t < 15; ++t) {
    ring_context ctx = ring2();
    monomial_ideal I = random_ideal(r, ctx, 5);
    rr_report rr = rr_closure(I);
    if (rr.power_check_passed) CHECK(rr_closure(rr.closure).closure == rr.closure);
    monomial_ideal bar = integral_closure(I);
    CHECK(integral_closure(bar) == bar);
  }
}

TEST_CASE("oracle agrees with the polyhedron on the generator box") {
  rng r(33);
  for (int t = 0; t < 8; ++t) {
    ring_context ctx = t % 2 ? ring3() : ring2();
    monomial_ideal I = random_ideal(r, ctx, 6);
    monomial_ideal bar = integral_closure(I);
    integral_oracle oracle(I, integral_oracle_kmax(I));
    expvec box = I.gen_box();
    expvec cur(ctx.n(), 0);
    std::function<void(int)> scan = [&](int i) {
      if (i == ctx.n()) {
        CHECK(member(bar, cur) == oracle.member_integral(cur));
        return;
      }
      for (int v = 0; v <= box[i]; ++v) {
        cur[i] = v;
        scan(i + 1);
      }
    };
    scan(0);
  }
}
