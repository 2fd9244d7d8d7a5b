#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "liftlog/report.hpp"

using namespace lltest;

TEST_CASE("module builder grows an undersized box until the shell certifies") {
  ring_context ctx = ring2();
  monomial_ideal I = mk(ctx, {{10, 0}, {8, 1}, {1, 4}, {0, 5}});
  piece_fn piece = [&I](const expvec& b) {
    std::vector<bool> allowed(2);
    allowed[0] = b[0] >= -1 && b[1] >= 0;
    allowed[1] = b[1] >= -1 && b[0] >= 0;
    qmat rows;
    for (const auto& a : I.min_gens()) {
      expvec ab = vec_add(a, b);
      if (!all_nonneg(ab) || member(I, ab)) continue;
      rows.push_back({rat(a[0]), rat(a[1])});
    }
    return solve_kernel(2, rows, allowed);
  };
  // deliberately undersized box: the saturation floor must raise it, since
  // a (1,1) box would pass the shell while missing x^7 dy at degree (7,-1)
  derivation_module M = build_module(ctx, piece, {1, 1}, I.gen_box());
  CHECK(module_equal(M, tangent_module(I)));
  CHECK(M.box_max[0] >= 9);
}

TEST_CASE("degree cap guards runaway boxes") {
  ring_context ctx = ring2();
  setenv("LIFTLOG_MAX_DEGREE", "8", 1);
  monomial_ideal I = mk(ctx, {{10, 0}, {8, 1}, {1, 4}, {0, 5}});
  CHECK_THROWS_AS(tangent_module(I), error);
  CHECK_NOTHROW(tangent_module(maximal_ideal(ctx)));
  unsetenv("LIFTLOG_MAX_DEGREE");
  CHECK_NOTHROW(tangent_module(I));
}

TEST_CASE("reports round-trip through json") {
  ring_context ctx = ring2();
  report rep;
  rep.command = "der module";
  rep.ring = {"x", "y"};
  rep.inputs["I"] = "(x, y)";
  rep.outputs["module"] = module_json(tangent_module(maximal_ideal(ctx)));
  rep.citations = {"blow-up-thm"};
  ojson j = rep.to_json();
  ojson back = ojson::parse(j.dump(2));
  CHECK(back.dump(2) == j.dump(2));
  CHECK(back["outputs"]["module"]["pretty"] ==
        "(x,y)∂x + (x,y)∂y");
}
