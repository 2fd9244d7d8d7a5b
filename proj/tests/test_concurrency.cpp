#include <doctest.h>

#include <thread>

#include "helpers.hpp"
#include "liftlog/valuation.hpp"

using namespace lltest;

TEST_CASE("shared immutable values are safe across threads") {
  ring_context ctx = ring2();
  monomial_ideal I = mk(ctx, {{10, 0}, {8, 1}, {1, 4}, {0, 5}});
  lift_report serial = sandwich_report(I);

  std::vector<std::thread> pool;
  std::vector<bool> agree(4, false);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      lift_report rep = sandwich_report(I);
      agree[t] = module_equal(rep.L, serial.L) &&
                 module_equal(rep.T_rr, serial.T_rr) &&
                 rep.chain_ok == serial.chain_ok;
    });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < 4; ++t) CHECK(agree[t]);
}
