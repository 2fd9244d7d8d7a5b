#ifndef LIFTLOG_TEST_HELPERS_HPP
#define LIFTLOG_TEST_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "liftlog/derivation.hpp"
#include "liftlog/monomial_ideal.hpp"

namespace lltest {

using namespace liftlog;

// splitmix64; fixed seeds keep the randomized suites reproducible everywhere
struct rng {
  uint64_t s;
  explicit rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int k) { return (int)(next() % (uint64_t)k); }
};

inline ring_context ring2() { return ring_context({"x", "y"}); }
inline ring_context ring3() { return ring_context({"x", "y", "z"}); }

inline monomial_ideal mk(const ring_context& ctx, std::vector<expvec> gens) {
  return minimalize(ctx, std::move(gens));
}

// nonzero proper random ideal
inline monomial_ideal random_ideal(rng& r, const ring_context& ctx, int max_exp,
                                   int max_gens = 4) {
  while (true) {
    int count = 1 + r.below(max_gens);
    std::vector<expvec> gens;
    for (int k = 0; k < count; ++k) {
      expvec e(ctx.n());
      bool zero = true;
      for (int i = 0; i < ctx.n(); ++i) {
        e[i] = r.below(max_exp + 1);
        if (e[i] > 0) zero = false;
      }
      if (!zero) gens.push_back(std::move(e));
    }
    if (gens.empty()) continue;
    monomial_ideal I = mk(ctx, std::move(gens));
    if (I.is_proper()) return I;
  }
}

inline monomial_ideal random_m_primary(rng& r, const ring_context& ctx, int max_exp) {
  std::vector<expvec> gens;
  for (int i = 0; i < ctx.n(); ++i) {
    expvec e(ctx.n(), 0);
    e[i] = 1 + r.below(max_exp);
    gens.push_back(std::move(e));
  }
  int extra = r.below(3);
  for (int k = 0; k < extra; ++k) {
    expvec e(ctx.n());
    bool zero = true;
    for (int i = 0; i < ctx.n(); ++i) {
      e[i] = r.below(max_exp + 1);
      if (e[i]) zero = false;
    }
    if (!zero) gens.push_back(std::move(e));
  }
  return mk(ctx, std::move(gens));
}

inline monomial_ideal random_squarefree(rng& r, const ring_context& ctx) {
  while (true) {
    int count = 1 + r.below(3);
    std::vector<expvec> gens;
    for (int k = 0; k < count; ++k) {
      expvec e(ctx.n());
      bool zero = true;
      for (int i = 0; i < ctx.n(); ++i) {
        e[i] = r.below(2);
        if (e[i]) zero = false;
      }
      if (!zero) gens.push_back(std::move(e));
    }
    if (gens.empty()) continue;
    monomial_ideal I = mk(ctx, std::move(gens));
    if (I.is_proper()) return I;
  }
}

// random 2-variable m-primary staircase with exponents <= max_exp
inline monomial_ideal random_staircase(rng& r, const ring_context& ctx, int max_exp) {
  int steps = 1 + r.below(4);
  std::vector<int> xs{0}, ys{0};
  for (int k = 0; k < steps; ++k) {
    xs.push_back(1 + r.below(max_exp));
    ys.push_back(1 + r.below(max_exp));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  size_t m = std::min(xs.size(), ys.size());
  std::vector<expvec> gens;
  for (size_t i = 0; i < m; ++i)
    gens.push_back({xs[m - 1 - i], ys[i]});
  return mk(ctx, std::move(gens));
}

// module given slotwise, e.g. (x,y^3)dx + (x^7,y)dy
inline derivation_module slot_module(const ring_context& ctx,
                                     std::vector<std::vector<expvec>> slots) {
  std::vector<graded_derivation> gens;
  for (int i = 0; i < ctx.n(); ++i) {
    for (const auto& mono : slots[i]) {
      expvec b = mono;
      b[i] -= 1;
      qvec c(ctx.n(), rat(0));
      c[i] = rat(1);
      gens.emplace_back(std::move(b), std::move(c));
    }
  }
  return make_module(ctx, std::move(gens));
}

inline graded_derivation slot_derivation(const ring_context& ctx, const expvec& mono,
                                         int slot) {
  expvec b = mono;
  b[slot] -= 1;
  qvec c(ctx.n(), rat(0));
  c[slot] = rat(1);
  return graded_derivation(std::move(b), std::move(c));
}

} // namespace lltest

#endif
