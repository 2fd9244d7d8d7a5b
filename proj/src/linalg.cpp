#include "liftlog/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace liftlog {

std::vector<int> rref(qmat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = (int)m[0].size();
  int row = 0;
  for (int col = 0; col < cols && row < (int)m.size(); ++col) {
    int sel = -1;
    for (int r = row; r < (int)m.size(); ++r)
      if (!m[r][col].is_zero()) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    rat inv = rat(1) / m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] *= inv;
    for (int r = 0; r < (int)m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      rat f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

bool qspace::contains(const qvec& v) const {
  qvec r = v;
  for (const auto& b : basis) {
    int p = 0;
    while (p < n && b[p].is_zero()) ++p;
    if (p == n) continue;
    if (!r[p].is_zero()) {
      rat f = r[p];
      for (int c = 0; c < n; ++c) r[c] -= f * b[c];
    }
  }
  return std::all_of(r.begin(), r.end(), [](const rat& x) { return x.is_zero(); });
}

bool qspace::contains(const qspace& other) const {
  for (const auto& b : other.basis)
    if (!contains(b)) return false;
  return true;
}

qspace make_space(int n, qmat rows) {
  rref(rows);
  return qspace{n, std::move(rows)};
}

qspace full_space(int n, const std::vector<bool>& allowed) {
  qmat rows;
  for (int i = 0; i < n; ++i) {
    if (!allowed[i]) continue;
    qvec e(n, rat(0));
    e[i] = rat(1);
    rows.push_back(std::move(e));
  }
  return qspace{n, std::move(rows)};
}

qspace span_sum(const qspace& a, const qspace& b) {
  qmat rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return make_space(a.n, std::move(rows));
}

qmat orthogonal_constraints(const qspace& s) {
  // kernel of the basis-as-matrix: one constraint row per free column
  qmat m = s.basis;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(s.n, false);
  for (int p : pivots) is_pivot[p] = true;
  qmat out;
  for (int f = 0; f < s.n; ++f) {
    if (is_pivot[f]) continue;
    qvec v(s.n, rat(0));
    v[f] = rat(1);
    for (size_t r = 0; r < m.size(); ++r) v[pivots[r]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

qspace space_intersect(const qspace& a, const qspace& b) {
  qmat cons = orthogonal_constraints(a);
  qmat cb = orthogonal_constraints(b);
  cons.insert(cons.end(), cb.begin(), cb.end());
  std::vector<bool> allowed(a.n, true);
  return solve_kernel(a.n, cons, allowed);
}

qspace solve_kernel(int n, const qmat& rows, const std::vector<bool>& allowed) {
  std::vector<int> cols;
  for (int i = 0; i < n; ++i)
    if (allowed[i]) cols.push_back(i);
  if (cols.empty()) return qspace{n, {}};
  qmat m;
  for (const auto& r : rows) {
    qvec rr(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) rr[c] = r[cols[c]];
    m.push_back(std::move(rr));
  }
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols.size(), false);
  for (int p : pivots) is_pivot[p] = true;
  qmat out;
  for (size_t f = 0; f < cols.size(); ++f) {
    if (is_pivot[f]) continue;
    qvec v(n, rat(0));
    v[cols[f]] = rat(1);
    for (size_t r = 0; r < m.size(); ++r) v[cols[pivots[r]]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return make_space(n, std::move(out));
}

qvec primitive_integer(const qvec& v) {
  long long l = 1;
  for (const auto& x : v) l = std::lcm(l, x.den());
  std::vector<long long> ints;
  long long g = 0;
  for (const auto& x : v) {
    long long val = x.num() * (l / x.den());
    ints.push_back(val);
    g = std::gcd(g, val);
  }
  if (g == 0) g = 1;
  int lead = 0;
  for (long long val : ints) {
    if (val != 0) { lead = val > 0 ? 1 : -1; break; }
  }
  if (lead == 0) lead = 1;
  qvec out;
  for (long long val : ints) out.push_back(rat(val / g * lead));
  return out;
}

qmat invert(const qmat& m) {
  const int n = (int)m.size();
  qmat aug = m;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i].push_back(rat(i == j ? 1 : 0));
  }
  std::vector<int> pivots = rref(aug);
  for (int i = 0; i < n; ++i) {
    if (i >= (int)pivots.size() || pivots[i] != i) return {};
  }
  qmat inv(n, qvec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

} // namespace liftlog
