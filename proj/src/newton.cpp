#include "liftlog/newton.hpp"

#include <algorithm>
#include <numeric>

#include "liftlog/linalg.hpp"

namespace liftlog {

namespace {

using ray = std::vector<long long>; // point of Z^{n+1}, primitive

void make_primitive(ray& y) {
  long long g = 0;
  for (long long v : y) g = std::gcd(g, v);
  if (g > 1)
    for (long long& v : y) v /= g;
}

long long dot(const ray& a, const ray& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// exact rank over Q via fraction-free elimination
int rank_of(std::vector<ray> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : (int)rows[0].size();
  for (int col = 0; col < cols && rank < (int)rows.size(); ++col) {
    int sel = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (rows[r][col] != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    for (int r = rank + 1; r < (int)rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      long long a = rows[rank][col], b = rows[r][col];
      long long g = std::gcd(a, b);
      long long fa = b / g, fb = a / g;
      for (int c = col; c < cols; ++c) rows[r][c] = rows[r][c] * fb - rows[rank][c] * fa;
      make_primitive(rows[r]);
    }
    ++rank;
  }
  return rank;
}

// Extreme rays of {y : c . y >= 0 for all c in constraints} by incremental
// double description; the constraint set must have full rank (pointed dual).
std::vector<ray> dual_extreme_rays(const std::vector<ray>& constraints) {
  const int dim = (int)constraints[0].size();

  // greedy full-rank starting basis
  std::vector<int> basis;
  std::vector<ray> picked;
  for (int i = 0; i < (int)constraints.size() && (int)basis.size() < dim; ++i) {
    picked.push_back(constraints[i]);
    if (rank_of(picked) == (int)picked.size())
      basis.push_back(i);
    else
      picked.pop_back();
  }
  if ((int)basis.size() != dim)
    throw error("newton hull: constraint set not full rank");

  // rays of the simplicial cone from the basis: columns of the inverse,
  // cleared to integers (solve B y_k = e_k by Cramer-style elimination
  // over rationals, then scale primitive)
  qmat B(dim, qvec(dim));
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) B[r][c] = rat(constraints[basis[r]][c]);
  qmat Binv = invert(B);
  if (Binv.empty()) throw error("newton hull: singular starting basis");
  std::vector<ray> rays;
  for (int k = 0; k < dim; ++k) {
    // column k of the inverse: the ray with c_basis[j] . y = delta_jk, so the
    // orientation is already right and must not be flipped when scaling
    long long l = 1;
    for (int r = 0; r < dim; ++r) l = std::lcm(l, Binv[r][k].den());
    ray y(dim);
    for (int r = 0; r < dim; ++r) y[r] = Binv[r][k].num() * (l / Binv[r][k].den());
    make_primitive(y);
    rays.push_back(std::move(y));
  }

  std::vector<int> processed = basis;
  auto zero_set = [&](const ray& y) {
    std::vector<int> z;
    for (int idx : processed)
      if (dot(constraints[idx], y) == 0) z.push_back(idx);
    return z;
  };

  for (int t = 0; t < (int)constraints.size(); ++t) {
    if (std::find(processed.begin(), processed.end(), t) != processed.end()) continue;
    const ray& con = constraints[t];
    std::vector<long long> s(rays.size());
    bool any_neg = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(con, rays[i]);
      if (s[i] < 0) any_neg = true;
    }
    processed.push_back(t);
    if (!any_neg) continue;

    std::vector<std::vector<int>> zsets(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) zsets[i] = zero_set(rays[i]);

    std::vector<ray> next;
    for (size_t i = 0; i < rays.size(); ++i)
      if (s[i] >= 0) next.push_back(rays[i]);

    for (size_t i = 0; i < rays.size(); ++i) {
      if (s[i] <= 0) continue;
      for (size_t j = 0; j < rays.size(); ++j) {
        if (s[j] >= 0) continue;
        std::vector<int> common_z;
        std::set_intersection(zsets[i].begin(), zsets[i].end(), zsets[j].begin(),
                              zsets[j].end(), std::back_inserter(common_z));
        bool adjacent = true;
        for (size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == i || k == j) continue;
          if (std::includes(zsets[k].begin(), zsets[k].end(), common_z.begin(), common_z.end()))
            adjacent = false;
        }
        if (!adjacent) continue;
        ray z(dim);
        for (int c = 0; c < dim; ++c) z[c] = s[i] * rays[j][c] - s[j] * rays[i][c];
        make_primitive(z);
        if (std::find(next.begin(), next.end(), z) == next.end()) next.push_back(z);
      }
    }
    rays = std::move(next);
  }
  return rays;
}

std::vector<newton_facet> facets_2d(const std::vector<expvec>& gens) {
  std::vector<std::pair<long long, long long>> pts;
  for (const auto& g : gens) pts.push_back({g[0], g[1]});
  std::sort(pts.begin(), pts.end());

  // lower hull, interior above
  std::vector<std::pair<long long, long long>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      auto& o = hull[hull.size() - 2];
      auto& a = hull[hull.size() - 1];
      long long cross = (a.first - o.first) * (p.second - o.second) -
                        (a.second - o.second) * (p.first - o.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  std::vector<newton_facet> facets;
  long long min_x = pts.front().first;
  long long min_y = pts.back().second; // max-x generator has the least y
  if (min_x > 0) facets.push_back({{1, 0}, min_x});
  if (min_y > 0) facets.push_back({{0, 1}, min_y});
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    auto [x1, y1] = hull[k];
    auto [x2, y2] = hull[k + 1];
    long long wx = y1 - y2, wy = x2 - x1;
    long long g = std::gcd(wx, wy);
    wx /= g;
    wy /= g;
    facets.push_back({{wx, wy}, wx * x1 + wy * y1});
  }
  return facets;
}

std::vector<newton_facet> facets_dd(const ring_context& ctx,
                                    const std::vector<expvec>& gens) {
  const int n = ctx.n();
  std::vector<ray> constraints;
  for (const auto& g : gens) {
    ray r(n + 1);
    for (int i = 0; i < n; ++i) r[i] = g[i];
    r[n] = 1;
    constraints.push_back(std::move(r));
  }
  for (int i = 0; i < n; ++i) {
    ray r(n + 1, 0);
    r[i] = 1;
    constraints.push_back(std::move(r));
  }
  std::vector<newton_facet> facets;
  for (const auto& y : dual_extreme_rays(constraints)) {
    if (y[n] >= 0) continue; // coordinate facet or the far face
    newton_facet f;
    f.w.assign(y.begin(), y.begin() + n);
    f.d = -y[n];
    facets.push_back(std::move(f));
  }
  return facets;
}

} // namespace

namespace detail {
std::vector<newton_facet> facets_by_double_description(
    const ring_context& ctx, const std::vector<expvec>& gens) {
  std::vector<newton_facet> f = facets_dd(ctx, gens);
  std::sort(f.begin(), f.end(), [](const newton_facet& a, const newton_facet& b) {
    return a.w != b.w ? a.w < b.w : a.d < b.d;
  });
  return f;
}
} // namespace detail

newton_polyhedron newton_hull(const monomial_ideal& I, int max_dim) {
  if (I.is_zero()) throw zero_ideal_error("newton hull: zero ideal");
  const int n = I.ctx().n();
  if (n > max_dim)
    throw error("newton hull: dimension exceeds the configured cap");

  newton_polyhedron np;
  np.ctx = I.ctx();
  if (I.is_unit()) return np;

  if (n == 1) {
    long long k = I.min_gens()[0][0];
    if (k > 0) np.facets.push_back({{1}, k});
  } else if (n == 2) {
    np.facets = facets_2d(I.min_gens());
  } else {
    np.facets = facets_dd(I.ctx(), I.min_gens());
  }

  std::sort(np.facets.begin(), np.facets.end(),
            [](const newton_facet& a, const newton_facet& b) {
              return a.w != b.w ? a.w < b.w : a.d < b.d;
            });

  // construction invariants: generators inside, every facet tight somewhere
  for (const auto& f : np.facets) {
    if (f.d <= 0) throw error("newton hull: nonpositive facet offset");
    bool tight = false;
    for (const auto& g : I.min_gens()) {
      long long v = dotll(f.w, g);
      if (v < f.d) throw error("newton hull: generator violates facet");
      if (v == f.d) tight = true;
    }
    if (!tight) throw error("newton hull: slack facet");
  }
  return np;
}

} // namespace liftlog
