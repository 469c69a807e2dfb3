#include "singspec/newton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace singspec {

Rational Facet::eval(const ExponentVector& v) const {
  Rational s(0);
  for (std::size_t i = 0; i < form.size(); ++i)
    if (v[static_cast<int>(i)] != 0) s += form[i] * Rational(v[static_cast<int>(i)]);
  return s;
}

bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational>& x) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

bool is_convenient(const std::vector<ExponentVector>& support, int nvars) {
  for (int i = 0; i < nvars; ++i) {
    bool found = false;
    for (const auto& p : support) {
      int axis;
      if (p.is_pure_power(&axis) && axis == i) found = true;
    }
    if (!found) return false;
  }
  return true;
}

namespace {

long denominator_lcm(const std::vector<Rational>& form) {
  mpz_class l = 1;
  for (const auto& c : form) l = lcm(l, c.den());
  if (!l.fits_slong_p()) throw std::overflow_error("facet denominator too large");
  return l.get_si();
}

void combinations(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (int i = start; i <= m - (k - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (k <= m) rec(0, 0);
}

}  // namespace

NewtonPolytope::NewtonPolytope(std::vector<ExponentVector> support) : points_(std::move(support)) {
  if (points_.empty()) throw std::domain_error("empty support");
  nvars_ = points_.front().size();
  convenient_ = is_convenient(points_, nvars_);
  const int m = static_cast<int>(points_.size());
  combinations(m, nvars_, [&](const std::vector<int>& idx) {
    std::vector<std::vector<Rational>> a;
    for (int i : idx) {
      std::vector<Rational> row;
      for (int j = 0; j < nvars_; ++j) row.emplace_back(points_[i][j]);
      a.push_back(std::move(row));
    }
    std::vector<Rational> c;
    if (!solve_exact(a, std::vector<Rational>(nvars_, Rational(1)), c)) return;
    if (std::any_of(c.begin(), c.end(), [](const Rational& v) { return v.sign() <= 0; })) return;
    Facet f{c, 0, {}};
    for (int p = 0; p < m; ++p) {
      Rational l = f.eval(points_[p]);
      if (l < Rational(1)) return;
      if (l == Rational(1)) f.on_face.push_back(p);
    }
    for (const auto& g : facets_)
      if (g.form == c) return;
    f.denominator = denominator_lcm(c);
    facets_.push_back(std::move(f));
  });
  if (facets_.empty()) throw std::domain_error("no compact maximal face in the Newton polytope");
  // Deterministic facet order independent of the input point order.
  std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) { return a.form > b.form; });
}

NewtonPolytope NewtonPolytope::from_weights(std::vector<ExponentVector> support,
                                            const std::vector<Rational>& weights) {
  NewtonPolytope np;
  np.points_ = std::move(support);
  np.nvars_ = static_cast<int>(weights.size());
  np.convenient_ = is_convenient(np.points_, np.nvars_);
  Facet f{weights, denominator_lcm(weights), {}};
  for (std::size_t p = 0; p < np.points_.size(); ++p)
    if (f.eval(np.points_[p]) == Rational(1)) f.on_face.push_back(static_cast<int>(p));
  np.facets_.push_back(std::move(f));
  return np;
}

Rational NewtonPolytope::level(const ExponentVector& nu, bool shifted) const {
  ExponentVector v = shifted ? nu + ExponentVector::ones(nvars_) : nu;
  Rational best = facets_.front().eval(v);
  for (std::size_t k = 1; k < facets_.size(); ++k) {
    Rational l = facets_[k].eval(v);
    if (l < best) best = l;
  }
  return best;
}

long NewtonPolytope::common_denominator() const {
  long l = 1;
  for (const auto& f : facets_) l = std::lcm(l, f.denominator);
  return l;
}

int NewtonPolytope::box_bound() const {
  int best = 0;
  for (int i = 0; i < nvars_; ++i) {
    int b = 0;
    while (level(ExponentVector::unit(nvars_, i, b), true) < Rational(nvars_)) ++b;
    best = std::max(best, b);
  }
  return 2 * best;
}

std::size_t LevelGrid::lower_index(const Rational& a) const {
  return static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), a) - values.begin());
}

LevelGrid level_grid(const NewtonPolytope& np, int span) {
  LevelGrid g;
  g.common_denominator = np.common_denominator();
  for (const auto& f : np.facets())
    for (long k = 1; k <= f.denominator * span; ++k) g.values.emplace_back(k, f.denominator);
  std::sort(g.values.begin(), g.values.end());
  g.values.erase(std::unique(g.values.begin(), g.values.end()), g.values.end());
  return g;
}

std::vector<ExponentVector> filtration_generators(const NewtonPolytope& np, const Rational& alpha,
                                                  int box_bound) {
  const int n = np.nvars();
  for (int i = 0; i < n; ++i)
    if (np.level(ExponentVector::unit(n, i, box_bound), true) < Rational(n))
      throw std::invalid_argument("box bound too small for the filtration generators");
  std::vector<ExponentVector> out;
  ExponentVector nu(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (np.level(nu, true) < alpha) return;
      for (int k = 0; k < n; ++k) {
        if (nu[k] == 0) continue;
        nu[k] -= 1;
        bool below = np.level(nu, true) < alpha;
        nu[k] += 1;
        if (!below) return;
      }
      out.push_back(nu);
      return;
    }
    for (int k = 0; k <= box_bound; ++k) {
      nu[i] = k;
      rec(i + 1);
      // Monotone in each coordinate: once the point qualifies, any larger
      // value in the last coordinate is not minimal.
      if (i == n - 1 && np.level(nu, true) >= alpha) break;
    }
    nu[i] = 0;
  };
  rec(0);
  return out;
}

namespace {

long long det2(const ExponentVector& a, const ExponentVector& b) {
  return static_cast<long long>(a[0]) * b[1] - static_cast<long long>(a[1]) * b[0];
}

long long det3(const ExponentVector& a, const ExponentVector& b, const ExponentVector& c) {
  return static_cast<long long>(a[0]) * (static_cast<long long>(b[1]) * c[2] - static_cast<long long>(b[2]) * c[1]) -
         static_cast<long long>(a[1]) * (static_cast<long long>(b[0]) * c[2] - static_cast<long long>(b[2]) * c[0]) +
         static_cast<long long>(a[2]) * (static_cast<long long>(b[0]) * c[1] - static_cast<long long>(b[1]) * c[0]);
}

/// Convex hull (counter-clockwise, no collinear points) of facet points
/// projected to the first two coordinates; returns support indices.
std::vector<int> hull2d(const std::vector<ExponentVector>& pts, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
    return pts[a][1] < pts[b][1];
  });
  auto cross = [&](int o, int a, int b) {
    long long ax = pts[a][0] - pts[o][0], ay = pts[a][1] - pts[o][1];
    long long bx = pts[b][0] - pts[o][0], by = pts[b][1] - pts[o][1];
    return ax * by - ay * bx;
  };
  if (idx.size() < 3) return idx;
  std::vector<int> h(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], idx[i]) <= 0) --k;
    h[k++] = idx[i];
  }
  for (std::size_t i = idx.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], idx[i - 1]) <= 0) --k;
    h[k++] = idx[i - 1];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

Rational under_diagram_volume(const NewtonPolytope& np) {
  const int n = np.nvars();
  if (!np.convenient()) throw std::domain_error("volume needs a convenient support");
  const auto& pts = np.points();
  if (n == 1) {
    return Rational(1) / np.facets().front().form[0];
  }
  if (n == 2) {
    mpq_class area = 0;
    for (const auto& f : np.facets()) {
      auto [lo, hi] = std::minmax_element(f.on_face.begin(), f.on_face.end(),
                                          [&](int a, int b) { return pts[a][0] < pts[b][0]; });
      area += mpq_class(static_cast<long>(std::llabs(det2(pts[*lo], pts[*hi]))), 2);
    }
    return Rational(area);
  }
  if (n == 3) {
    mpq_class vol = 0;
    for (const auto& f : np.facets()) {
      std::vector<int> h = hull2d(pts, f.on_face);
      // Fan from the incident vertex with the lowest support index.
      auto start = std::min_element(h.begin(), h.end());
      std::rotate(h.begin(), start, h.end());
      for (std::size_t k = 1; k + 1 < h.size(); ++k)
        vol += mpq_class(static_cast<long>(std::llabs(det3(pts[h[0]], pts[h[k]], pts[h[k + 1]]))), 6);
    }
    return Rational(vol);
  }
  throw std::domain_error("volume supported for n <= 3 only");
}

long kouchnirenko_mu(const NewtonPolytope& np) {
  const int n = np.nvars();
  if (n > 3) throw std::domain_error("Kouchnirenko number supported for n <= 3 only");
  if (!np.convenient()) throw std::domain_error("Kouchnirenko number needs a convenient support");
  mpq_class total = (n % 2 == 0) ? 1 : -1;  // k = 0 term
  long fact = 1;
  for (int k = 1; k <= n; ++k) {
    fact *= k;
    mpq_class vk = 0;
    combinations(n, k, [&](const std::vector<int>& axes) {
      std::vector<ExponentVector> sub;
      for (const auto& p : np.points()) {
        bool inside = true;
        for (int j = 0; j < n; ++j)
          if (p[j] != 0 && std::find(axes.begin(), axes.end(), j) == axes.end()) inside = false;
        if (!inside) continue;
        ExponentVector q(k);
        for (int j = 0; j < k; ++j) q[j] = p[axes[j]];
        if (!q.is_zero()) sub.push_back(q);
      }
      vk += under_diagram_volume(k == n ? np : NewtonPolytope(sub)).mpq();
    });
    mpq_class term = vk * fact;
    total += ((n - k) % 2 == 0) ? term : mpq_class(-term);
  }
  if (total.get_den() != 1) throw std::logic_error("non-integral Kouchnirenko number");
  return total.get_num().get_si();
}

}  // namespace singspec
