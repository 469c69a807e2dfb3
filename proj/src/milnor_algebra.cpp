#include "singspec/milnor_algebra.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace singspec {

namespace {

void add_scaled(std::vector<mpq_class>& dense, std::vector<int>& touched, const SparseVec& v,
                const mpq_class& c) {
  for (const auto& [i, x] : v) {
    if (sgn(dense[i]) == 0) touched.push_back(i);
    dense[i] += c * x;
  }
}

SparseVec sparsify(std::vector<mpq_class>& dense, std::vector<int>& touched) {
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  SparseVec out;
  for (int i : touched) {
    if (sgn(dense[i]) != 0) out.emplace_back(i, dense[i]);
    dense[i] = 0;
  }
  touched.clear();
  return out;
}

}  // namespace

MilnorAlgebra::MilnorAlgebra(const Polynomial& f, StandardBasisCache* cache) : f_(f) {
  const int n = f.nvars();
  MonomialOrder order(n);
  std::vector<Polynomial> jac = jacobian(f);
  if (cache)
    sb_ = cache->get(jac, order);
  else
    sb_ = std::make_shared<const StandardBasis>(standard_basis(jac, order));
  if (!sb_->corner_degree()) throw std::domain_error("Jacobian ideal has infinite colength");
  corner_ = *sb_->corner_degree();
  basis_ = standard_monomials(*sb_);
  std::map<ExponentVector, int> index;
  for (std::size_t i = 0; i < basis_.size(); ++i) index[basis_[i]] = static_cast<int>(i);

  // Every monomial of degree < corner, smallest first: the normal form of a
  // leading-ideal monomial only involves strictly smaller monomials.
  ExponentVector e(n);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      monomials_.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  if (corner_ > 0) rec(0, corner_ - 1);
  std::sort(monomials_.begin(), monomials_.end(),
            [](const auto& a, const auto& b) { return MonomialOrder::compare(a, b) < 0; });

  const auto& gens = sb_->local_generators();
  std::vector<mpq_class> dense(basis_.size());
  std::vector<int> touched;
  for (const auto& m : monomials_) {
    auto it = index.find(m);
    if (it != index.end()) {
      nf_[m] = SparseVec{{it->second, mpq_class(1)}};
      continue;
    }
    const detail::LPoly* red = nullptr;
    for (const auto& g : gens)
      if (!g.zero() && g.t.front().e.divides(m)) {
        red = &g;
        break;
      }
    if (!red) throw std::logic_error("monomial neither standard nor reducible");
    ExponentVector shift = m - red->t.front().e;
    mpq_class scale = -1 / red->t.front().c;
    for (std::size_t k = 1; k < red->t.size(); ++k) {
      ExponentVector q = shift + red->t[k].e;
      if (q.degree() >= corner_) continue;
      auto jt = nf_.find(q);
      if (jt == nf_.end()) throw std::logic_error("normal form recursion out of order");
      add_scaled(dense, touched, jt->second, scale * red->t[k].c);
    }
    nf_[m] = sparsify(dense, touched);
  }
}

const SparseVec& MilnorAlgebra::monomial_class(const ExponentVector& e) const {
  if (e.degree() >= corner_) return zero_;
  return nf_.at(e);
}

SparseVec MilnorAlgebra::class_of(const Polynomial& p) const {
  std::vector<mpq_class> dense(basis_.size());
  std::vector<int> touched;
  for (const auto& [e, c] : p.terms()) {
    if (e.degree() >= corner_) continue;
    add_scaled(dense, touched, nf_.at(e), c.mpq());
  }
  return sparsify(dense, touched);
}

// ---------------------------------------------------------------------------

namespace {

/// Eliminates pivot columns from `dense` using rows in insertion order.
/// Subtracting row i only introduces nonzeros in pivot columns of rows
/// inserted after i, so a min-heap over row indices suffices. `used`
/// receives (row, coefficient) pairs.
void eliminate(std::vector<mpq_class>& dense, std::vector<int>& touched, const std::vector<SparseVec>& rows,
               const std::vector<int>& pivots, const std::vector<mpq_class>& pivot_values,
               const std::vector<int>& row_of_column, std::vector<std::pair<int, mpq_class>>* used) {
  std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
  std::vector<char> queued(rows.size(), 0);
  auto enqueue = [&](int col) {
    int r = row_of_column[col];
    if (r >= 0 && !queued[r]) {
      queued[r] = 1;
      heap.push(r);
    }
  };
  for (int col : touched) enqueue(col);
  while (!heap.empty()) {
    int r = heap.top();
    heap.pop();
    const mpq_class& x = dense[pivots[r]];
    if (sgn(x) == 0) continue;
    mpq_class c = x / pivot_values[r];
    if (used) used->emplace_back(r, c);
    for (const auto& [col, v] : rows[r]) {
      if (sgn(dense[col]) == 0) touched.push_back(col);
      dense[col] -= c * v;
      if (col != pivots[r]) enqueue(col);
    }
    dense[pivots[r]] = 0;
  }
}

}  // namespace

FilteredBasis::FilteredBasis(const MilnorAlgebra& algebra, const NewtonPolytope& levels) {
  const int mu = algebra.mu();
  row_of_column_.assign(mu, -1);
  struct Item {
    Rational level;
    const ExponentVector* e;
  };
  std::vector<Item> items;
  for (const auto& m : algebra.monomials()) items.push_back({levels.level(m, true), &m});
  // Decreasing level; among equal levels keep the ascending local order.
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.level > b.level; });

  std::vector<mpq_class> dense(mu);
  std::vector<int> touched;
  for (const auto& item : items) {
    if (size() == mu) break;
    const SparseVec& v = algebra.monomial_class(*item.e);
    if (v.empty()) continue;
    for (const auto& [i, x] : v) {
      dense[i] = x;
      touched.push_back(i);
    }
    eliminate(dense, touched, rows_, pivots_, pivot_values_, row_of_column_, nullptr);
    SparseVec r = sparsify(dense, touched);
    if (r.empty()) continue;
    int piv = r.front().first;
    pivots_.push_back(piv);
    pivot_values_.push_back(r.front().second);
    row_of_column_[piv] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    levels_.push_back(item.level);
  }
  if (size() != mu) throw std::logic_error("filtered basis does not span the Milnor algebra");
}

int FilteredBasis::dim_at_least(const Rational& alpha) const {
  // levels_ is non-increasing.
  auto it = std::partition_point(levels_.begin(), levels_.end(), [&](const Rational& l) { return l >= alpha; });
  return static_cast<int>(it - levels_.begin());
}

SparseVec FilteredBasis::coordinates(const SparseVec& v) const {
  std::vector<mpq_class> dense(row_of_column_.size());
  std::vector<int> touched;
  for (const auto& [i, x] : v) {
    dense[i] = x;
    touched.push_back(i);
  }
  std::vector<std::pair<int, mpq_class>> used;
  eliminate(dense, touched, rows_, pivots_, pivot_values_, row_of_column_, &used);
  for (int i : touched)
    if (sgn(dense[i]) != 0) throw std::logic_error("vector outside the span of the filtered basis");
  std::sort(used.begin(), used.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return used;
}

std::optional<Rational> FilteredBasis::level_of(const SparseVec& v) const {
  SparseVec c = coordinates(v);
  if (c.empty()) return std::nullopt;
  return levels_[c.back().first];
}

std::map<Rational, int> FilteredBasis::graded_dimensions() const {
  std::map<Rational, int> out;
  for (const auto& l : levels_) ++out[l];
  return out;
}

// ---------------------------------------------------------------------------

ImageBifiltration::ImageBifiltration(const MilnorAlgebra& algebra, const NewtonPolytope& levels,
                                     const FilteredBasis& vbasis, const Polynomial& g) {
  const int mu = algebra.mu();
  const int D = algebra.corner();
  int gorder = g.is_zero() ? D : g.order();
  struct Item {
    Rational level;
    const ExponentVector* e;
  };
  std::vector<Item> items;
  for (const auto& m : algebra.monomials())
    if (m.degree() + gorder < D) items.push_back({levels.level(m, true), &m});
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.level > b.level; });

  // Rows keyed by their leading position (largest filtered-basis index,
  // i.e. lowest V-level); row entries are kept dense for elimination.
  std::map<int, SparseVec> by_lead;
  std::vector<mpq_class> dense(mu);
  std::vector<int> touched;
  for (const auto& item : items) {
    Polynomial p = g * Polynomial::monomial(*item.e, Rational(1));
    SparseVec v = vbasis.coordinates(algebra.class_of(p));
    for (const auto& [i, x] : v) {
      dense[i] = x;
      touched.push_back(i);
    }
    // Reduce from the top position downwards: subtracting a row with lead L
    // only changes positions ≤ L.
    std::priority_queue<int> heap;
    std::vector<char> seen(mu, 0);
    for (int i : touched) {
      seen[i] = 1;
      heap.push(i);
    }
    int lead = -1;
    while (!heap.empty()) {
      int L = heap.top();
      heap.pop();
      if (sgn(dense[L]) == 0) continue;
      auto it = by_lead.find(L);
      if (it == by_lead.end()) {
        lead = L;
        break;
      }
      mpq_class c = dense[L] / it->second.back().second;
      for (const auto& [col, x] : it->second) {
        if (!seen[col]) {
          seen[col] = 1;
          heap.push(col);
          touched.push_back(col);
        }
        dense[col] -= c * x;
      }
      dense[L] = 0;
    }
    SparseVec r = sparsify(dense, touched);
    if (lead < 0) continue;
    while (!r.empty() && r.back().first > lead) r.pop_back();  // cleared positions
    by_lead.emplace(lead, std::move(r));
    Row tag{item.level, vbasis.levels()[lead]};
    ++count_[{tag.i_level, tag.v_level}];
    tags_.push_back(std::move(tag));
  }
}

int ImageBifiltration::intersection_dim(const Rational& beta, const Rational& alpha) const {
  int n = 0;
  for (const auto& t : tags_)
    if (t.i_level >= beta && t.v_level >= alpha) ++n;
  return n;
}

int ImageBifiltration::bigraded(const Rational& beta, const Rational& alpha) const {
  auto it = count_.find({beta, alpha});
  return it == count_.end() ? 0 : it->second;
}

std::map<Rational, int> ImageBifiltration::v_levels() const {
  std::map<Rational, int> out;
  for (const auto& t : tags_) ++out[t.v_level];
  return out;
}

}  // namespace singspec
