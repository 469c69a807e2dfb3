#pragma once

#include <map>
#include <memory>
#include <vector>

#include "singspec/newton.hpp"
#include "singspec/polynomial.hpp"
#include "singspec/standard_basis.hpp"

namespace singspec {

/// Sparse vector of exact rationals, entries sorted by index.
using SparseVec = std::vector<std::pair<int, mpq_class>>;

/// The Milnor algebra A = Q{x}/(∂f) as a μ-dimensional vector space with
/// the standard monomials of the Jacobian standard basis as coordinates.
class MilnorAlgebra {
 public:
  /// Throws std::domain_error if ∂f has infinite colength.
  explicit MilnorAlgebra(const Polynomial& f, StandardBasisCache* cache = nullptr);

  const Polynomial& f() const { return f_; }
  int nvars() const { return f_.nvars(); }
  int mu() const { return static_cast<int>(basis_.size()); }
  /// Every monomial of this total degree lies in (∂f).
  int corner() const { return corner_; }
  const StandardBasis& jacobian_basis() const { return *sb_; }
  std::shared_ptr<const StandardBasis> jacobian_basis_ptr() const { return sb_; }
  const std::vector<ExponentVector>& basis_monomials() const { return basis_; }

  /// All monomials of degree below the corner, increasing in the local order.
  const std::vector<ExponentVector>& monomials() const { return monomials_; }

  const SparseVec& monomial_class(const ExponentVector& e) const;
  SparseVec class_of(const Polynomial& p) const;

 private:
  Polynomial f_;
  std::shared_ptr<const StandardBasis> sb_;
  int corner_ = 0;
  std::vector<ExponentVector> basis_;
  std::vector<ExponentVector> monomials_;
  std::map<ExponentVector, SparseVec> nf_;
  SparseVec zero_;
};

/// A basis (b_i) of A adapted to a monomial level filtration: V^α A is
/// spanned by the b_i with level λ_i ≥ α, and levels are non-increasing
/// in i. Built by inserting monomial classes by decreasing level.
class FilteredBasis {
 public:
  FilteredBasis(const MilnorAlgebra& algebra, const NewtonPolytope& levels);

  int size() const { return static_cast<int>(levels_.size()); }
  const std::vector<Rational>& levels() const { return levels_; }

  /// dim V^α A.
  int dim_at_least(const Rational& alpha) const;

  /// Coordinates in the filtered basis of a class in A; exact.
  SparseVec coordinates(const SparseVec& v) const;

  /// Largest α with v ∈ V^α A; nullopt for v = 0.
  std::optional<Rational> level_of(const SparseVec& v) const;

  /// Graded dimensions dim Gr_V^α A, i.e. the Steenbrink multiplicities.
  std::map<Rational, int> graded_dimensions() const;

 private:
  std::vector<SparseVec> rows_;  // reduced rows, row i has pivot pivots_[i]
  std::vector<int> pivots_;
  std::vector<mpq_class> pivot_values_;
  std::vector<int> row_of_column_;
  std::vector<Rational> levels_;
};

/// Induced bifiltration on the image of [g]: basis rows of g·V^β A with
/// distinct V-leading positions, each tagged by (I-level β, V-level α).
/// X(β, α) = dim(g·V^β A ∩ V^α A) = #{rows : I-level ≥ β, V-level ≥ α}.
class ImageBifiltration {
 public:
  ImageBifiltration(const MilnorAlgebra& algebra, const NewtonPolytope& levels,
                    const FilteredBasis& vbasis, const Polynomial& g);

  struct Row {
    Rational i_level;
    Rational v_level;
  };
  const std::vector<Row>& rows() const { return tags_; }
  int dimension() const { return static_cast<int>(tags_.size()); }

  int intersection_dim(const Rational& beta, const Rational& alpha) const;
  /// #{rows with I-level exactly β and V-level exactly α}.
  int bigraded(const Rational& beta, const Rational& alpha) const;
  /// Multiplicities of the image's V-levels (the missing spectrum for g = f^e).
  std::map<Rational, int> v_levels() const;

 private:
  std::vector<Row> tags_;
  std::map<std::pair<Rational, Rational>, int> count_;
};

}  // namespace singspec
