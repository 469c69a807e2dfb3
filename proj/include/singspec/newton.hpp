#pragma once

#include <vector>

#include "singspec/polynomial.hpp"
#include "singspec/rational.hpp"

namespace singspec {

/// A compact maximal-dimensional face with supporting form
/// ℓ_σ(ν) = Σ c_i ν_i, ℓ_σ = 1 on the face and ℓ_σ ≥ 1 on the support.
struct Facet {
  std::vector<Rational> form;
  long denominator = 1;      ///< lcm of the denominators of the c_i
  std::vector<int> on_face;  ///< indices into the support with ℓ_σ = 1

  Rational eval(const ExponentVector& v) const;
};

/// Newton polytope data of a support: the compact facets and the level
/// function ℓ = min_σ ℓ_σ.
class NewtonPolytope {
 public:
  /// Facets by exhaustive n-subset search with exact solves.
  /// Throws std::domain_error when no compact maximal face exists.
  explicit NewtonPolytope(std::vector<ExponentVector> support);

  /// Single-form level function Σ w_i ν_i (weighted / semi-weighted case).
  static NewtonPolytope from_weights(std::vector<ExponentVector> support,
                                     const std::vector<Rational>& weights);

  int nvars() const { return nvars_; }
  const std::vector<ExponentVector>& points() const { return points_; }
  const std::vector<Facet>& facets() const { return facets_; }
  bool convenient() const { return convenient_; }

  /// min_σ ℓ_σ(ν), or of ν + 𝟙 when `shifted`.
  Rational level(const ExponentVector& nu, bool shifted) const;

  /// lcm of the facet denominators.
  long common_denominator() const;

  /// Smallest B with level(B·e_i + 𝟙) ≥ n on every axis, doubled.
  int box_bound() const;

 private:
  NewtonPolytope() = default;
  int nvars_ = 0;
  std::vector<ExponentVector> points_;
  std::vector<Facet> facets_;
  bool convenient_ = false;
};

bool is_convenient(const std::vector<ExponentVector>& support, int nvars);

/// Candidate jump values: every k/d_σ in (0, span], sorted.
struct LevelGrid {
  std::vector<Rational> values;
  long common_denominator = 1;

  /// Index of the first value ≥ a, or values.size().
  std::size_t lower_index(const Rational& a) const;
};

LevelGrid level_grid(const NewtonPolytope& np, int span);

/// Minimal monomials ν ∈ [0,B]^n with level(ν + 𝟙) ≥ α. Throws
/// std::invalid_argument if B is too small to contain the pure-power corners.
std::vector<ExponentVector> filtration_generators(const NewtonPolytope& np, const Rational& alpha,
                                                  int box_bound);

/// Kouchnirenko number Σ_k (−1)^{n−k} k!·V_k for convenient supports in
/// at most three variables. Throws std::domain_error otherwise.
long kouchnirenko_mu(const NewtonPolytope& np);

/// Volume of {ν ≥ 0 : ℓ(ν) < 1} for a convenient support, n ≤ 3.
Rational under_diagram_volume(const NewtonPolytope& np);

/// Solves the square system A·x = b exactly; returns false if singular.
bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational>& x);

}  // namespace singspec
