#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "singspec/milnor_algebra.hpp"
#include "singspec/newton.hpp"
#include "singspec/polynomial.hpp"
#include "singspec/spectrum_poly.hpp"
#include "singspec/standard_basis.hpp"

namespace singspec {

enum class ErrorCode {
  non_isolated,
  not_convenient,
  newton_degenerate,
  swh_guard,
  negative_mult,
  negative_dim,
  incomplete_row,
  invalid_config,
};

const char* error_name(ErrorCode c);
/// CLI exit code for an analysis error (2 for configuration problems).
int exit_code(ErrorCode c);

class AnalysisError : public std::runtime_error {
 public:
  AnalysisError(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct WeightVector {
  std::vector<Rational> w;

  /// Σ w_i ν_i.
  Rational degree(const ExponentVector& nu) const;
};

enum class Mode { wh, swh, newton };
const char* mode_name(Mode m);

/// The unique solution of Σ w_i ν_i = 1 over the support when it exists and
/// is positive.
std::optional<WeightVector> homogeneity_weights(const Polynomial& f);

struct ModeChoice {
  Mode mode;
  std::optional<WeightVector> weights;
};

/// wh when the support admits positive homogeneity weights, else newton.
ModeChoice detect_mode(const Polynomial& f);

/// Throws AnalysisError(non_isolated) when the Jacobian colength is infinite.
long milnor_number(const Polynomial& f, StandardBasisCache* cache = nullptr);
long tjurina_number(const Polynomial& f, int e, StandardBasisCache* cache = nullptr);

/// Weight-1 part of f.
Polynomial weight_one_part(const Polynomial& f, const WeightVector& w);

struct GuardInfo {
  std::optional<long> kouchnirenko;  ///< newton mode, n ≤ 3
  std::optional<long> mu_weight_one; ///< swh mode
  bool unreliable = false;           ///< newton guard failed under --force
  std::vector<std::string> warnings;
};

/// The V-filtration ladder on A together with the route used to evaluate
/// it: a filtered basis of A and the bifiltered image of [f^e].
class FiltrationLadder {
 public:
  /// Runs the mode guards. `weights` is required for swh and optional
  /// for wh (computed from the support when absent). `grid_span` 0 means n.
  static FiltrationLadder build(const Polynomial& f, int e, Mode mode,
                                const std::optional<WeightVector>& weights, bool force,
                                std::shared_ptr<StandardBasisCache> cache = nullptr, int grid_span = 0);

  const Polynomial& f() const { return f_; }
  int nvars() const { return f_.nvars(); }
  int e() const { return e_; }
  Mode mode() const { return mode_; }
  const std::optional<WeightVector>& weights() const { return weights_; }
  const GuardInfo& guards() const { return guards_; }

  const LevelGrid& grid() const { return grid_; }
  std::size_t size() const { return grid_.values.size(); }
  const Rational& value(std::size_t p) const { return grid_.values[p]; }
  /// D1_p = colength((∂f) + V^{α_p}); index size() is the sentinel μ.
  const std::vector<long>& d1() const { return d1_; }
  /// D2_p = colength((∂f, f^e) + V^{α_p}); sentinel τ^(e).
  const std::vector<long>& d2() const { return d2_; }
  long mu() const { return d1_.back(); }
  long tau() const { return d2_.back(); }
  Rational alpha_1() const;

  const NewtonPolytope& levels() const { return *np_; }
  const MilnorAlgebra& algebra() const { return *algebra_; }
  const FilteredBasis& vbasis() const { return *vbasis_; }
  const ImageBifiltration& image() const { return *image_; }
  StandardBasisCache& cache() const { return *cache_; }
  int box_bound() const { return box_bound_; }

  /// Minimal monomial generators of V^{α_p}; p = size() gives the empty set.
  const std::vector<ExponentVector>& generators(std::size_t p) const;
  /// Generators for an arbitrary level.
  std::vector<ExponentVector> generators_at(const Rational& alpha) const;

  /// Shifted level of a monomial, ℓ(ν + 𝟙).
  Rational level(const ExponentVector& nu) const { return np_->level(nu, true); }

 private:
  Polynomial f_;
  int e_ = 1;
  Mode mode_ = Mode::newton;
  std::optional<WeightVector> weights_;
  GuardInfo guards_;
  LevelGrid grid_;
  std::vector<long> d1_, d2_;
  std::shared_ptr<const NewtonPolytope> np_;
  std::shared_ptr<const MilnorAlgebra> algebra_;
  std::shared_ptr<const FilteredBasis> vbasis_;
  std::shared_ptr<const ImageBifiltration> image_;
  std::shared_ptr<StandardBasisCache> cache_;
  int box_bound_ = 0;
  mutable std::map<std::size_t, std::vector<ExponentVector>> gens_;
};

/// The monomials x^ν as ideal generators.
std::vector<Polynomial> monomial_ideal(const std::vector<ExponentVector>& gens);

/// D1 and D2 recomputed from colengths of explicit standard bases
/// (independent of the filtered-basis route). Expensive.
std::pair<std::vector<long>, std::vector<long>> ladder_by_colengths(const FiltrationLadder& ladder);

enum class SpectrumRole { steenbrink, tjurina_e, missing };

struct Spectrum {
  SpectrumPoly poly;
  SpectrumRole role = SpectrumRole::steenbrink;
  int e = 1;
};

Spectrum steenbrink_spectrum(const FiltrationLadder& ladder);
Spectrum tjurina_spectrum(const FiltrationLadder& ladder);
/// Throws AnalysisError(negative_mult) if tsp is not a subspectrum of sp.
Spectrum missing_spectrum(const Spectrum& sp, const Spectrum& tsp);

/// Expansion of Π (t^{w_i} − t)/(1 − t^{w_i}). Throws std::domain_error on
/// inexact division.
Spectrum wh_spectrum(const WeightVector& w);

enum class Status { pass, fail, not_applicable };
const char* status_name(Status s);

struct Verdict {
  Status status = Status::not_applicable;
  std::string detail;
};

/// α ↦ n − α symmetry of the multiset.
Verdict check_symmetry(const Spectrum& sp, int n);

/// Σ mult (α − mean)² / total − (max − min)/12.
Rational hertling_gap(const Spectrum& tsp);

}  // namespace singspec
