#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singspec/spectra.hpp"

namespace singspec {

struct BigradedEntry {
  Rational alpha;
  Rational gamma;
  long mult = 0;
  friend bool operator==(const BigradedEntry&, const BigradedEntry&) = default;
};

/// Entries (α, γ, dim Gr_I^{α−γ} Gr_V^α A) of the image of [f^e].
class BigradedTable {
 public:
  BigradedTable() = default;
  BigradedTable(int n, int e) : n_(n), e_(e) {}

  int n() const { return n_; }
  int e() const { return e_; }
  /// Sorted by (α, γ); repeated (α, γ) pairs are merged.
  void add(const Rational& alpha, const Rational& gamma, long mult);
  const std::vector<BigradedEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// γ ↦ entries of that block, sorted by α.
  std::map<Rational, std::vector<BigradedEntry>> blocks() const;
  /// Σ_γ mult for one α.
  long row_sum(const Rational& alpha) const;

  friend bool operator==(const BigradedTable& a, const BigradedTable& b) {
    return a.n_ == b.n_ && a.e_ == b.e_ && a.entries_ == b.entries_;
  }

 private:
  int n_ = 0;
  int e_ = 1;
  std::vector<BigradedEntry> entries_;
};

/// dim([f^e]V^β A ∩ V^α A), from the bifiltered image.
long subspace_dim_X(const FiltrationLadder& ladder, const Rational& beta, const Rational& alpha);

/// The same intersection dimension by inclusion–exclusion of colengths of
/// explicit ideals (∂f) + Mon(α) + f^e·Mon(β).
long subspace_dim_X_colength(const FiltrationLadder& ladder, const Rational& beta, const Rational& alpha);

/// [X(β,α) − X(β,α⁺)] − [X(β⁺,α) − X(β⁺,α⁺)] with ⁺ the next grid value.
/// Throws AnalysisError(negative_dim) on a negative result.
long bigraded_dimension(const FiltrationLadder& ladder, const Rational& alpha, const Rational& beta);

/// Rows scanned with β = α − γ descending, γ ≥ e, stopping at the missing
/// multiplicity. Throws AnalysisError(incomplete_row) if a row never fills.
BigradedTable bigraded_table(const FiltrationLadder& ladder, const Spectrum& missing);

/// The single-difference procedure on explicit colengths:
/// FD[p,q] = colength(M[p+1]) − colength(M[p+1] + f^e·Mon(α_q)) with
/// M[p] = (∂f) + Mon(α_p), GD = FD[p,q] minus the previous nonzero FD of
/// the row, the cut α_p − α_q ≥ 1 and the stop at FD = missing
/// multiplicity.
BigradedTable bigraded_table_codemode(const FiltrationLadder& ladder, const Spectrum& missing);

struct GradedVerdict {
  Verdict overall;
  std::map<Rational, bool> block_symmetric;
  Verdict minimal_partner;  ///< multiplicity one and partner n − α_1
};

GradedVerdict check_graded_symmetry(const BigradedTable& table, const Rational& alpha_1);

/// Largest grid α with g ∈ (∂f) + Mon(α); binary search over membership
/// tests. nullopt when g ∈ (∂f).
std::optional<Rational> class_level(const FiltrationLadder& ladder, const Polynomial& g);

struct SigmaReport {
  Rational sigma_f;
  Rational sigma_pp;
  long bs_bound = 0;
  long bs_actual = 0;
};

/// Needs a nonempty e = 1 table; nullopt otherwise.
std::optional<SigmaReport> sigma_and_bs(const FiltrationLadder& ladder_e1, const BigradedTable& table_e1);

/// Least k ≥ 1 with f^k ∈ (∂f).
long briancon_skoda_exponent(const FiltrationLadder& ladder);

}  // namespace singspec
