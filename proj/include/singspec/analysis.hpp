#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singspec/graded.hpp"
#include "singspec/spectra.hpp"

namespace singspec {

/// Thrown for malformed configuration files (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalysisConfig {
  std::string name;
  std::string f_text;
  Polynomial f;
  std::vector<std::string> vars;
  int e = 1;
  std::string mode = "auto";  ///< auto | wh | swh | newton
  std::optional<WeightVector> weights;
  bool force = false;
  bool codemode_crosscheck = false;
  bool slow = false;  ///< corpus gate
  int grid_span = 0;  ///< 0 means n

  /// Re-parses f_text against vars and validates the invariants.
  void finalize();
};

/// Flat key=value text: f, vars, e, mode, weights, force, codemode, slow,
/// grid_span, name. '#' starts a comment. Throws ConfigError or ParseError.
AnalysisConfig parse_config(const std::string& text);
AnalysisConfig load_config(const std::string& path);
std::string render_config(const AnalysisConfig& c);

struct GradedBlock {
  Rational gamma;
  Rational quasi_weight;
  std::vector<SpectrumPoly::Entry> entries;
  bool symmetric = true;
  friend bool operator==(const GradedBlock&, const GradedBlock&) = default;
};

struct NamedVerdict {
  std::string name;
  Verdict verdict;
};

struct Report {
  std::string f;
  int n = 0;
  int e = 1;
  std::string mode;
  long mu = 0;
  long tau_e = 0;
  Rational alpha_1;
  SpectrumPoly spectrum;
  SpectrumPoly tjurina_spectrum;
  SpectrumPoly missing;
  std::vector<GradedBlock> graded_blocks;
  std::optional<std::vector<GradedBlock>> codemode_blocks;
  std::optional<Rational> sigma_f;
  std::optional<Rational> sigma_pp;
  std::optional<long> bs_bound;
  std::optional<long> bs_actual;
  std::optional<Rational> hertling_gap;
  std::vector<NamedVerdict> checks;
  bool unreliable = false;
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, double>> timing;  ///< seconds per stage

  const Verdict* check(const std::string& name) const;
};

/// Content equality; timing is ignored.
bool same_content(const Report& a, const Report& b);

/// Report blocks of a table, tagged with their symmetry flags.
std::vector<GradedBlock> to_blocks(const BigradedTable& t, const GradedVerdict& v);

/// parse → mode → ladder → spectra → tables → sigma/BS → Hertling → verdicts.
/// Throws AnalysisError on guard failures.
Report run_analysis(const AnalysisConfig& config);

}  // namespace singspec
