#pragma once

#include <string>
#include <vector>

namespace singspec {

/// One corpus entry: NAME.cfg next to NAME.expect.json.
struct CorpusResult {
  std::string name;
  enum class Outcome { pass, fail, skipped } outcome = Outcome::pass;
  std::string diff;  ///< first mismatch, empty on pass
  double seconds = 0;
};

struct CorpusSummary {
  std::vector<CorpusResult> results;  ///< sorted by name
  int passed = 0, failed = 0, skipped = 0;
  int exit_code() const { return failed ? 1 : 0; }
  std::string table() const;
};

/// The expectation is a JSON fragment; every key it names must match the
/// rendered report (objects recursively, arrays and scalars exactly). A
/// fragment {"error": "CODE"} expects the analysis to fail with that code.
/// Entries with slow=1 are skipped unless include_slow.
CorpusSummary corpus_run(const std::string& directory, bool include_slow, unsigned jobs = 0);

/// First mismatch of expected against actual as a path and both values, or
/// empty when expected is a sub-document of actual.
std::string json_subset_diff(const std::string& expected_json, const std::string& actual_json);

}  // namespace singspec
