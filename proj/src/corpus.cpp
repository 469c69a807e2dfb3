#include "singspec/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "singspec/analysis.hpp"
#include "singspec/parser.hpp"
#include "singspec/rational.hpp"
#include "singspec/report.hpp"

namespace singspec {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string subset_diff(const json& want, const json& got, const std::string& path) {
  if (want.is_object()) {
    if (!got.is_object()) return path + ": expected an object, got " + got.dump();
    for (const auto& [k, v] : want.items()) {
      if (!got.contains(k)) return path + "/" + k + ": missing";
      auto d = subset_diff(v, got.at(k), path + "/" + k);
      if (!d.empty()) return d;
    }
    return "";
  }
  if (want.is_array() && got.is_array()) {
    if (want.size() != got.size())
      return path + ": expected " + std::to_string(want.size()) + " elements, got " + std::to_string(got.size()) +
             " " + got.dump();
    for (std::size_t i = 0; i < want.size(); ++i) {
      auto d = subset_diff(want[i], got[i], path + "/" + std::to_string(i));
      if (!d.empty()) return d;
    }
    return "";
  }
  if (want.is_string() && got.is_string()) {
    // rationals compare by value, so "44/30" matches "22/15"
    try {
      if (Rational::parse(want.get<std::string>()) == Rational::parse(got.get<std::string>())) return "";
    } catch (const std::invalid_argument&) {
    }
  }
  if (want != got) return path + ": expected " + want.dump() + ", got " + got.dump();
  return "";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CorpusResult run_entry(const fs::path& cfg_path, bool include_slow) {
  CorpusResult res;
  res.name = cfg_path.stem().string();
  auto start = std::chrono::steady_clock::now();
  try {
    fs::path expect_path = cfg_path.parent_path() / (res.name + ".expect.json");
    json want = json::parse(slurp(expect_path));
    AnalysisConfig cfg = parse_config(slurp(cfg_path));
    if (cfg.slow && !include_slow) {
      res.outcome = CorpusResult::Outcome::skipped;
      return res;
    }
    json got;
    try {
      got = json::parse(render_report(run_analysis(cfg), Format::json));
      got.erase("timing");
    } catch (const AnalysisError& ex) {
      got = {{"error", error_name(ex.code())}, {"message", ex.what()}};
    }
    res.diff = subset_diff(want, got, "");
  } catch (const std::exception& ex) {
    res.diff = std::string("error: ") + ex.what();
  }
  res.outcome = res.diff.empty() ? CorpusResult::Outcome::pass : CorpusResult::Outcome::fail;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

std::string json_subset_diff(const std::string& expected_json, const std::string& actual_json) {
  return subset_diff(json::parse(expected_json), json::parse(actual_json), "");
}

CorpusSummary corpus_run(const std::string& directory, bool include_slow, unsigned jobs) {
  std::vector<fs::path> cfgs;
  for (const auto& ent : fs::directory_iterator(directory))
    if (ent.is_regular_file() && ent.path().extension() == ".cfg") cfgs.push_back(ent.path());
  std::sort(cfgs.begin(), cfgs.end());

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  CorpusSummary s;
  s.results.resize(cfgs.size());
  // Fixed-size batches keep at most `jobs` analyses in flight.
  for (std::size_t i = 0; i < cfgs.size(); i += jobs) {
    std::vector<std::future<CorpusResult>> batch;
    for (std::size_t k = i; k < std::min(cfgs.size(), i + jobs); ++k)
      batch.push_back(std::async(std::launch::async, run_entry, cfgs[k], include_slow));
    for (std::size_t k = 0; k < batch.size(); ++k) s.results[i + k] = batch[k].get();
  }
  for (const auto& r : s.results) {
    if (r.outcome == CorpusResult::Outcome::pass) ++s.passed;
    else if (r.outcome == CorpusResult::Outcome::fail) ++s.failed;
    else ++s.skipped;
  }
  return s;
}

std::string CorpusSummary::table() const {
  std::ostringstream os;
  for (const auto& r : results) {
    const char* tag = r.outcome == CorpusResult::Outcome::pass ? "PASS"
                      : r.outcome == CorpusResult::Outcome::fail ? "FAIL"
                                                                 : "SKIP";
    os << tag << "  " << r.name;
    if (r.outcome != CorpusResult::Outcome::skipped) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  (%.2fs)", r.seconds);
      os << buf;
    }
    if (!r.diff.empty()) os << "\n      " << r.diff;
    os << "\n";
  }
  os << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return os.str();
}

}  // namespace singspec
