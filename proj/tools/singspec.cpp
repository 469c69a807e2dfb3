#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "singspec/analysis.hpp"
#include "singspec/corpus.hpp"
#include "singspec/family.hpp"
#include "singspec/parser.hpp"
#include "singspec/report.hpp"

using namespace singspec;

namespace {

int analyze(const std::string& file, int e, const std::string& mode, const std::string& weights, bool force,
            bool crosscheck, const std::string& json_path, bool slow, bool text) {
  AnalysisConfig cfg = load_config(file);
  if (e > 0) cfg.e = e;
  if (!mode.empty()) cfg.mode = mode;
  if (!weights.empty()) {
    WeightVector w;
    std::stringstream ss(weights);
    std::string item;
    try {
      while (std::getline(ss, item, ',')) w.w.push_back(Rational::parse(item));
    } catch (const std::invalid_argument&) {
      throw ConfigError("bad --weights " + weights);
    }
    cfg.weights = w;
  }
  cfg.force = cfg.force || force;
  cfg.codemode_crosscheck = cfg.codemode_crosscheck || crosscheck;
  cfg.finalize();
  if (cfg.slow && !slow) throw ConfigError(file + " is marked slow=1; rerun with --slow");

  Report r = run_analysis(cfg);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw ConfigError("cannot write " + json_path);
    out << render_report(r, Format::json);
  }
  std::cout << render_report(r, text || !json_path.empty() ? Format::text : Format::json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, Tjurina subspectra and graded symmetry of isolated hypersurface singularities"};
  app.require_subcommand(1);

  auto* an = app.add_subcommand("analyze", "Analyze one germ given by a config file");
  std::string file, mode, weights, json_path;
  int e = 0;
  bool force = false, crosscheck = false, slow = false, text = false;
  an->add_option("FILE", file, "config file (key=value lines)")->required();
  an->add_option("--e", e, "power of f (overrides e=)")->check(CLI::PositiveNumber);
  an->add_option("--mode", mode, "filtration mode")->check(CLI::IsMember({"auto", "wh", "swh", "newton"}));
  an->add_option("--weights", weights, "comma-separated rational weights");
  an->add_flag("--force", force, "continue past a failed Kouchnirenko check, flagging the report");
  an->add_flag("--codemode-crosscheck", crosscheck, "also compute the compatibility table and compare");
  an->add_option("--json", json_path, "write the JSON report to PATH and print text to stdout");
  an->add_flag("--slow", slow, "allow configs marked slow=1");
  an->add_flag("--text", text, "print the text report instead of JSON");

  auto* co = app.add_subcommand("corpus", "Run a regression corpus directory");
  std::string dir;
  bool corpus_slow = false;
  unsigned jobs = 0;
  co->add_option("DIR", dir, "directory of NAME.cfg / NAME.expect.json pairs")->required()->check(CLI::ExistingDirectory);
  co->add_flag("--slow", corpus_slow, "include entries marked slow=1");
  co->add_option("--jobs", jobs, "parallel analyses (default: hardware threads)");

  auto* fa = app.add_subcommand("family", "Print the config of a parametric family member");
  std::string fname, params;
  fa->add_option("NAME", fname, "fna or abpq")->required();
  fa->add_option("--params", params, "k=v,... e.g. n=2,a=3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int rc = app.exit(ex);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (an->parsed()) return analyze(file, e, mode, weights, force, crosscheck, json_path, slow, text);
    if (co->parsed()) {
      CorpusSummary s = corpus_run(dir, corpus_slow, jobs);
      std::cout << s.table();
      return s.exit_code();
    }
    if (fa->parsed()) {
      std::cout << render_config(family_generate(fname, parse_params(params)));
      return 0;
    }
  } catch (const ConfigError& ex) {
    std::cerr << "INVALID_CONFIG: " << ex.what() << "\n";
    return 2;
  } catch (const ParseError& ex) {
    std::cerr << "SYNTAX: " << ex.what() << "\n";
    return 2;
  } catch (const AnalysisError& ex) {
    std::cerr << error_name(ex.code()) << ": " << ex.what() << "\n";
    return exit_code(ex.code());
  } catch (const std::exception& ex) {
    std::cerr << "INTERNAL: " << ex.what() << "\n";
    return 7;
  }
  return 0;
}
