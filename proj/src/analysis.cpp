#include "singspec/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <regex>
#include <sstream>

#include "singspec/parser.hpp"

namespace singspec {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw ConfigError("bad boolean for " + key + ": " + v);
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    int x = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for " + key + ": " + v);
  }
}

/// x,y,z up to the last one used, or x1..xN.
std::vector<std::string> infer_vars(const std::string& text) {
  std::regex ident("[A-Za-z_][A-Za-z_0-9]*");
  int xyz = 0, indexed = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it) {
    std::string id = it->str();
    if (id == "x") xyz = std::max(xyz, 1);
    else if (id == "y") xyz = std::max(xyz, 2);
    else if (id == "z") xyz = std::max(xyz, 3);
    else if (std::regex_match(id, std::regex("x[1-9][0-9]*"))) indexed = std::max(indexed, std::stoi(id.substr(1)));
    else throw ConfigError("cannot infer variables from identifier '" + id + "'; set vars=");
  }
  if (indexed > 0 && xyz > 1) throw ConfigError("mixed variable naming; set vars=");
  if (indexed > 0) return default_variable_names(std::max(indexed, 4));
  return default_variable_names(std::max(xyz, 1));
}

}  // namespace

void AnalysisConfig::finalize() {
  if (trim(f_text).empty()) throw ConfigError("missing f=");
  if (vars.empty()) vars = infer_vars(f_text);
  f = parse_poly(f_text, vars);
  if (e < 1) throw ConfigError("e must be a positive integer");
  if (mode != "auto" && mode != "wh" && mode != "swh" && mode != "newton") throw ConfigError("unknown mode " + mode);
  if (mode == "swh" && !weights) throw ConfigError("mode=swh requires weights=");
  if (mode != "swh" && mode != "wh" && weights) throw ConfigError("weights= is only used with mode=swh or mode=wh");
  if (weights && weights->w.size() != vars.size()) throw ConfigError("weights= needs one weight per variable");
}

AnalysisConfig parse_config(const std::string& text) {
  AnalysisConfig c;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "f") c.f_text = value;
    else if (key == "vars") c.vars = split_list(value);
    else if (key == "e") c.e = parse_int(key, value);
    else if (key == "mode") c.mode = value;
    else if (key == "weights") {
      WeightVector w;
      try {
        for (const auto& item : split_list(value)) w.w.push_back(Rational::parse(item));
      } catch (const std::invalid_argument&) {
        throw ConfigError("bad weights: " + value);
      }
      c.weights = w;
    }
    else if (key == "force") c.force = parse_bool(key, value);
    else if (key == "codemode" || key == "codemode_crosscheck") c.codemode_crosscheck = parse_bool(key, value);
    else if (key == "slow") c.slow = parse_bool(key, value);
    else if (key == "grid_span") c.grid_span = parse_int(key, value);
    else if (key == "name") c.name = value;
    else throw ConfigError("line " + std::to_string(lineno) + ": unknown key " + key);
  }
  c.finalize();
  return c;
}

AnalysisConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string render_config(const AnalysisConfig& c) {
  std::ostringstream os;
  if (!c.name.empty()) os << "name=" << c.name << "\n";
  os << "f=" << c.f_text << "\n";
  os << "vars=";
  for (std::size_t i = 0; i < c.vars.size(); ++i) os << (i ? "," : "") << c.vars[i];
  os << "\ne=" << c.e << "\nmode=" << c.mode << "\n";
  if (c.weights) {
    os << "weights=";
    for (std::size_t i = 0; i < c.weights->w.size(); ++i) os << (i ? "," : "") << c.weights->w[i].str();
    os << "\n";
  }
  if (c.force) os << "force=1\n";
  if (c.codemode_crosscheck) os << "codemode=1\n";
  if (c.slow) os << "slow=1\n";
  if (c.grid_span) os << "grid_span=" << c.grid_span << "\n";
  return os.str();
}

const Verdict* Report::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c.verdict;
  return nullptr;
}

bool same_content(const Report& a, const Report& b) {
  auto checks_equal = [](const std::vector<NamedVerdict>& x, const std::vector<NamedVerdict>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].name != y[i].name || x[i].verdict.status != y[i].verdict.status ||
          x[i].verdict.detail != y[i].verdict.detail)
        return false;
    return true;
  };
  return a.f == b.f && a.n == b.n && a.e == b.e && a.mode == b.mode && a.mu == b.mu && a.tau_e == b.tau_e &&
         a.alpha_1 == b.alpha_1 && a.spectrum == b.spectrum && a.tjurina_spectrum == b.tjurina_spectrum &&
         a.missing == b.missing && a.graded_blocks == b.graded_blocks && a.codemode_blocks == b.codemode_blocks &&
         a.sigma_f == b.sigma_f && a.sigma_pp == b.sigma_pp && a.bs_bound == b.bs_bound &&
         a.bs_actual == b.bs_actual && a.hertling_gap == b.hertling_gap && checks_equal(a.checks, b.checks) &&
         a.unreliable == b.unreliable && a.warnings == b.warnings;
}

std::vector<GradedBlock> to_blocks(const BigradedTable& t, const GradedVerdict& v) {
  std::vector<GradedBlock> out;
  for (const auto& [gamma, entries] : t.blocks()) {
    GradedBlock b;
    b.gamma = gamma;
    b.quasi_weight = gamma + Rational(t.n());
    for (const auto& e : entries) b.entries.push_back({e.alpha, e.mult});
    auto it = v.block_symmetric.find(gamma);
    b.symmetric = it != v.block_symmetric.end() && it->second;
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

Verdict pass() { return {Status::pass, ""}; }
Verdict fail(std::string d) { return {Status::fail, std::move(d)}; }
Verdict na() { return {Status::not_applicable, ""}; }

/// [f]·V^α ⊂ V^{α+1} on every monomial below the corner, which covers every
/// grid level and every monomial generator.
Verdict check_prop7(const FiltrationLadder& L) {
  const auto& alg = L.algebra();
  for (const auto& m : alg.monomials()) {
    SparseVec c = alg.class_of(L.f().shifted(m));
    auto lv = L.vbasis().level_of(c);
    Rational need = L.level(m) + Rational(1);
    if (lv && *lv < need) {
      std::ostringstream os;
      os << "f*x^(";
      for (int i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
      os << ") has level " << lv->str() << " < " << need.str();
      return fail(os.str());
    }
  }
  return pass();
}

Verdict compare_tables(const BigradedTable& normative, const BigradedTable& compat) {
  if (normative == compat) return pass();
  auto has = [](const BigradedTable& t, const BigradedEntry& e) {
    return std::find(t.entries().begin(), t.entries().end(), e) != t.entries().end();
  };
  std::ostringstream os;
  os << "normative and compatibility tables differ:";
  for (const auto& e : normative.entries())
    if (!has(compat, e)) os << " normative (" << e.alpha << ", gamma " << e.gamma << "):" << e.mult;
  for (const auto& e : compat.entries())
    if (!has(normative, e)) os << " compatibility (" << e.alpha << ", gamma " << e.gamma << "):" << e.mult;
  return fail(os.str());
}

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<std::pair<std::string, double>>& out) : out_(out) {}
  void lap(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    out_.emplace_back(stage, std::chrono::duration<double>(now - last_).count());
    last_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& out_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

Report run_analysis(const AnalysisConfig& cfg) {
  Report r;
  Stopwatch clock(r.timing);
  const Polynomial& f = cfg.f;
  const int n = f.nvars();
  r.f = f.render(cfg.vars);
  r.n = n;
  r.e = cfg.e;

  Mode mode;
  std::optional<WeightVector> weights = cfg.weights;
  if (cfg.mode == "auto") {
    ModeChoice mc = detect_mode(f);
    mode = mc.mode;
    weights = mc.weights;
  } else {
    mode = cfg.mode == "wh" ? Mode::wh : cfg.mode == "swh" ? Mode::swh : Mode::newton;
  }
  r.mode = mode_name(mode);
  auto cache = std::make_shared<StandardBasisCache>();
  FiltrationLadder L = FiltrationLadder::build(f, cfg.e, mode, weights, cfg.force, cache, cfg.grid_span);
  r.unreliable = L.guards().unreliable;
  r.warnings = L.guards().warnings;
  clock.lap("ladder");

  Spectrum sp = steenbrink_spectrum(L), tsp = tjurina_spectrum(L);
  Spectrum ms = missing_spectrum(sp, tsp);
  r.mu = L.mu();
  r.tau_e = L.tau();
  r.alpha_1 = L.alpha_1();
  r.spectrum = sp.poly;
  r.tjurina_spectrum = tsp.poly;
  r.missing = ms.poly;
  clock.lap("spectra");

  BigradedTable table = bigraded_table(L, ms);
  GradedVerdict gv = check_graded_symmetry(table, r.alpha_1);
  r.graded_blocks = to_blocks(table, gv);
  clock.lap("table");

  Verdict agreement = na();
  if (cfg.codemode_crosscheck) {
    try {
      BigradedTable ct = bigraded_table_codemode(L, ms);
      r.codemode_blocks = to_blocks(ct, check_graded_symmetry(ct, r.alpha_1));
      agreement = compare_tables(table, ct);
    } catch (const AnalysisError& ex) {
      agreement = fail(std::string("compatibility table: ") + error_name(ex.code()) + ": " + ex.what());
    }
    clock.lap("codemode");
  }

  // σ and Briançon–Skoda live on the e = 1 table.
  const bool distinct = r.mu != r.tau_e;
  Verdict bs = na(), sigma_order = na();
  {
    std::optional<FiltrationLadder> L1;
    const FiltrationLadder* l1 = &L;
    BigradedTable t1 = table;
    if (cfg.e != 1) {
      L1.emplace(FiltrationLadder::build(f, 1, mode, weights, true, cache, cfg.grid_span));
      l1 = &*L1;
      t1 = bigraded_table(*l1, missing_spectrum(steenbrink_spectrum(*l1), tjurina_spectrum(*l1)));
    }
    if (auto s = sigma_and_bs(*l1, t1)) {
      r.sigma_f = s->sigma_f;
      r.sigma_pp = s->sigma_pp;
      r.bs_bound = s->bs_bound;
      r.bs_actual = s->bs_actual;
      bs = s->bs_actual <= s->bs_bound
               ? pass()
               : fail("bs_actual " + std::to_string(s->bs_actual) + " > bound " + std::to_string(s->bs_bound));
      sigma_order = s->sigma_f <= s->sigma_pp ? pass()
                                              : fail("sigma_f " + s->sigma_f.str() + " > sigma_pp " + s->sigma_pp.str());
    }
  }
  clock.lap("sigma");

  if (!tsp.poly.empty()) r.hertling_gap = hertling_gap(tsp);

  // Verdicts.
  Verdict steen_sym = check_symmetry(sp, n);
  if (sp.poly.total() != r.mu) steen_sym = fail("total multiplicity differs from mu");
  r.checks.push_back({"spectrum_symmetry", steen_sym});
  r.checks.push_back({"graded_symmetry", distinct ? gv.overall : na()});
  r.checks.push_back({"minimal_partner", distinct ? gv.minimal_partner : na()});

  const Rational top = Rational(n) - r.alpha_1;
  Verdict prop3 = na(), prop5 = na(), cor2 = na();
  if (distinct) {
    prop3 = ms.poly.multiplicity(top) > 0 ? pass() : fail(top.str() + " is not missing");
    auto ents = ms.poly.entries();
    const Rational need = r.alpha_1 + Rational(cfg.e);
    if (ents.front().mult != 1) prop5 = fail("minimal missing number has multiplicity " + std::to_string(ents.front().mult));
    else if (ents.back().mult != 1) prop5 = fail("maximal missing number has multiplicity " + std::to_string(ents.back().mult));
    else if (ents.front().alpha < need) prop5 = fail("minimal missing number " + ents.front().alpha.str() + " < " + need.str());
    else prop5 = pass();
    const Rational half = Rational(n + cfg.e) / Rational(2);
    long low = 0;
    for (const auto& en : ents)
      if (en.alpha < half) low += en.mult;
    cor2 = Rational(2 * low) <= Rational(r.mu - r.tau_e)
               ? pass()
               : fail(std::to_string(low) + " missing numbers below " + half.str());
  }
  r.checks.push_back({"prop3", prop3});
  r.checks.push_back({"prop5", prop5});
  r.checks.push_back({"prop7", check_prop7(L)});
  r.checks.push_back({"cor2", cor2});
  r.checks.push_back({"briancon_skoda", bs});
  r.checks.push_back({"sigma_order", sigma_order});
  Verdict guards = pass();
  if (L.guards().unreliable) guards = fail(L.guards().warnings.empty() ? "guard failed" : L.guards().warnings.front());
  r.checks.push_back({"mode_guards", guards});
  r.checks.push_back({"missing_global_symmetry", distinct ? check_symmetry(ms, n) : na()});
  r.checks.push_back({"codemode_agreement", agreement});
  clock.lap("checks");
  return r;
}

}  // namespace singspec
