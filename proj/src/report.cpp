#include "singspec/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace singspec {

using ojson = nlohmann::ordered_json;

namespace {

ojson spectrum_json(const SpectrumPoly& s) {
  ojson a = ojson::array();
  for (const auto& e : s.entries()) a.push_back({{"alpha", e.alpha.str()}, {"mult", e.mult}});
  return a;
}

ojson blocks_json(const std::vector<GradedBlock>& blocks) {
  ojson a = ojson::array();
  for (const auto& b : blocks) {
    ojson entries = ojson::array();
    for (const auto& e : b.entries) entries.push_back({{"alpha", e.alpha.str()}, {"mult", e.mult}});
    a.push_back({{"gamma", b.gamma.str()},
                 {"quasi_weight", b.quasi_weight.str()},
                 {"entries", entries},
                 {"symmetric", b.symmetric}});
  }
  return a;
}

template <class T, class F>
ojson opt(const std::optional<T>& v, F conv) {
  return v ? ojson(conv(*v)) : ojson(nullptr);
}

std::string hertling_sign(const std::optional<Rational>& g) {
  if (!g) return "n/a";
  return g->sign() < 0 ? "negative" : g->sign() == 0 ? "zero" : "positive";
}

Rational rat(const ojson& j) { return Rational::parse(j.get<std::string>()); }

SpectrumPoly spectrum_from(const ojson& a) {
  SpectrumPoly s;
  for (const auto& e : a) s.add(rat(e.at("alpha")), e.at("mult").get<std::int64_t>());
  return s;
}

std::vector<GradedBlock> blocks_from(const ojson& a) {
  std::vector<GradedBlock> out;
  for (const auto& b : a) {
    GradedBlock g;
    g.gamma = rat(b.at("gamma"));
    g.quasi_weight = rat(b.at("quasi_weight"));
    for (const auto& e : b.at("entries")) g.entries.push_back({rat(e.at("alpha")), e.at("mult").get<std::int64_t>()});
    g.symmetric = b.at("symmetric").get<bool>();
    out.push_back(std::move(g));
  }
  return out;
}

Status status_from(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "not_applicable") return Status::not_applicable;
  throw std::invalid_argument("unknown status " + s);
}

std::string list_str(const SpectrumPoly& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& a : s.expanded()) {
    os << (first ? "" : ", ") << a.str();
    first = false;
  }
  os << "}";
  return os.str();
}

std::string render_json(const Report& r) {
  ojson j;
  j["n"] = r.n;
  j["e"] = r.e;
  j["mu"] = r.mu;
  j["tau_e"] = r.tau_e;
  j["alpha_1"] = r.alpha_1.str();
  j["spectrum"] = spectrum_json(r.spectrum);
  j["tjurina_spectrum"] = spectrum_json(r.tjurina_spectrum);
  j["missing"] = spectrum_json(r.missing);
  j["graded_blocks"] = blocks_json(r.graded_blocks);
  auto str = [](const Rational& x) { return x.str(); };
  auto id = [](long x) { return x; };
  j["sigma_f"] = opt(r.sigma_f, str);
  j["sigma_pp"] = opt(r.sigma_pp, str);
  j["bs_bound"] = opt(r.bs_bound, id);
  j["bs_actual"] = opt(r.bs_actual, id);
  j["hertling_gap"] = opt(r.hertling_gap, str);
  j["hertling_sign"] = hertling_sign(r.hertling_gap);
  ojson checks = ojson::object();
  for (const auto& c : r.checks) {
    ojson v = {{"status", status_name(c.verdict.status)}};
    if (!c.verdict.detail.empty()) v["detail"] = c.verdict.detail;
    checks[c.name] = v;
  }
  j["checks"] = checks;
  j["f"] = r.f;
  j["mode"] = r.mode;
  j["unreliable"] = r.unreliable;
  j["warnings"] = r.warnings;
  if (r.codemode_blocks) j["codemode_blocks"] = blocks_json(*r.codemode_blocks);
  ojson timing = ojson::object();
  for (const auto& [stage, secs] : r.timing) timing[stage] = secs;
  j["timing"] = timing;
  return j.dump(2) + "\n";
}

const char* verdict_word(Status s) {
  return s == Status::pass ? "holds" : s == Status::fail ? "FAILS" : "not applicable";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "f = " << r.f << "\n";
  os << "n = " << r.n << ", e = " << r.e << ", mode = " << r.mode << "\n";
  os << "mu = " << r.mu << "\n";
  os << "tau^(" << r.e << ") = " << r.tau_e << "\n";
  os << "alpha_1 = " << r.alpha_1.str() << "\n";
  os << "Steenbrink spectrum: " << list_str(r.spectrum) << "\n";
  os << "Tjurina spectrum: " << list_str(r.tjurina_spectrum) << "\n";
  os << "Missing spectral numbers: " << list_str(r.missing) << "\n";
  for (const auto& b : r.graded_blocks) {
    os << "gamma = " << b.gamma.str() << " (quasi-weight " << b.quasi_weight.str() << "):";
    for (const auto& e : b.entries)
      for (std::int64_t k = 0; k < e.mult; ++k) os << " " << e.alpha.str();
    os << (b.symmetric ? "" : "  [not symmetric]") << "\n";
  }
  if (r.sigma_f) os << "sigma_f = " << r.sigma_f->str() << ", sigma'' = " << r.sigma_pp->str() << "\n";
  if (r.bs_bound) os << "Briancon-Skoda exponent " << *r.bs_actual << " with bound " << *r.bs_bound << "\n";
  if (r.hertling_gap) os << "Hertling gap = " << r.hertling_gap->str() << " (" << hertling_sign(r.hertling_gap) << ")\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  auto line = [&](const char* what, const char* key) {
    if (const Verdict* v = r.check(key)) {
      os << "=> " << what << " " << verdict_word(v->status) << ".";
      if (!v->detail.empty()) os << " (" << v->detail << ")";
      os << "\n";
    }
  };
  line("Symmetry of spectrum", "spectrum_symmetry");
  line("Graded symmetry", "graded_symmetry");
  line("Minimal partner", "minimal_partner");
  for (const char* k : {"prop3", "prop5", "prop7", "cor2", "briancon_skoda", "sigma_order", "mode_guards",
                        "missing_global_symmetry", "codemode_agreement"})
    line(k, k);
  return os.str();
}

}  // namespace

std::string render_report(const Report& r, Format format) {
  return format == Format::json ? render_json(r) : render_text(r);
}

Report report_from_json(const std::string& text) {
  try {
    ojson j = ojson::parse(text);
    Report r;
    r.n = j.at("n").get<int>();
    r.e = j.at("e").get<int>();
    r.mu = j.at("mu").get<long>();
    r.tau_e = j.at("tau_e").get<long>();
    r.alpha_1 = rat(j.at("alpha_1"));
    r.spectrum = spectrum_from(j.at("spectrum"));
    r.tjurina_spectrum = spectrum_from(j.at("tjurina_spectrum"));
    r.missing = spectrum_from(j.at("missing"));
    r.graded_blocks = blocks_from(j.at("graded_blocks"));
    if (!j.at("sigma_f").is_null()) r.sigma_f = rat(j["sigma_f"]);
    if (!j.at("sigma_pp").is_null()) r.sigma_pp = rat(j["sigma_pp"]);
    if (!j.at("bs_bound").is_null()) r.bs_bound = j["bs_bound"].get<long>();
    if (!j.at("bs_actual").is_null()) r.bs_actual = j["bs_actual"].get<long>();
    if (!j.at("hertling_gap").is_null()) r.hertling_gap = rat(j["hertling_gap"]);
    for (const auto& [name, v] : j.at("checks").items())
      r.checks.push_back({name, {status_from(v.at("status").get<std::string>()), v.value("detail", "")}});
    r.f = j.at("f").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.unreliable = j.at("unreliable").get<bool>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("codemode_blocks")) r.codemode_blocks = blocks_from(j["codemode_blocks"]);
    if (j.contains("timing"))
      for (const auto& [stage, secs] : j["timing"].items()) r.timing.emplace_back(stage, secs.get<double>());
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed report: ") + ex.what());
  }
}

}  // namespace singspec
