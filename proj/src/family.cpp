#include "singspec/family.hpp"

#include <sstream>

#include "singspec/polynomial.hpp"

namespace singspec {

namespace {

int need(const std::map<std::string, int>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw ConfigError("missing parameter " + key);
  return it->second;
}

}  // namespace

std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("expected k=v, got " + item);
    try {
      std::size_t used = 0;
      std::string v = item.substr(eq + 1);
      out[item.substr(0, eq)] = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::logic_error&) {
      throw ConfigError("non-integer value in " + item);
    }
  }
  return out;
}

AnalysisConfig family_generate(const std::string& name, const std::map<std::string, int>& params) {
  AnalysisConfig c;
  std::ostringstream f;
  if (name == "fna") {
    const int n = need(params, "n"), a = need(params, "a");
    if (n < 2 || n > 3) throw ConfigError("fna needs n in {2,3}");
    if (a < 2) throw ConfigError("fna needs a >= 2");
    c.vars = default_variable_names(n);
    for (int i = 0; i < n; ++i) f << (i ? "+" : "") << c.vars[i] << "^" << a * n - 1;
    f << "+";
    for (int i = 0; i < n; ++i) f << (i ? "*" : "") << c.vars[i] << "^" << a;
    c.name = "f_" + std::to_string(n) + "_" + std::to_string(a);
  } else if (name == "abpq") {
    const int a = need(params, "a"), b = need(params, "b"), p = need(params, "p"), q = need(params, "q");
    if (a < 2 || b < 2 || p < 1 || q < 1) throw ConfigError("abpq needs a,b >= 2 and p,q >= 1");
    if (p * b + q * a <= a * b) throw ConfigError("abpq needs p/a + q/b > 1");
    c.vars = default_variable_names(2);
    f << "x^" << a << "+y^" << b << "+x^" << p << "*y^" << q;
    c.name = "abpq_" + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(p) + "_" + std::to_string(q);
  } else {
    throw ConfigError("unknown family " + name);
  }
  c.f_text = f.str();
  c.finalize();
  return c;
}

}  // namespace singspec
