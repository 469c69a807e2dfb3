#include "singspec/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace singspec {

ExponentVector::ExponentVector(int nvars) : n_(nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw std::invalid_argument("unsupported number of variables: " + std::to_string(nvars));
}

ExponentVector::ExponentVector(std::initializer_list<int> exps)
    : ExponentVector(static_cast<int>(exps.size())) {
  int i = 0;
  for (int v : exps) e_[i++] = v;
}

ExponentVector::ExponentVector(const std::vector<int>& exps)
    : ExponentVector(static_cast<int>(exps.size())) {
  for (int i = 0; i < n_; ++i) e_[i] = exps[i];
}

int ExponentVector::degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool ExponentVector::is_pure_power(int* axis) const {
  int found = -1;
  for (int i = 0; i < n_; ++i) {
    if (e_[i] == 0) continue;
    if (found >= 0) return false;
    found = i;
  }
  if (found < 0) return false;
  if (axis) *axis = found;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  ExponentVector r = *this;
  for (int i = 0; i < n_; ++i) r.e_[i] += o.e_[i];
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
  ExponentVector r = *this;
  for (int i = 0; i < n_; ++i) r.e_[i] -= o.e_[i];
  return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& o) const {
  ExponentVector r = *this;
  for (int i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  return r;
}

std::vector<int> ExponentVector::to_vector() const {
  return std::vector<int>(e_.begin(), e_.begin() + n_);
}

ExponentVector ExponentVector::ones(int nvars) {
  ExponentVector r(nvars);
  for (int i = 0; i < nvars; ++i) r.e_[i] = 1;
  return r;
}

ExponentVector ExponentVector::unit(int nvars, int axis, int power) {
  ExponentVector r(nvars);
  r.e_[axis] = power;
  return r;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = static_cast<std::size_t>(v.size());
  for (int i = 0; i < v.size(); ++i) h = h * 1000003u ^ static_cast<std::size_t>(v[i]);
  return h;
}

std::vector<std::string> default_variable_names(int nvars) {
  static const char* xyz[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i)
    names.push_back(nvars <= 3 ? std::string(xyz[i]) : "x" + std::to_string(i + 1));
  return names;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(ExponentVector(nvars), c);
  return p;
}

Polynomial Polynomial::monomial(const ExponentVector& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<ExponentVector> Polynomial::support() const {
  std::vector<ExponentVector> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [e, c] : terms_) d = std::min(d, e.degree());
  return d;
}

Polynomial Polynomial::derivative(int axis) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    ExponentVector d = e;
    d[axis] -= 1;
    r.add_term(d, c * Rational(e[axis]));
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Polynomial Polynomial::shifted(const ExponentVector& e) const {
  Polynomial r(nvars_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(t + e, c);
  return r;
}

std::string Polynomial::render(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then lexicographically larger first.
  std::vector<std::pair<ExponentVector, Rational>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    Rational mag = abs(c);
    if (c.sign() < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    bool wrote = false;
    if (mag != Rational(1) || e.is_zero()) {
      os << mag.str();
      wrote = true;
    }
    for (int i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars.at(i);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial poly_pow(const Polynomial& p, int k) {
  if (k < 1) throw std::invalid_argument("poly_pow requires k >= 1");
  Polynomial result = p;
  Polynomial base = p;
  --k;
  // Square-and-multiply.
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::vector<Polynomial> jacobian(const Polynomial& f) {
  std::vector<Polynomial> j;
  for (int i = 0; i < f.nvars(); ++i) j.push_back(f.derivative(i));
  return j;
}

}  // namespace singspec
