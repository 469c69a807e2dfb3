#include "singspec/spectrum_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace singspec {

SpectrumPoly::SpectrumPoly(const std::vector<Entry>& entries) {
  for (const auto& e : entries) add(e.alpha, e.mult);
}

void SpectrumPoly::rescale(const mpz_class& new_den) {
  if (new_den == den_) return;
  mpz_class factor = new_den / den_;
  for (auto& [num, m] : terms_) num *= factor;
  den_ = new_den;
}

void SpectrumPoly::add(const Rational& alpha, std::int64_t mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity in spectrum");
  if (mult == 0) return;
  rescale(lcm(den_, alpha.den()));
  mpz_class num = alpha.num() * (den_ / alpha.den());
  auto it = std::lower_bound(terms_.begin(), terms_.end(), num,
                             [](const auto& t, const mpz_class& v) { return t.first < v; });
  if (it != terms_.end() && it->first == num)
    it->second += mult;
  else
    terms_.insert(it, {num, mult});
}

std::vector<SpectrumPoly::Entry> SpectrumPoly::entries() const {
  std::vector<Entry> out;
  out.reserve(terms_.size());
  for (const auto& [num, m] : terms_) out.push_back({Rational(num, den_), m});
  return out;
}

std::int64_t SpectrumPoly::total() const {
  std::int64_t t = 0;
  for (const auto& [num, m] : terms_) t += m;
  return t;
}

std::int64_t SpectrumPoly::multiplicity(const Rational& alpha) const {
  mpz_class scaled = alpha.num() * den_;
  if (scaled % alpha.den() != 0) return 0;
  mpz_class num = scaled / alpha.den();
  for (const auto& [n, m] : terms_)
    if (n == num) return m;
  return 0;
}

Rational SpectrumPoly::min() const {
  if (terms_.empty()) throw std::logic_error("min of empty spectrum");
  return Rational(terms_.front().first, den_);
}

Rational SpectrumPoly::max() const {
  if (terms_.empty()) throw std::logic_error("max of empty spectrum");
  return Rational(terms_.back().first, den_);
}

std::vector<Rational> SpectrumPoly::expanded() const {
  std::vector<Rational> out;
  for (const auto& [num, m] : terms_)
    for (std::int64_t i = 0; i < m; ++i) out.emplace_back(num, den_);
  return out;
}

bool SpectrumPoly::palindromic_about(const Rational& center) const {
  // Integer comparison: num_i + num_{k+1-i} == 2·center·den.
  mpz_class twice = 2 * center.num() * den_;
  if (twice % center.den() != 0) return terms_.empty();
  twice /= center.den();
  std::size_t k = terms_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& a = terms_[i];
    const auto& b = terms_[k - 1 - i];
    if (a.first + b.first != twice || a.second != b.second) return false;
  }
  return true;
}

std::string SpectrumPoly::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& e : entries()) {
    if (!first) os << ", ";
    first = false;
    os << e.alpha.str();
    if (e.mult != 1) os << ":" << e.mult;
  }
  os << "}";
  return os.str();
}

IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

namespace {
void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
}  // namespace

SpectrumPoly puiseux_div(const IntPoly& numer, const IntPoly& denom, long d) {
  if (d <= 0) throw std::domain_error("common denominator must be positive");
  IntPoly num = numer, den = denom;
  trim(num);
  trim(den);
  if (den.empty()) throw std::domain_error("zero divisor in puiseux_div");
  // Long division from the top coefficient; exactness requires every
  // step to divide and the remainder to vanish.
  IntPoly quot;
  if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, mpz_class(0));
  const mpz_class& lead = den.back();
  while (!num.empty() && num.size() >= den.size()) {
    std::size_t shift = num.size() - den.size();
    if (num.back() % lead != 0) throw std::domain_error("inexact division in puiseux_div");
    mpz_class q = num.back() / lead;
    quot[shift] = q;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
    trim(num);
  }
  if (!num.empty()) throw std::domain_error("inexact division in puiseux_div");
  SpectrumPoly sp;
  for (std::size_t j = 0; j < quot.size(); ++j) {
    if (quot[j] == 0) continue;
    if (quot[j] < 0 || !quot[j].fits_slong_p())
      throw std::domain_error("quotient is not a spectrum (negative coefficient)");
    sp.add(Rational(static_cast<long>(j), d), quot[j].get_si());
  }
  return sp;
}

SpectrumPoly spectrum_product(const SpectrumPoly& a, const SpectrumPoly& b) {
  SpectrumPoly r;
  for (const auto& ea : a.entries())
    for (const auto& eb : b.entries()) r.add(ea.alpha + eb.alpha, ea.mult * eb.mult);
  return r;
}

}  // namespace singspec
