#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singspec/rational.hpp"

namespace singspec {

/// A finite sum Σ mult·t^α with rational exponents, i.e. a spectrum viewed
/// as a generating function. Exponents are kept as integer numerators over
/// one common denominator.
class SpectrumPoly {
 public:
  struct Entry {
    Rational alpha;
    std::int64_t mult;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SpectrumPoly() = default;
  /// Entries may be unsorted and repeated; zero multiplicities are dropped.
  /// Throws std::invalid_argument on a negative multiplicity.
  explicit SpectrumPoly(const std::vector<Entry>& entries);

  void add(const Rational& alpha, std::int64_t mult);

  std::vector<Entry> entries() const;
  bool empty() const { return terms_.empty(); }
  std::int64_t total() const;
  std::int64_t multiplicity(const Rational& alpha) const;
  const mpz_class& common_denominator() const { return den_; }
  Rational min() const;
  Rational max() const;

  /// Expands multiplicities: exponents weakly increasing, one per unit.
  std::vector<Rational> expanded() const;

  /// True iff α ↦ center·2 − α maps the multiset onto itself.
  bool palindromic_about(const Rational& center) const;

  friend bool operator==(const SpectrumPoly& a, const SpectrumPoly& b) {
    return a.entries() == b.entries();
  }

  std::string str() const;

 private:
  void rescale(const mpz_class& new_den);

  // (numerator over den_, multiplicity), sorted by numerator.
  std::vector<std::pair<mpz_class, std::int64_t>> terms_;
  mpz_class den_{1};
};

/// Univariate polynomial with integer coefficients; index = power of s.
using IntPoly = std::vector<mpz_class>;

/// Exact quotient numer/denom in ℤ[s], re-read with s = t^{1/d}.
/// Throws std::domain_error on a zero divisor, on inexact division, or
/// when the quotient has a negative coefficient.
SpectrumPoly puiseux_div(const IntPoly& numer, const IntPoly& denom, long d);

/// Product of generating functions (exponentwise convolution).
SpectrumPoly spectrum_product(const SpectrumPoly& a, const SpectrumPoly& b);

IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b);

}  // namespace singspec
