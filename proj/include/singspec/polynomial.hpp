#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "singspec/rational.hpp"

namespace singspec {

inline constexpr int kMaxVars = 8;

/// Exponent vector ν ∈ ℕ^n with inline storage. Unused slots stay zero, so
/// the defaulted comparisons are lexicographic on the first n entries.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int nvars);
  ExponentVector(std::initializer_list<int> exps);
  explicit ExponentVector(const std::vector<int>& exps);

  int size() const { return n_; }
  int operator[](int i) const { return e_[i]; }
  int& operator[](int i) { return e_[i]; }

  int degree() const;
  bool is_zero() const { return degree() == 0; }
  /// Componentwise ≤, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;
  bool is_pure_power(int* axis = nullptr) const;

  ExponentVector operator+(const ExponentVector& o) const;
  /// Requires o.divides(*this).
  ExponentVector operator-(const ExponentVector& o) const;
  ExponentVector lcm(const ExponentVector& o) const;
  std::vector<int> to_vector() const;

  static ExponentVector ones(int nvars);
  static ExponentVector unit(int nvars, int axis, int power = 1);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::array<std::int32_t, kMaxVars> e_{};
  std::int32_t n_ = 0;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

/// Default variable names: x,y,z for n ≤ 3, otherwise x1..xN.
std::vector<std::string> default_variable_names(int nvars);

/// Multivariate polynomial with exact rational coefficients, stored as a
/// canonical term map without zero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(const ExponentVector& e, const Rational& c = Rational(1));

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const ExponentVector& e) const;
  /// Adds c·x^e; removes the term if the sum cancels.
  void add_term(const ExponentVector& e, const Rational& c);

  std::vector<ExponentVector> support() const;
  int total_degree() const;
  int order() const;  ///< lowest total degree of a term; 0 for the zero polynomial

  Polynomial derivative(int axis) const;
  Polynomial operator-() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// Multiplies every exponent by the monomial x^e.
  Polynomial shifted(const ExponentVector& e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Renders in the parser grammar, e.g. "x^6+y^5+x^3*y^3".
  std::string render(const std::vector<std::string>& vars) const;
  std::string render() const { return render(default_variable_names(nvars_)); }

 private:
  TermMap terms_;
  int nvars_ = 0;
};

/// Exact k-fold product, k ≥ 1.
Polynomial poly_pow(const Polynomial& p, int k);

/// The list (∂f/∂x_1, …, ∂f/∂x_n).
std::vector<Polynomial> jacobian(const Polynomial& f);

}  // namespace singspec
