#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "singspec/polynomial.hpp"

namespace singspec {

/// Negative-degree reverse-lexicographic order (`ds`): a smaller total
/// degree is larger, ties are broken reverse-lexicographically. The
/// constant monomial 1 is the largest monomial.
class MonomialOrder {
 public:
  explicit MonomialOrder(int nvars = 0) : nvars_(nvars) {}
  int nvars() const { return nvars_; }

  /// Sign of a - b in the order: +1 if a > b, -1 if a < b, 0 if equal.
  static int compare(const ExponentVector& a, const ExponentVector& b, int adeg, int bdeg);
  static int compare(const ExponentVector& a, const ExponentVector& b) {
    return compare(a, b, a.degree(), b.degree());
  }
  bool greater(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) > 0;
  }

  /// Largest monomial of a nonzero polynomial.
  ExponentVector leading_exponent(const Polynomial& p) const;

 private:
  int nvars_;
};

/// Dimension of a quotient; `infinite` when not finite.
struct Colength {
  bool infinite = false;
  std::int64_t value = 0;

  static Colength finite(std::int64_t v) { return {false, v}; }
  static Colength unbounded() { return {true, 0}; }
  friend bool operator==(const Colength&, const Colength&) = default;
};

namespace detail {
struct LTerm {
  ExponentVector e;
  int deg;
  mpq_class c;
};
/// Polynomial with terms sorted decreasingly in the local order.
struct LPoly {
  std::vector<LTerm> t;
  int maxdeg = 0;
  bool zero() const { return t.empty(); }
  int ecart() const { return t.empty() ? 0 : maxdeg - t.front().deg; }
};
}  // namespace detail

/// Standard basis of an ideal of the local ring Q[x]_(x) under the `ds`
/// order. When `corner_degree()` is set, the ideal contains every monomial
/// of that total degree and all polynomials are stored truncated below it.
class StandardBasis {
 public:
  const MonomialOrder& order() const { return order_; }
  int nvars() const { return order_.nvars(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  /// Minimal monomial generators of the leading ideal, including the
  /// degree-D monomials implied by the corner.
  const std::vector<ExponentVector>& leading_ideal() const { return leading_; }
  std::optional<int> corner_degree() const { return corner_; }
  bool reduced() const { return false; }
  bool is_unit_ideal() const;

  const std::vector<detail::LPoly>& local_generators() const { return lgens_; }
  /// Whether x^e lies in the leading ideal.
  bool in_leading_ideal(const ExponentVector& e) const;

 private:
  friend StandardBasis standard_basis(const std::vector<Polynomial>&, const MonomialOrder&,
                                      std::optional<int>);
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<detail::LPoly> lgens_;
  std::vector<ExponentVector> leading_;
  std::optional<int> corner_;
};

/// Computes a standard basis with Mora's tangent-cone algorithm. A caller
/// that knows m^D ⊂ ideal may pass D as `corner_hint`; the corner is also
/// detected on the fly once the leading ideal contains all degree-D
/// monomials.
StandardBasis standard_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                             std::optional<int> corner_hint = std::nullopt);

/// Mora weak normal form. Zero iff p lies in the ideal; otherwise the
/// result is u·p reduced for some unit u, with a non-reducible leading term.
Polynomial normal_form(const Polynomial& p, const StandardBasis& sb);

/// Fully reduced normal form, a linear combination of standard monomials.
/// Requires a corner (finite colength).
Polynomial reduced_normal_form(const Polynomial& p, const StandardBasis& sb);

bool ideal_contains(const StandardBasis& sb, const Polynomial& p);

Colength colength(const StandardBasis& sb);

/// Monomials outside the leading ideal, in decreasing local order.
/// Throws std::domain_error when the colength is infinite.
std::vector<ExponentVector> standard_monomials(const StandardBasis& sb);

/// Re-checks the standard-basis criterion: every s-pair of the returned
/// generators has Mora normal form zero.
bool verify_spair_criterion(const StandardBasis& sb);

/// Keeps the minimal elements of a set of exponent vectors.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens);

/// Memo of standard bases keyed by the canonical rendering of the
/// generator list. Synchronized, so one cache may back parallel callers.
class StandardBasisCache {
 public:
  std::shared_ptr<const StandardBasis> get(const std::vector<Polynomial>& gens,
                                           const MonomialOrder& order,
                                           std::optional<int> corner_hint = std::nullopt);
  std::size_t size() const;
  std::size_t hits() const { return hits_; }

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<const StandardBasis>> memo_;
  std::size_t hits_ = 0;
};

}  // namespace singspec
