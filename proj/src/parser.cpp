#include "singspec/parser.hpp"

#include <algorithm>
#include <cctype>

namespace singspec {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxVars)
      throw ParseError("unsupported variable count", 0);
    const int n = static_cast<int>(vars_.size());
    Polynomial result(n);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [e, c] = term();
      result.add_term(e, c * Rational(sign));
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  std::pair<ExponentVector, Rational> term() {
    ExponentVector e(static_cast<int>(vars_.size()));
    Rational c(1);
    factor(e, c);
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      factor(e, c);
    }
    skip_ws();
    if (!at_end() && peek() != '+' && peek() != '-')
      throw ParseError("unexpected character '" + std::string(1, peek()) + "'", pos_);
    return {e, c};
  }

  void factor(ExponentVector& e, Rational& c) {
    skip_ws();
    if (at_end()) throw ParseError("expected factor", pos_);
    char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mpz_class num(digits());
      mpz_class den(1);
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected denominator", pos_);
        den = mpz_class(digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      c *= Rational(num, den);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t at = pos_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        name += text_[pos_++];
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", at);
      int axis = static_cast<int>(it - vars_.begin());
      int power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        std::size_t pat = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("exponent must be a positive integer", pat);
        std::string d = digits();
        if (d.size() > 6) throw ParseError("exponent too large", pat);
        power = std::stoi(d);
        if (power <= 0) throw ParseError("exponent must be a positive integer", pat);
      }
      e[axis] += power;
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, ch) + "'", pos_);
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += text_[pos_++];
    return d;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

}  // namespace singspec
