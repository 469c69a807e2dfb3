#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "singspec/polynomial.hpp"

namespace singspec {

/// Syntax error in polynomial text; `position()` is the 0-based offset of
/// the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses sums of products of rational coefficients and `var^k` powers.
/// Factors must be joined by an explicit `*`; whitespace is ignored.
Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars);

}  // namespace singspec
