#pragma once

#include <map>
#include <string>

#include "singspec/analysis.hpp"

namespace singspec {

/// "fna" with n ∈ {2,3}, a ≥ 2: Σ x_i^{an−1} + (x_1⋯x_n)^a.
/// "abpq" with p/a + q/b > 1: x^a + y^b + x^p y^q.
/// Throws ConfigError for unknown names, missing keys or out-of-domain values.
AnalysisConfig family_generate(const std::string& name, const std::map<std::string, int>& params);

/// "k=v,k=v" with integer values.
std::map<std::string, int> parse_params(const std::string& text);

}  // namespace singspec
