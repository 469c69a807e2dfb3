#pragma once

#include <string>

#include "singspec/analysis.hpp"

namespace singspec {

enum class Format { json, text };

/// JSON keys in a fixed order, rationals as "p/q" strings. Text mode prints
/// one line per quantity followed by "=> ..." verdict lines.
std::string render_report(const Report& r, Format format);

/// Inverse of the JSON rendering. Throws std::invalid_argument on a
/// malformed document.
Report report_from_json(const std::string& text);

}  // namespace singspec
