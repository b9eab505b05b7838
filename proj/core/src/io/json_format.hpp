#pragma once

// Private: JSON emission with 17 significant digits for every float.

#include <string>

#include "json.hpp"

namespace chaoskit::io::detail {

using json = nlohmann::ordered_json;

/// %.17g, with ".0" appended when the text would read as an integer.
/// Non-finite values become null.
[[nodiscard]] std::string format_double(double v);

/// Pretty-printed with two-space indent; arrays of scalars stay on one line.
[[nodiscard]] std::string dump(const json& j);

/// Parses, mapping syntax errors to validation_error.
[[nodiscard]] json parse(const std::string& text, const std::string& what);

[[nodiscard]] std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Optional double as number or null.
[[nodiscard]] json number_or_null(const double* v);

}  // namespace chaoskit::io::detail
