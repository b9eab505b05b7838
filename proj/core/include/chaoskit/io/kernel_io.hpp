#pragma once

#include <string>
#include <string_view>

#include "chaoskit/gaussian/symmetric_kernel.hpp"

namespace chaoskit::io {

/// {"dim": d, "order": n, "entries": [{"idx": [i1, ..., in], "val": v}, ...]}
/// Indices are 0-based and must be sorted non-decreasing and below dim.
/// Throws validation_error naming the offending field.
[[nodiscard]] gaussian::symmetric_kernel parse_kernel(std::string_view text);
[[nodiscard]] gaussian::symmetric_kernel load_kernel(const std::string& path);

/// Canonical text: one entry per line, entries in index order, values at
/// 17 significant digits. parse_kernel(format_kernel(k)) == k.
[[nodiscard]] std::string format_kernel(const gaussian::symmetric_kernel& k);
void save_kernel(const gaussian::symmetric_kernel& k, const std::string& path);

}  // namespace chaoskit::io
