#include "chaoskit/io/kernel_io.hpp"

#include <cmath>
#include <limits>

#include "chaoskit/error.hpp"
#include "json_format.hpp"

namespace chaoskit::io {

using detail::json;

namespace {

std::uint64_t require_uint(const json& j, const std::string& field) {
  if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw validation_error("kernel field '" + field + "' must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace

gaussian::symmetric_kernel parse_kernel(std::string_view text) {
  const json j = detail::parse(std::string(text), "kernel file");
  if (!j.is_object()) throw validation_error("kernel file must hold one JSON object");
  for (const char* key : {"dim", "order", "entries"}) {
    if (!j.contains(key)) throw validation_error(std::string("kernel field '") + key + "' is missing");
  }
  const auto dim = require_uint(j["dim"], "dim");
  const auto order = require_uint(j["order"], "order");
  if (dim == 0) throw validation_error("kernel field 'dim' must be positive");
  if (order > 64) throw validation_error("kernel field 'order' is unreasonably large");
  if (!j["entries"].is_array()) throw validation_error("kernel field 'entries' must be an array");

  gaussian::symmetric_kernel k(dim, static_cast<unsigned>(order));
  std::size_t pos = 0;
  for (const auto& e : j["entries"]) {
    const std::string where = "entries[" + std::to_string(pos++) + "]";
    if (!e.is_object() || !e.contains("idx") || !e.contains("val")) {
      throw validation_error("kernel " + where + " must be an object with 'idx' and 'val'");
    }
    const auto& idx = e["idx"];
    if (!idx.is_array() || idx.size() != order) {
      throw validation_error("kernel " + where + ".idx must list exactly " + std::to_string(order) + " indices");
    }
    gaussian::multi_index mi;
    for (const auto& i : idx) {
      const auto v = require_uint(i, where + ".idx");
      if (v >= dim) throw validation_error("kernel " + where + ".idx: index " + std::to_string(v) + " out of range [0, " +
                                           std::to_string(dim) + ")");
      mi.push_back(static_cast<gaussian::index_t>(v));
    }
    for (std::size_t t = 1; t < mi.size(); ++t) {
      if (mi[t - 1] > mi[t]) throw validation_error("kernel " + where + ".idx: unsorted multi-index");
    }
    if (!e["val"].is_number()) throw validation_error("kernel " + where + ".val must be a number");
    const double v = e["val"].get<double>();
    if (!std::isfinite(v)) throw validation_error("kernel " + where + ".val must be finite");
    if (k.entries().contains(mi)) throw validation_error("kernel " + where + ".idx: duplicate multi-index");
    k.add(mi, v);
  }
  return k;
}

gaussian::symmetric_kernel load_kernel(const std::string& path) { return parse_kernel(detail::read_file(path)); }

std::string format_kernel(const gaussian::symmetric_kernel& k) {
  std::string out = "{\n  \"dim\": " + std::to_string(k.dim()) + ",\n  \"order\": " + std::to_string(k.order()) +
                    ",\n  \"entries\": [";
  bool first = true;
  for (const auto& [idx, v] : k.entries()) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    {\"idx\": [";
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (t) out += ", ";
      out += std::to_string(idx[t]);
    }
    out += "], \"val\": " + detail::format_double(v) + "}";
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void save_kernel(const gaussian::symmetric_kernel& k, const std::string& path) {
  detail::write_file(path, format_kernel(k));
}

}  // namespace chaoskit::io
