#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chaoskit/stein/named_targets.hpp"
#include "chaoskit/stein/target_measure.hpp"

namespace chaoskit::io {

struct loaded_target {
  stein::target_measure measure;
  std::optional<stein::named_target> named;  ///< absent for custom grids
  double shift = 0.0;  ///< mean removed from a custom density
};

/// Density given on a grid of (x, p) pairs inside the support. log p is
/// interpolated by a Floater-Hormann rational interpolant and extended linearly beyond
/// the end points; the result is renormalized and centered, and the
/// diffusion coefficient comes from quadrature. Needs at least 4 points
/// with p > 0 and strictly increasing x; an infinite end needs a
/// decreasing log-density toward it.
[[nodiscard]] loaded_target make_grid_target(std::vector<std::pair<double, double>> grid, stein::interval support,
                                             std::string name = "custom");

/// {"name": "gamma", "params": {"a": 2.0, "lambda": 1.0}} or
/// {"name": "custom", "density": [[x, p], ...], "support": [l, u]}.
/// Infinite support ends are written as null or the strings "-inf"/"inf".
[[nodiscard]] loaded_target parse_target(std::string_view text);
[[nodiscard]] loaded_target load_target(const std::string& path);

}  // namespace chaoskit::io
