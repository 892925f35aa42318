// SVG rendering of a plane extension: images of concentric circles and
// radial rays, with the image of the unit circle drawn emphasized.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hqmap/extension.hpp"

namespace hqmap {

struct RenderOptions {
  std::vector<double> circle_radii{0.2, 0.4, 0.6, 0.8, 1.0, 1.25, 1.6, 2.0};
  int rays = 12;
  int samples_per_curve = 512;
  bool include_timestamp = true;
};

std::string render_svg(const PlaneExtension& extension, const RenderOptions& options,
                       const std::optional<std::string>& label = std::nullopt);

}  // namespace hqmap
