#pragma once

#include <optional>
#include <string>

#include "puiseux/polygon.hpp"

namespace puiseux::cli {

struct SvgAnnotations {
  std::optional<Rat> mu;  // draw the support line i + mu j = tau
};

/// SVG 1.1 figure of the polygon: integer grid, axes, one circle per cloud
/// point, the chain as a polyline (when it has a side) and the optional
/// support line labelled with tau. The page maps (i, j) affinely with j
/// pointing up. Requires a nonempty cloud.
std::string render_svg(const NewtonPolygon& np, const SvgAnnotations& ann = {});

/// Writes render_svg to path; throws Error when the file cannot be written.
void emit_svg(const NewtonPolygon& np, const SvgAnnotations& ann, const std::string& path);

}  // namespace puiseux::cli
