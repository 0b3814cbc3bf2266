#pragma once

#include <string>
#include <vector>

#include "esz/pointset_io.hpp"

namespace esz {

struct FigureOptions {
  int size = 640;    // square canvas, pixels
  int margin = 32;
  double radius = 5.0;
};

/// Scatter plot of the set as a standalone SVG document. Axes are scaled
/// independently to fill the canvas (an orientation-preserving affine map,
/// so convexity reads correctly). Points are filled by color class; the
/// optional highlight indices are drawn as a closed polygon in the given
/// order. Output bytes depend only on the inputs.
std::string render_svg(const PointFile& f, const std::vector<Index>& highlight = {},
                       const FigureOptions& options = {});

}  // namespace esz
