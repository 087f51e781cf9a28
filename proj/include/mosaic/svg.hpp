#pragma once

#include <string>

#include "mosaic/grid.hpp"

namespace mosaic {

/// Standalone SVG drawing of a mosaic, 40 px per tile. Each tile arc is one
/// `class="arc"` path: quadratic curves for arcs between adjacent connection
/// points, straight segments otherwise. At a crossing the under arc is a
/// single path of two subpaths leaving a gap at the tile center. Offending
/// sites of an invalid mosaic are circled. Output depends only on the mosaic.
std::string render_svg(const Mosaic& m);

}  // namespace mosaic
