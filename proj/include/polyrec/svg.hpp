#pragma once

#include "polyrec/geometry.hpp"

#include <string>
#include <vector>

namespace polyrec {

// Self-contained 800x800 SVG: scatter of roots over the limit-set overlay.
// World bounds are the limit-set bounding box inflated by 20%. Byte-stable
// for identical inputs.
std::string render_plot_svg(const LimitSet& ls, const std::vector<Complex>& roots);

}  // namespace polyrec
