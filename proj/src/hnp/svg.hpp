#pragma once

#include <string>
#include <vector>

#include "hnp/bundle.hpp"

namespace hnp {

/// Draws the HN polygons as SVG 1.1 polylines.  Vertices sit at integer
/// rank units on the x axis and scaled degree units on the y axis, and are
/// labeled with (rank, degree).  With align_right the right endpoints share
/// the origin, otherwise the left endpoints do.
std::string render_svg(const std::vector<Bundle>& bundles, bool align_right);

}  // namespace hnp
