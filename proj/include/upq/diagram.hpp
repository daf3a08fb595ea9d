#pragma once

#include <string>

#include "upq/theta.hpp"

namespace upq {

// Three-row ASCII rendering of the block diagram, blocks left to right in
// content order. Slashes carry the parallelogram/trapezoid direction; the
// middle row shows the nu coordinates when any are nonzero.
std::string render_diagram(const ThetaDatum& td);

}  // namespace upq
