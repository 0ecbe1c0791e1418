#pragma once

#include <string>

#include "webkup/flows.hpp"
#include "webkup/ladder.hpp"

namespace webkup {

// SVG drawing of a ladder web. Label 1 strands are single lines, label 2
// double lines, label 3 dashed and label 0 omitted; the boundary gets its
// o, +, -, x markers. A flow is drawn as coloured overlays with the state of
// every segment.
std::string render_svg(const LadderWeb& w, const Flow* flow = nullptr);

}  // namespace webkup
