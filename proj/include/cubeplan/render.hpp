#pragma once

#include <string>
#include <string_view>

#include "cubeplan/arm.hpp"

namespace cubeplan {

enum class RenderFormat { Svg, Ascii };

// Conventional file extension for frames in the given format ("svg"/"txt").
std::string_view render_extension(RenderFormat format);

// Deterministic, self-contained picture of one arm state; throws
// InvalidState when the word is not a state of the given arm dimensions.
//
// SVG: the tunnel as a unit grid (40 px per unit, 20 px margin), the arm as
// a rounded polyline, the pinned base as a filled circle.
//
// ASCII: one text cell per half unit. Joints are '+', links '-' or '|',
// unvisited lattice points '.'; rows are right-trimmed. The top row is the
// tunnel ceiling (y = height), the bottom row its floor (y = 0).
std::string render_frame(const ArmSpec& spec, const std::string& word,
                         RenderFormat format);

}  // namespace cubeplan
