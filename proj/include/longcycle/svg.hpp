#pragma once

#include <string>

#include "longcycle/cycle.hpp"

namespace longcycle {

// straight-line drawing: barycentric coordinates with the first face pinned
// as a convex outer boundary; cycle edges highlighted when a cycle is given
std::string render_svg(const EmbeddedGraph& g, const Cycle* highlight = nullptr,
                       int size_px = 800);

}  // namespace longcycle
