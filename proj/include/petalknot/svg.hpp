#pragma once

#include "petalknot/uberdiag.hpp"

#include <string>

namespace petalknot {

// Deterministic rose rendering of an übercrossing diagram on a fixed
// 1000x1000 canvas: chords through the crossing area, matching arcs outside
// the circle (nesting arcs bulge further out), strand heights annotated.
std::string render_svg(const UbercrossingDiagram& d);

} // namespace petalknot
