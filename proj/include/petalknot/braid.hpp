#pragma once

#include "petalknot/laurent.hpp"
#include "petalknot/planar.hpp"

#include <vector>

namespace petalknot {

// PD of the closure of a braid word on `strands` strands. Letter k means the
// standard generator sigma_k (the strand in position k crosses over position
// k+1); -k its inverse. The closure must be a knot (one component).
PlanarDiagram braid_closure(int strands, const std::vector<int>& word);

// (sigma_1 ... sigma_{r-1})^q on r strands: the (r, q) torus knot/link.
PlanarDiagram torus_braid_closure(int r, int q);

// Exact Alexander polynomial of the (a, b) torus knot in symmetric form:
// (t^{ab} - 1)(t - 1) / ((t^a - 1)(t^b - 1)).
Laurent torus_alexander(int a, int b);

} // namespace petalknot
