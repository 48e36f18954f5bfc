#pragma once

#include "petalknot/planar.hpp"
#include "petalknot/uberdiag.hpp"

#include <vector>

namespace petalknot {

// Signed offsets applied along each chord's normal before intersecting.
// Geometry only orders the crossings; over/under and signs are combinatorial.
struct PerturbationSchedule {
    std::vector<double> offsets; // one per strand, index 0 = strand 1
    double tolerance = 1e-9;

    static PerturbationSchedule defaults(int n);        // the star schedule
    static PerturbationSchedule star(int n);            // alternating-sign 1e-3
    static PerturbationSchedule ramp(int n);            // offsets[k] = k * 1e-3
    static PerturbationSchedule seeded(int n, unsigned seed);
};

// Perturb the single multi-crossing into C(n,2) double crossings. The strand
// with the smaller height value is over at every crossing. Throws ParseError
// on a degenerate schedule (caller retries with another one).
PlanarDiagram resolve(const UbercrossingDiagram& d, const PerturbationSchedule& sched);
PlanarDiagram resolve(const UbercrossingDiagram& d);

// Sideways double-crossing projection of the petal knot: the pre-petal
// projection drawn as horizontal height lines joined by vertical connectors,
// over/under decided by first visit (right of the axis = over).
PlanarDiagram reverse_petal_diagram(const PetalPermutation& sigma);

namespace detail {

// One traversal pass through a double crossing, with the travel direction of
// the strand at that point. Passes listed in traversal order around the knot.
struct CrossingPass {
    long crossing_id;
    bool over;
    double dirx;
    double diry;
};

PlanarDiagram pd_from_passes(const std::vector<CrossingPass>& passes);

} // namespace detail

} // namespace petalknot
