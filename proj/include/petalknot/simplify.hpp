#pragma once

#include "petalknot/petalperm.hpp"
#include "petalknot/planar.hpp"

#include <utility>
#include <vector>

namespace petalknot {

// Combinatorial record of the star diagram produced by resolving a petal
// projection, tracked through monogon removal and strand removal.
struct StarContext {
    PetalPermutation sigma;
    int stage = 0; // 0 = raw star, 1 = monogons removed, 1+i after i strand removals
    int crossing_count = 0;
    std::vector<std::vector<long>> strand_crossings; // per strand 1..p, in chord order
    std::vector<long> tip_crossings;                 // per petal (strands k, k+1), index k-1

    int p() const { return sigma.p(); }
    int removals_done() const { return stage <= 1 ? 0 : stage - 1; }
};

// Star pattern: C(p,2) double crossings from the alternating-offset
// perturbation; every petal tip bounds a monogon.
std::pair<PlanarDiagram, StarContext> star_diagram(const PetalPermutation& sigma);

// Reidemeister I at every petal tip: exactly p crossings removed, every
// strand's in-star crossing count drops from p-1 to p-3.
std::pair<PlanarDiagram, StarContext> remove_monogons(const PlanarDiagram& pd,
                                                      const StarContext& ctx);

// Reroute the highest in-star strand outside the star around the side with
// fewer petals. Iteration i deletes its in-star crossings and creates one
// crossing with each previously removed strand; generically the net change is
// 2i+1-p. Over/under stays decided by the original heights.
std::pair<PlanarDiagram, StarContext> strand_removal(const PlanarDiagram& pd,
                                                     const StarContext& ctx, int iteration);

// Full pipeline: star -> monogon removal -> (p-3)/2 strand removals.
PlanarDiagram petal_reduced_diagram(const PetalPermutation& sigma);

// (p^2 - 2p - 3) / 4
long petal_crossing_bound(int p);

// True when no two of the strands removed by the full pipeline are angular
// neighbours; the exact per-iteration crossing ledger is guaranteed then.
bool pipeline_is_generic(const PetalPermutation& sigma);

} // namespace petalknot
