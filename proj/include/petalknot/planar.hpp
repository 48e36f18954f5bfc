#pragma once

#include <array>
#include <string>
#include <vector>

namespace petalknot {

// One double crossing. `arcs` lists the four incident arc labels in
// counterclockwise order starting at the incoming under-strand, so arcs[0] is
// the under-in arc and arcs[2] the under-out arc. The incoming over-strand sits
// at position 3 for a positive crossing and position 1 for a negative one.
struct Crossing {
    std::array<int, 4> arcs;
    int sign; // +1 or -1
    int over_in_pos() const { return sign > 0 ? 3 : 1; }
    int over_out_pos() const { return sign > 0 ? 1 : 3; }
};

// Ordinary double-crossing diagram of a knot as a PD code. The 0-crossing
// unknot is the empty crossing list.
struct PlanarDiagram {
    std::vector<Crossing> crossings;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int writhe() const;
    void validate() const; // traversal must close through every pass once
};

struct GaussEntry {
    int crossing; // 1-based id in traversal discovery order
    bool over;
    int sign;
};

// Signed Gauss sequence along the traversal; round-trips with the PD code.
std::vector<GaussEntry> gauss_code(const PlanarDiagram& pd);
PlanarDiagram from_gauss(const std::vector<GaussEntry>& code);
std::string gauss_code_str(const std::vector<GaussEntry>& code);

// Apply crossing-removing Reidemeister I and II moves until none applies.
// Idempotent; preserves the knot type.
PlanarDiagram reduce_r1_r2(const PlanarDiagram& pd);

// Relabel arcs 1..2c consecutively along the orientation (no-op for the unknot).
PlanarDiagram renumber_along_traversal(const PlanarDiagram& pd);

} // namespace petalknot
