#pragma once

#include "petalknot/petalperm.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace petalknot {

enum class Handedness { Left, Right };

inline Handedness flipped(Handedness h) {
    return h == Handedness::Left ? Handedness::Right : Handedness::Left;
}

// A knot projection with a single multi-crossing: n strands through one
// crossing. Endpoint labels 1..2n sit clockwise on a circle; strand k owns the
// antipodal pair {k, k+n} and is a chord through the crossing; `matching` is
// the outer non-crossing perfect matching connecting the endpoints.
//
// Every arc {a,b} is drawn over its strictly shorter circle side (antipodal
// arcs are excluded by the invariants, so the side is unique). An arc whose
// span contains other endpoints is a nesting arc.
class UbercrossingDiagram {
public:
    UbercrossingDiagram(int n, std::vector<int> heights, std::vector<std::pair<int, int>> arcs);

    int n() const { return n_; }
    int height(int strand) const { return heights_[static_cast<std::size_t>(strand)]; }
    std::vector<int> heights() const {
        return {heights_.begin() + 1, heights_.end()};
    }
    int partner(int endpoint) const { return partner_[static_cast<std::size_t>(endpoint)]; }
    int strand_of(int endpoint) const { return endpoint <= n_ ? endpoint : endpoint - n_; }
    int antipode(int endpoint) const { return endpoint <= n_ ? endpoint + n_ : endpoint - n_; }
    int strand_with_height(int h) const;

    // arcs as sorted unordered pairs, list sorted by first element
    std::vector<std::pair<int, int>> arcs() const;

    // endpoints strictly inside the arc's (shorter) span, in clockwise order
    std::vector<int> span(std::pair<int, int> arc) const;
    bool is_nesting(std::pair<int, int> arc) const { return !span(arc).empty(); }
    std::vector<std::pair<int, int>> nesting_arcs() const;
    bool is_adjacent_pair(std::pair<int, int> arc) const;

    // strand indices in traversal order starting from endpoint 1
    std::vector<int> traversal() const;

    void validate() const; // throws VerificationError on any broken invariant

    bool operator==(const UbercrossingDiagram& o) const {
        return n_ == o.n_ && heights_ == o.heights_ && partner_ == o.partner_;
    }

private:
    int n_;
    std::vector<int> heights_; // [1..n], 1 = top
    std::vector<int> partner_; // [1..2n], involution
};

// A loop formed by two strands joined by an adjacent-pair arc.
struct Ribbon {
    std::pair<int, int> arc; // (u, cyclic successor of u)
    int strand_a = 0;        // strand at the clockwise-earlier endpoint
    int strand_b = 0;
    Handedness handedness = Handedness::Left;
    int over_strand = 0;     // the strand of the pair with the smaller height
    bool bottom = false;     // contains the bottom strand inside a nesting span
};

UbercrossingDiagram from_petal(const PetalPermutation& sigma);

bool is_petal_diagram(const UbercrossingDiagram& d);

// Heights read clockwise starting from the top strand; requires a petal diagram.
PetalPermutation petal_permutation(const UbercrossingDiagram& d);

// Slide the top strand of a petal diagram off the crossing: pre-petal
// projection with n-1 strands and (for n >= 5) exactly one nesting arc
// covering (n-2)/1... covering floor((p-2)/2) - adjusted side with (p-3)/2 arcs.
UbercrossingDiagram unfold_top(const UbercrossingDiagram& d);

// Right inverse of unfold_top: fold the nesting loop back into the crossing
// as a new top strand. Verified by invariant equality, not diagram identity.
UbercrossingDiagram fold_top(const UbercrossingDiagram& d);

std::vector<Ribbon> ribbons(const UbercrossingDiagram& d);

std::optional<Ribbon> bottom_ribbon(const UbercrossingDiagram& d);

// Reflect the projection plane: endpoint order reverses, heights persist.
UbercrossingDiagram mirror(const UbercrossingDiagram& d);

// Poke a finger of `target_arc` through the crossing: two new strands with
// consecutive heights starting at height_slot; the far-side arc is a ribbon of
// the requested handedness. Knot type unchanged.
UbercrossingDiagram add_trivial_petal(const UbercrossingDiagram& d,
                                      std::pair<int, int> target_arc, int height_slot,
                                      Handedness handedness);

// Pull a loop joining strands of consecutive heights out through the crossing.
UbercrossingDiagram remove_trivial_loop(const UbercrossingDiagram& d,
                                        std::pair<int, int> arc);

// Connected sum: splice d2 (a pre-petal projection whose bottom ribbon has
// handedness opposite to ribbon1) into d1 around ribbon1. Output strand count
// n1 + n2 - 2.
UbercrossingDiagram compose(const UbercrossingDiagram& d1, std::pair<int, int> ribbon1_arc,
                            const UbercrossingDiagram& d2);

// compose, adding a trivial petal to d1 first when no opposite-handed ribbon
// exists. Output strand count n1 + n2 - 2 (no fallback) or n1 + n2 (fallback).
UbercrossingDiagram compose_simple(const UbercrossingDiagram& d1,
                                   const UbercrossingDiagram& d2);

} // namespace petalknot
