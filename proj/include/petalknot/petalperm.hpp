#pragma once

#include <string>
#include <utility>
#include <vector>

namespace petalknot {

// Petal permutation: strand heights read clockwise around the single
// multi-crossing, top strand labelled 1. All positions and heights in this
// module are 1-based, matching the usual (a_1, ..., a_p) notation.
class PetalPermutation {
public:
    explicit PetalPermutation(std::vector<int> entries);

    int p() const { return static_cast<int>(entries_.size()); }
    int at(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)]; }
    int at_cyclic(int pos) const;        // any integer position, wraps mod p
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const PetalPermutation& o) const { return entries_ == o.entries_; }
    bool operator!=(const PetalPermutation& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<int> entries_;
};

// Rotation-equivalence class of a petal permutation, keyed by the cyclic
// sequence of height differences mod p.
struct DifferenceClass {
    std::vector<int> diffs;              // [a_{i+1} - a_i]_p, cyclic, values in 1..p-1
    std::vector<int> canonical_rotation; // lexicographically least rotation of diffs
    PetalPermutation representative;     // rebuilt from canonical_rotation with a_1 = 1

    bool operator==(const DifferenceClass& o) const {
        return canonical_rotation == o.canonical_rotation;
    }
    bool operator!=(const DifferenceClass& o) const { return !(*this == o); }
    bool operator<(const DifferenceClass& o) const {
        return canonical_rotation < o.canonical_rotation;
    }
};

// Comma/whitespace separated integers, optional surrounding parentheses.
// Throws ParseError carrying the 1-based token position of the first violation.
PetalPermutation parse_permutation(const std::string& text);

DifferenceClass canonical_class(const PetalPermutation& sigma);

// Rebuild a permutation (a_1 = start) from a difference sequence.
PetalPermutation permutation_from_diffs(const std::vector<int>& diffs, int start = 1);

// min d >= 0 with [x+d]_p = [y]_p or [x-d]_p = [y]_p; always <= (p-1)/2.
int cyclic_distance(int p, int x, int y);

// Cyclic positions i (1-based) with d_p(a_i, a_{i+1}) = 1; includes the
// wrap-around pair (a_p, a_1) as position p.
std::vector<int> trivial_petals(const PetalPermutation& sigma);

// Delete the trivial petal at cyclic position i and rank-compress the
// remaining heights. Requires p >= 5.
PetalPermutation remove_trivial_petal(const PetalPermutation& sigma, int i);

// Reassign the strand at position i to new_rank, keeping all other strands in
// relative order. Cost is the number of strands passed, |new_rank - old_rank|.
std::pair<PetalPermutation, int> change_height(const PetalPermutation& sigma, int i,
                                               int new_rank);

// (1, r+1, 2r+1, r, 2r, ..., 2, r+2): the T(r, r+1) torus knot permutation,
// a_i = [1 + (i-1) r]_p with p = 2r+1.
PetalPermutation torus_permutation(int r);

// True iff every cyclic adjacent pair realises the maximal distance (p-1)/2.
bool is_extremal(const PetalPermutation& sigma);

} // namespace petalknot
