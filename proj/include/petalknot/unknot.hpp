#pragma once

#include "petalknot/petalperm.hpp"

#include <vector>

namespace petalknot {

struct UnknotMove {
    enum class Kind { HeightPass, RemovePetal };
    Kind kind;
    int position;      // 1-based cyclic position in the permutation at that step
    int new_rank = 0;  // HeightPass only
    int cost = 0;      // HeightPass only; RemovePetal is free
};

// Replayable witness that height passes and trivial-petal removals take the
// permutation down to three petals.
struct UnknottingCertificate {
    PetalPermutation initial;
    std::vector<UnknotMove> moves;
    int total_cost = 0;
    PetalPermutation final;
};

// (p-1)(p-3)/8; an integer for every odd p.
long unknotting_bound(int p);

// Greedy unknotting: repeatedly make the closest cyclic pair height-adjacent
// (d-1 self-passes) and pull out the resulting trivial petal.
UnknottingCertificate unknotting_sequence(const PetalPermutation& sigma);

// Re-apply the recorded moves; throws VerificationError on any mismatch.
PetalPermutation replay(const PetalPermutation& initial,
                        const std::vector<UnknotMove>& moves);

} // namespace petalknot
