#include "petalknot/braid.hpp"

#include "petalknot/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

namespace petalknot {

PlanarDiagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 2) throw ParseError("braid needs at least 2 strands");
    // the closure is a knot iff the word's permutation is a single cycle
    std::vector<int> perm(static_cast<std::size_t>(strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int letter : word) {
        const int k = std::abs(letter);
        if (k < 1 || k >= strands) throw ParseError("braid letter out of range");
        std::swap(perm[static_cast<std::size_t>(k - 1)], perm[static_cast<std::size_t>(k)]);
    }
    {
        int c = 0, at = 0;
        do {
            at = perm[static_cast<std::size_t>(at)];
            ++c;
        } while (at != 0);
        if (c != strands) throw ParseError("braid closure is a link, not a knot");
    }

    std::vector<int> cur(static_cast<std::size_t>(strands));
    std::iota(cur.begin(), cur.end(), 1);
    int next_arc = strands;
    PlanarDiagram pd;
    for (int letter : word) {
        const int k = std::abs(letter);
        const int a = cur[static_cast<std::size_t>(k - 1)];
        const int b = cur[static_cast<std::size_t>(k)];
        const int n1 = ++next_arc; // leaves at position k
        const int n2 = ++next_arc; // leaves at position k+1
        Crossing c{};
        if (letter > 0) {
            // position-k strand passes over, heading right
            c.sign = -1;
            c.arcs = {b, a, n1, n2};
        } else {
            c.sign = +1;
            c.arcs = {a, n1, n2, b};
        }
        pd.crossings.push_back(c);
        cur[static_cast<std::size_t>(k - 1)] = n1;
        cur[static_cast<std::size_t>(k)] = n2;
    }
    // close up: the arc leaving position i at the bottom is the arc entering
    // position i at the top
    std::vector<int> relabel(static_cast<std::size_t>(next_arc) + 1);
    std::iota(relabel.begin(), relabel.end(), 0);
    for (int i = 0; i < strands; ++i) {
        int from = cur[static_cast<std::size_t>(i)];
        while (relabel[static_cast<std::size_t>(from)] != from)
            from = relabel[static_cast<std::size_t>(from)];
        relabel[static_cast<std::size_t>(from)] = i + 1;
    }
    auto find = [&](int a) {
        while (relabel[static_cast<std::size_t>(a)] != a)
            a = relabel[static_cast<std::size_t>(a)];
        return a;
    };
    for (auto& c : pd.crossings)
        for (auto& a : c.arcs) a = find(a);
    pd.validate();
    return pd;
}

PlanarDiagram torus_braid_closure(int r, int q) {
    if (r < 2) throw ParseError("torus braid needs r >= 2");
    std::vector<int> word;
    for (int rep = 0; rep < q; ++rep)
        for (int k = 1; k < r; ++k) word.push_back(k);
    return braid_closure(r, word);
}

Laurent torus_alexander(int a, int b) {
    auto cyc = [](int n) { // t^n - 1
        return Laurent::monomial(1, n) + Laurent::monomial(-1, 0);
    };
    Laurent num = cyc(a * b) * cyc(1);
    Laurent den = cyc(a) * cyc(b);
    Laurent q = Laurent::div_exact(num, den);
    q = q.shifted(-q.min_exp());
    if (q.coeff(q.max_exp()) < 0) q = -q;
    const int deg = q.max_exp();
    if (deg % 2 != 0) throw VerificationError("torus Alexander degree is odd");
    q = q.shifted(-deg / 2);
    if (q != q.inverted())
        throw VerificationError("torus Alexander polynomial is not palindromic");
    return q;
}

} // namespace petalknot
