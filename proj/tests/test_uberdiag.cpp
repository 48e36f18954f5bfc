#include "petalknot/uberdiag.hpp"

#include "petalknot/errors.hpp"
#include "petalknot/petalperm.hpp"

#include <doctest.h>

#include <algorithm>

using namespace petalknot;

namespace {
using Arc = std::pair<int, int>;
}

TEST_CASE("from_petal builds the canonical matching") {
    const auto d = from_petal(parse_permutation("1,3,5,2,4"));
    CHECK(d.n() == 5);
    const std::vector<Arc> want = {{1, 10}, {2, 3}, {4, 5}, {6, 7}, {8, 9}};
    CHECK(d.arcs() == want);
    CHECK(is_petal_diagram(d));
    CHECK(d.traversal() == std::vector<int>{1, 2, 3, 4, 5});

    const auto d3 = from_petal(parse_permutation("1,2,3"));
    CHECK(d3.n() == 3);
    CHECK(d3.nesting_arcs().empty());

    const auto d7 = from_petal(torus_permutation(3));
    CHECK(d7.n() == 7);
    for (auto a : d7.arcs()) CHECK(d7.is_adjacent_pair(a));
}

TEST_CASE("petal permutation round-trips") {
    for (const char* s : {"1,3,5,2,4", "1,4,5,3,7,2,6", "1,2,3"}) {
        const auto sigma = parse_permutation(s);
        CHECK(petal_permutation(from_petal(sigma)) == sigma);
    }
    // readings that do not start at the top come back rotated onto a_1 = 1
    const auto rotated = parse_permutation("2,4,1,3,5");
    const auto back = petal_permutation(from_petal(rotated));
    CHECK(back.at(1) == 1);
    CHECK(canonical_class(back) == canonical_class(rotated));
}

TEST_CASE("unfold_top produces the pre-petal projection") {
    const auto pre = unfold_top(from_petal(parse_permutation("1,3,5,2,4")));
    CHECK(pre.n() == 4);
    CHECK(pre.heights() == std::vector<int>{2, 4, 1, 3});
    const auto nests = pre.nesting_arcs();
    REQUIRE(nests.size() == 1);
    CHECK(pre.span(nests[0]).size() == 2); // one petal nested under the loop

    const auto pre3 = unfold_top(from_petal(parse_permutation("1,2,3")));
    CHECK(pre3.n() == 2);

    const auto pre7 = unfold_top(from_petal(torus_permutation(3)));
    CHECK(pre7.n() == 6); // matches the 2r bound for T(3,4)
    CHECK(pre7.nesting_arcs().size() == 1);
}

TEST_CASE("unfold works when the top strand sits elsewhere") {
    // rotation-equivalent writing of the trefoil permutation
    const auto sigma = parse_permutation("3,5,2,4,1");
    const auto pre = unfold_top(from_petal(sigma));
    CHECK(pre.n() == 4);
    CHECK(pre.nesting_arcs().size() == 1);
}

TEST_CASE("fold_top is a right inverse of unfold_top up to rotation") {
    for (const char* s : {"1,3,5,2,4", "1,4,5,3,7,2,6", "1,2,3", "1,4,7,3,6,2,5"}) {
        const auto sigma = parse_permutation(s);
        const auto folded = fold_top(unfold_top(from_petal(sigma)));
        CHECK(is_petal_diagram(folded));
        CHECK(canonical_class(petal_permutation(folded)) == canonical_class(sigma));
    }
}

TEST_CASE("ribbons of the petal and pre-petal trefoil") {
    const auto d = from_petal(parse_permutation("1,2,3"));
    CHECK(ribbons(d).size() == 3);

    const auto pre = unfold_top(from_petal(parse_permutation("1,3,5,2,4")));
    const auto rs = ribbons(pre);
    CHECK(rs.size() == 3); // the nesting arc is not a ribbon
    int bottoms = 0;
    for (const auto& r : rs) bottoms += r.bottom ? 1 : 0;
    CHECK(bottoms == 1);
    const auto btm = bottom_ribbon(pre);
    REQUIRE(btm.has_value());
    CHECK(pre.height(btm->over_strand) == 1);
    CHECK(btm->handedness == Handedness::Left);
}

TEST_CASE("mirror is an involution and flips every ribbon") {
    for (const char* s : {"1,3,5,2,4", "1,4,5,3,7,2,6"}) {
        const auto d = from_petal(parse_permutation(s));
        const auto m = mirror(d);
        CHECK(mirror(m) == d);

        auto hands = [](const UbercrossingDiagram& x) {
            int l = 0, r = 0;
            for (const auto& rb : ribbons(x))
                (rb.handedness == Handedness::Left ? l : r)++;
            return std::pair(l, r);
        };
        const auto [l1, r1] = hands(d);
        const auto [l2, r2] = hands(m);
        CHECK(l1 == r2);
        CHECK(r1 == l2);
        CHECK(ribbons(d).size() == ribbons(m).size());
    }
    // the pre-petal bottom ribbon flips handedness too
    const auto pre = unfold_top(from_petal(parse_permutation("1,3,5,2,4")));
    CHECK(bottom_ribbon(mirror(pre))->handedness == Handedness::Right);
}

TEST_CASE("add_trivial_petal grows the diagram by two strands") {
    const auto d = from_petal(parse_permutation("1,3,5,2,4"));
    for (const Handedness h : {Handedness::Left, Handedness::Right}) {
        const auto grown = add_trivial_petal(d, d.arcs().front(), 2, h);
        CHECK(grown.n() == 7);
        bool found = false;
        for (const auto& r : ribbons(grown))
            if (r.handedness == h &&
                grown.height(r.over_strand) == 2 &&
                std::abs(grown.height(r.strand_a) - grown.height(r.strand_b)) == 1)
                found = true;
        CHECK(found);
    }
    CHECK_THROWS_AS(add_trivial_petal(d, {1, 2}, 1, Handedness::Left), ParseError);
    CHECK_THROWS_AS(add_trivial_petal(d, d.arcs().front(), 7, Handedness::Left), ParseError);
}

TEST_CASE("remove_trivial_loop mirrors the permutation-level removal") {
    const auto sigma = parse_permutation("1,4,5,3,7,2,6");
    const auto d = from_petal(sigma);
    // the (4,5) petal joins strands at positions 2,3: endpoints 2,3
    const auto got = remove_trivial_loop(d, {2, 3});
    CHECK(got == from_petal(parse_permutation("1,3,5,2,4")));
    CHECK(got.traversal().size() == 5);

    CHECK_THROWS_AS(remove_trivial_loop(d, {1, 2}), ParseError); // heights 1,4
}

TEST_CASE("add then remove a trivial petal is the identity") {
    const auto d = from_petal(parse_permutation("1,4,7,3,6,2,5"));
    const auto grown = add_trivial_petal(d, d.arcs()[2], 3, Handedness::Right);
    // find the new petal: a ribbon whose strands carry heights 3,4
    for (const auto& r : ribbons(grown)) {
        const int ha = grown.height(r.strand_a), hb = grown.height(r.strand_b);
        if (std::min(ha, hb) == 3 && std::max(ha, hb) == 4) {
            const auto back = remove_trivial_loop(grown, r.arc);
            CHECK(back.n() == d.n());
        }
    }
}
