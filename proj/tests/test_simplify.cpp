#include "petalknot/simplify.hpp"

#include "petalknot/braid.hpp"
#include "petalknot/errors.hpp"
#include "petalknot/invariants.hpp"
#include "petalknot/resolve.hpp"
#include "petalknot/uberdiag.hpp"

#include <doctest.h>

using namespace petalknot;

TEST_CASE("crossing bound values") {
    CHECK(petal_crossing_bound(3) == 0);
    CHECK(petal_crossing_bound(5) == 3);
    CHECK(petal_crossing_bound(7) == 8);
    CHECK(petal_crossing_bound(9) == 15);
    CHECK_THROWS_AS(petal_crossing_bound(4), ParseError);
}

TEST_CASE("star diagram equals resolve under the star schedule") {
    for (const char* s : {"1,3,5,2,4", "1,4,5,3,7,2,6"}) {
        const auto sigma = parse_permutation(s);
        const auto [pd, ctx] = star_diagram(sigma);
        CHECK(pd.crossing_count() == sigma.p() * (sigma.p() - 1) / 2);
        CHECK(ctx.stage == 0);
        for (int k = 1; k <= sigma.p(); ++k)
            CHECK(ctx.strand_crossings[static_cast<std::size_t>(k)].size() ==
                  static_cast<std::size_t>(sigma.p() - 1));
        const auto direct = resolve(from_petal(sigma), PerturbationSchedule::star(sigma.p()));
        CHECK(gauss_code_str(gauss_code(pd)) == gauss_code_str(gauss_code(direct)));
    }
}

TEST_CASE("monogon removal counts") {
    for (int p : {5, 7, 9}) {
        const auto sigma = torus_permutation((p - 1) / 2);
        const auto [pd0, ctx0] = star_diagram(sigma);
        const auto [pd1, ctx1] = remove_monogons(pd0, ctx0);
        CHECK(pd1.crossing_count() == pd0.crossing_count() - p);
        for (int k = 1; k <= p; ++k)
            CHECK(ctx1.strand_crossings[static_cast<std::size_t>(k)].size() ==
                  static_cast<std::size_t>(p - 3));
        // knot type is untouched (monogons are Reidemeister I moves); stick to
        // the polynomial-time invariant at p = 9 where the raw star is large
        CHECK(alexander(pd1) == alexander(pd0));
        if (p < 9) CHECK(fingerprint(pd1) == fingerprint(pd0));
    }
}

TEST_CASE("monogon removal rejects a mismatched diagram") {
    const auto sigma = parse_permutation("1,3,5,2,4");
    const auto [pd, ctx] = star_diagram(sigma);
    const auto other = resolve(from_petal(parse_permutation("1,2,3,4,5")),
                               PerturbationSchedule::star(5));
    CHECK_THROWS_AS(remove_monogons(other, ctx), ParseError);
    auto [pd1, ctx1] = remove_monogons(pd, ctx);
    CHECK_THROWS_AS(remove_monogons(pd1, ctx1), ParseError);
}

TEST_CASE("strand removal ledger at p = 9") {
    const auto sigma = torus_permutation(4);
    auto [pd, ctx] = star_diagram(sigma);
    std::tie(pd, ctx) = remove_monogons(pd, ctx);
    CHECK(pd.crossing_count() == 27);
    const int p = 9;
    const auto a0 = alexander(pd);
    // nets per iteration: -6, -4, -2
    const int nets[] = {2 * 1 + 1 - p, 2 * 2 + 1 - p, 2 * 3 + 1 - p};
    for (int i = 1; i <= 3; ++i) {
        const int before = pd.crossing_count();
        std::tie(pd, ctx) = strand_removal(pd, ctx, i);
        CHECK(pd.crossing_count() - before == nets[i - 1]);
        CHECK(alexander(pd) == a0);
    }
    CHECK(pd.crossing_count() == 15);
    CHECK(alexander(pd) == torus_alexander(4, 5));
    CHECK_THROWS_AS(strand_removal(pd, ctx, 4), ParseError);
}

TEST_CASE("strand removal enforces height order") {
    const auto sigma = torus_permutation(3);
    auto [pd, ctx] = star_diagram(sigma);
    std::tie(pd, ctx) = remove_monogons(pd, ctx);
    CHECK_THROWS_AS(strand_removal(pd, ctx, 2), ParseError);
}

TEST_CASE("petal_reduced_diagram sizes and knot types") {
    // p = 5 -> 3 crossings, the trefoil
    const auto r5 = petal_reduced_diagram(parse_permutation("1,3,5,2,4"));
    CHECK(r5.crossing_count() == 3);
    const auto tre = fingerprint(torus_braid_closure(2, 3));
    const auto f5 = fingerprint(r5);
    CHECK((f5 == tre || f5 == mirrored(tre)));

    // p = 7 -> 8 crossings, T(3,4)
    const auto r7 = petal_reduced_diagram(torus_permutation(3));
    CHECK(r7.crossing_count() == 8);
    const auto t34 = fingerprint(torus_braid_closure(3, 4));
    const auto f7 = fingerprint(r7);
    CHECK((f7 == t34 || f7 == mirrored(t34)));

    // p = 3 -> unknot with no crossings
    CHECK(petal_reduced_diagram(parse_permutation("1,2,3")).crossing_count() == 0);
}

TEST_CASE("pipeline fingerprint equals the resolve fingerprint") {
    for (const char* s :
         {"1,3,5,2,4", "1,2,3,4,5", "1,4,5,3,7,2,6", "1,4,7,3,6,2,5", "1,2,5,3,7,4,6"}) {
        const auto sigma = parse_permutation(s);
        CHECK(fingerprint(petal_reduced_diagram(sigma)) ==
              fingerprint(resolve(from_petal(sigma))));
    }
}

TEST_CASE("non-generic permutations stay within the bound") {
    // heights 1 and 2 sit on angular neighbours here
    const auto sigma = parse_permutation("1,2,4,6,3,7,5");
    CHECK_FALSE(pipeline_is_generic(sigma));
    const auto pd = petal_reduced_diagram(sigma);
    CHECK(pd.crossing_count() <= petal_crossing_bound(7));
    CHECK(fingerprint(pd) == fingerprint(resolve(from_petal(sigma))));
}

TEST_CASE("reduce_r1_r2 empties the three-petal star") {
    const auto pd = resolve(from_petal(parse_permutation("1,2,3")));
    CHECK(reduce_r1_r2(pd).crossing_count() == 0);
}
