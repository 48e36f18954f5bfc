#include "petalknot/resolve.hpp"

#include "petalknot/braid.hpp"
#include "petalknot/errors.hpp"
#include "petalknot/invariants.hpp"
#include "petalknot/petalperm.hpp"
#include "petalknot/simplify.hpp"
#include "petalknot/uberdiag.hpp"

#include <doctest.h>

using namespace petalknot;

TEST_CASE("resolve crossing counts") {
    CHECK(resolve(from_petal(parse_permutation("1,3,5,2,4"))).crossing_count() == 10);
    CHECK(resolve(from_petal(parse_permutation("1,2,3"))).crossing_count() == 3);
    const UbercrossingDiagram one(1, {1}, {{1, 2}});
    CHECK(resolve(one).crossing_count() == 0);
    CHECK(fingerprint(resolve(one)).det == 1);
}

TEST_CASE("schedule validation") {
    const auto d = from_petal(parse_permutation("1,2,3"));
    PerturbationSchedule bad;
    bad.offsets = {1e-3, 1e-3, 2e-3};
    CHECK_THROWS_AS(resolve(d, bad), ParseError);
    bad.offsets = {0.2, 1e-3, 2e-3};
    CHECK_THROWS_AS(resolve(d, bad), ParseError);
    bad.offsets = {1e-3, 2e-3};
    CHECK_THROWS_AS(resolve(d, bad), ParseError);
}

TEST_CASE("three petals resolve to the unknot") {
    const auto f = fingerprint(resolve(from_petal(parse_permutation("1,2,3"))));
    CHECK(f.det == 1);
    CHECK(f.alex == Laurent(1));
    CHECK(f.jones == Laurent(1));
}

TEST_CASE("the five-petal extremal class is a trefoil") {
    const auto f = fingerprint(resolve(from_petal(parse_permutation("1,3,5,2,4"))));
    const auto tre = fingerprint(torus_braid_closure(2, 3));
    CHECK((f == tre || f == mirrored(tre)));
    CHECK(f.det == 3);
}

TEST_CASE("perturbation independence") {
    for (const char* s : {"1,3,5,2,4", "1,4,5,3,7,2,6", "2,4,1,3,5"}) {
        const auto d = from_petal(parse_permutation(s));
        const auto f0 = fingerprint(resolve(d, PerturbationSchedule::defaults(d.n())));
        const auto f1 = fingerprint(resolve(d, PerturbationSchedule::star(d.n())));
        const auto f2 = fingerprint(resolve(d, PerturbationSchedule::seeded(d.n(), 7)));
        const auto f3 = fingerprint(resolve(d, PerturbationSchedule::seeded(d.n(), 99)));
        CHECK(f0 == f1);
        CHECK(f0 == f2);
        CHECK(f0 == f3);
    }
}

TEST_CASE("equivalence-class members resolve to equal fingerprints") {
    const auto sigma = parse_permutation("1,4,5,3,7,2,6");
    const auto base = canonical_class(sigma);
    const auto f0 = fingerprint(resolve(from_petal(sigma)));
    const int p = sigma.p();
    for (int r = 0; r < p; ++r) {
        std::vector<int> rot;
        for (int i = 0; i < p; ++i)
            rot.push_back(base.diffs[static_cast<std::size_t>((i + r) % p)]);
        const auto member = permutation_from_diffs(rot);
        CHECK(fingerprint(resolve(from_petal(member))) == f0);
    }
}

TEST_CASE("mirror diagrams have mirrored fingerprints") {
    const auto d = from_petal(parse_permutation("1,3,5,2,4"));
    const auto f = fingerprint(resolve(d));
    const auto fm = fingerprint(resolve(mirror(d)));
    CHECK(fm == mirrored(f));
    CHECK(fm != f); // trefoils are chiral
}

TEST_CASE("gauss code of the star has alternating structure after reduction") {
    const auto pd = reduce_r1_r2(resolve(from_petal(parse_permutation("1,3,5,2,4"))));
    CHECK(pd.crossing_count() >= 3);
    CHECK(gauss_code(pd).size() == 2 * static_cast<std::size_t>(pd.crossing_count()));
}

TEST_CASE("reverse petal diagram matches the resolve path") {
    // trefoil
    const auto f_resolve = fingerprint(resolve(from_petal(parse_permutation("1,3,5,2,4"))));
    const auto f_reverse = fingerprint(reverse_petal_diagram(parse_permutation("1,3,5,2,4")));
    CHECK(f_reverse == f_resolve);

    // unknot
    const auto fu = fingerprint(reverse_petal_diagram(parse_permutation("1,2,3")));
    CHECK(fu.det == 1);
    CHECK(fu.jones == Laurent(1));

    // T(3,4) = 8_19
    const auto f34 = fingerprint(reverse_petal_diagram(torus_permutation(3)));
    const auto oracle = fingerprint(torus_braid_closure(3, 4));
    CHECK((f34 == oracle || f34 == mirrored(oracle)));
    CHECK(f34 == fingerprint(resolve(from_petal(torus_permutation(3)))));
}

TEST_CASE("reverse petal diagram matches the pipeline for T(4,5)") {
    const auto sigma = torus_permutation(4);
    const auto pd = reverse_petal_diagram(sigma);
    CHECK(pd.crossing_count() == 15); // already crossing-minimal for this knot
    CHECK(fingerprint(pd) == fingerprint(petal_reduced_diagram(sigma)));
}

TEST_CASE("reduced trefoil diagrams are alternating") {
    const auto code = gauss_code(petal_reduced_diagram(parse_permutation("1,3,5,2,4")));
    REQUIRE(code.size() == 6);
    for (std::size_t i = 0; i + 1 < code.size(); ++i)
        CHECK(code[i].over != code[i + 1].over);
}

TEST_CASE("unfold_top preserves the knot type") {
    for (const char* s : {"1,3,5,2,4", "1,4,5,3,7,2,6"}) {
        const auto sigma = parse_permutation(s);
        const auto f_petal = fingerprint(resolve(from_petal(sigma)));
        const auto f_pre = fingerprint(resolve(unfold_top(from_petal(sigma))));
        CHECK(f_petal == f_pre);
    }
}
