#include "petalknot/petalperm.hpp"

#include "petalknot/errors.hpp"

#include <doctest.h>

#include <set>

using namespace petalknot;

TEST_CASE("parse accepts separators and parentheses") {
    CHECK(parse_permutation("1,3,5,2,4").entries() == std::vector<int>{1, 3, 5, 2, 4});
    CHECK(parse_permutation("(1 3 5 2 4)").entries() == std::vector<int>{1, 3, 5, 2, 4});
    CHECK(parse_permutation(" 1, 3 5,2,4 ").entries() == std::vector<int>{1, 3, 5, 2, 4});
}

TEST_CASE("parse rejections carry the violating position") {
    CHECK_THROWS_WITH_AS(parse_permutation("1,3,5,2,2"), doctest::Contains("duplicate"),
                         ParseError);
    try {
        parse_permutation("1,3,5,2,2");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_permutation("1,2,3,4"), ParseError); // even length
    CHECK_THROWS_AS(parse_permutation("1"), ParseError);       // too short
    CHECK_THROWS_AS(parse_permutation("1,x,3"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1,2,4"), ParseError);   // not onto 1..p
}

TEST_CASE("cyclic distance by exhaustive search") {
    // independent oracle: try every d from 0 upward
    auto brute = [](int p, int x, int y) {
        for (int d = 0;; ++d) {
            const int up = ((x + d - 1) % p + p) % p + 1;
            const int dn = ((x - d - 1) % p + p) % p + 1;
            if (up == y || dn == y) return d;
        }
    };
    CHECK(cyclic_distance(5, 1, 1) == 0);
    CHECK(cyclic_distance(5, 1, 3) == brute(5, 1, 3));
    CHECK(cyclic_distance(5, 1, 3) == 2);
    CHECK(cyclic_distance(7, 2, 6) == brute(7, 2, 6));
    CHECK(cyclic_distance(7, 2, 6) == 3);
    for (int x = 1; x <= 9; ++x)
        for (int y = 1; y <= 9; ++y) {
            CHECK(cyclic_distance(9, x, y) == brute(9, x, y));
            CHECK(cyclic_distance(9, x, y) <= 4);
        }
    CHECK_THROWS_AS(cyclic_distance(5, 0, 3), ParseError);
}

TEST_CASE("difference classes") {
    const auto c1 = canonical_class(parse_permutation("1,3,5,2,4"));
    CHECK(c1.diffs == std::vector<int>{2, 2, 2, 2, 2});

    const auto c2 = canonical_class(parse_permutation("1,4,5,3,7,2,6"));
    CHECK(c2.diffs == std::vector<int>{3, 1, 5, 4, 2, 4, 2});

    // (1,2,4,3,5) and (1,3,2,4,5): same class via rotated difference sequences
    const auto a = canonical_class(parse_permutation("1,2,4,3,5"));
    const auto b = canonical_class(parse_permutation("1,3,2,4,5"));
    CHECK(a == b);
    CHECK(a.representative == b.representative);
}

TEST_CASE("canonical class is constant on rotation orbits") {
    const auto sigma = parse_permutation("1,4,5,3,7,2,6");
    const auto base = canonical_class(sigma);
    const int p = sigma.p();
    for (int r = 0; r < p; ++r) {
        std::vector<int> rot;
        for (int i = 0; i < p; ++i)
            rot.push_back(base.diffs[static_cast<std::size_t>((i + r) % p)]);
        CHECK(canonical_class(permutation_from_diffs(rot, 3)) == base);
    }
}

TEST_CASE("trivial petals") {
    const auto t1 = trivial_petals(parse_permutation("1,4,5,3,7,2,6"));
    CHECK(t1 == std::vector<int>{2}); // the (4,5) pair
    CHECK(trivial_petals(parse_permutation("1,3,5,2,4")).empty());
    CHECK(trivial_petals(parse_permutation("1,2,3")) == std::vector<int>{1, 2, 3});
    // wrap-around pair (a_p, a_1) is included; d_5(5,1) = 1 through the cycle
    const auto t2 = trivial_petals(parse_permutation("1,3,2,4,5"));
    CHECK(std::set<int>(t2.begin(), t2.end()).count(5) == 1);
}

TEST_CASE("remove trivial petal") {
    CHECK(remove_trivial_petal(parse_permutation("1,4,5,3,7,2,6"), 2) ==
          parse_permutation("1,3,5,2,4"));
    CHECK(remove_trivial_petal(parse_permutation("1,2,3,4,5"), 1) ==
          parse_permutation("1,2,3"));
    CHECK_THROWS_AS(remove_trivial_petal(parse_permutation("1,2,3"), 1), ParseError);
    CHECK_THROWS_AS(remove_trivial_petal(parse_permutation("1,3,5,2,4"), 1), ParseError);
}

TEST_CASE("change height") {
    const auto [s1, c1] = change_height(parse_permutation("1,3,5,2,4"), 1, 2);
    CHECK(s1 == parse_permutation("2,3,5,1,4"));
    CHECK(c1 == 1);
    const auto [s2, c2] = change_height(parse_permutation("1,2,3"), 1, 1);
    CHECK(s2 == parse_permutation("1,2,3"));
    CHECK(c2 == 0);
    const auto [s3, c3] = change_height(parse_permutation("1,4,7,3,6,2,5"), 1, 3);
    CHECK(c3 == 2);
    CHECK(s3.at(1) == 3);
    CHECK_THROWS_AS(change_height(parse_permutation("1,2,3"), 1, 4), ParseError);
}

TEST_CASE("torus permutations") {
    CHECK(torus_permutation(2) == parse_permutation("1,3,5,2,4"));
    CHECK(torus_permutation(3) == parse_permutation("1,4,7,3,6,2,5"));
    CHECK(torus_permutation(1) == parse_permutation("1,2,3"));
    CHECK(torus_permutation(4) == parse_permutation("1,5,9,4,8,3,7,2,6"));
    // constant difference sequence (r, ..., r)
    const auto c = canonical_class(torus_permutation(3));
    CHECK(c.diffs == std::vector<int>{3, 3, 3, 3, 3, 3, 3});
    // no trivial petals for r >= 2
    for (int r = 2; r <= 4; ++r) CHECK(trivial_petals(torus_permutation(r)).empty());
}

TEST_CASE("extremal permutations") {
    CHECK(is_extremal(parse_permutation("1,3,5,2,4")));
    CHECK_FALSE(is_extremal(parse_permutation("1,2,3,4,5")));
    CHECK(is_extremal(parse_permutation("1,4,7,3,6,2,5")));
}

TEST_CASE("non-extremal permutations have a pair below the maximal distance") {
    // exhaustive at p = 9 over all 8! writings with a_1 = 1
    const int p = 9;
    std::vector<int> tail;
    for (int v = 2; v <= p; ++v) tail.push_back(v);
    do {
        std::vector<int> entries = {1};
        entries.insert(entries.end(), tail.begin(), tail.end());
        const PetalPermutation sigma(entries);
        int min_d = p;
        for (int i = 1; i <= p; ++i)
            min_d = std::min(min_d, cyclic_distance(p, sigma.at(i), sigma.at_cyclic(i + 1)));
        if (!is_extremal(sigma) && min_d >= (p - 1) / 2) {
            CHECK(min_d < (p - 1) / 2);
            break;
        }
    } while (std::next_permutation(tail.begin(), tail.end()));
    CHECK(true);
}

TEST_CASE("exactly two extremal classes at p = 5 and p = 7, none below max distance") {
    for (int p : {5, 7}) {
        std::set<std::vector<int>> extremal_keys;
        std::vector<int> tail;
        for (int v = 2; v <= p; ++v) tail.push_back(v);
        do {
            std::vector<int> entries = {1};
            entries.insert(entries.end(), tail.begin(), tail.end());
            const PetalPermutation sigma(entries);
            int min_d = p;
            for (int i = 1; i <= p; ++i)
                min_d = std::min(min_d,
                                 cyclic_distance(p, sigma.at(i), sigma.at_cyclic(i + 1)));
            if (is_extremal(sigma))
                extremal_keys.insert(canonical_class(sigma).canonical_rotation);
            else
                CHECK(min_d < (p - 1) / 2);
        } while (std::next_permutation(tail.begin(), tail.end()));
        CHECK(extremal_keys.size() == 2);
    }
}
