// Acceptance suite: one test case per criterion, each printing a PASS line
// with its runtime when every check in it held.

#include "petalknot/braid.hpp"
#include "petalknot/invariants.hpp"
#include "petalknot/petalperm.hpp"
#include "petalknot/resolve.hpp"
#include "petalknot/simplify.hpp"
#include "petalknot/tablekit.hpp"
#include "petalknot/uberdiag.hpp"
#include "petalknot/unknot.hpp"

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <map>
#include <set>

using namespace petalknot;

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, const char* what, const Stopwatch& sw, bool ok) {
    std::printf("[%s] criterion %d (%.2fs): %s\n", ok ? "PASS" : "FAIL", criterion,
                sw.seconds(), what);
    std::fflush(stdout);
}

std::vector<PetalPermutation> class_members(const PetalPermutation& rep) {
    const auto cls = canonical_class(rep);
    const int p = rep.p();
    std::set<std::vector<int>> seen;
    std::vector<PetalPermutation> out;
    for (int r = 0; r < p; ++r) {
        std::vector<int> rot;
        for (int i = 0; i < p; ++i)
            rot.push_back(cls.diffs[static_cast<std::size_t>((i + r) % p)]);
        auto member = permutation_from_diffs(rot);
        if (seen.insert(member.entries()).second) out.push_back(std::move(member));
    }
    return out;
}

} // namespace

TEST_CASE("criterion 1: torus identities at r = 2, 3, 4") {
    Stopwatch sw;
    bool ok = true;
    for (int r = 2; r <= 4; ++r) {
        const auto sigma = torus_permutation(r);
        const int p = sigma.p();
        const auto pd = petal_reduced_diagram(sigma);
        ok &= pd.crossing_count() == petal_crossing_bound(p);
        ok &= pd.crossing_count() == r * r - 1;
        CHECK(pd.crossing_count() == r * r - 1);
        const auto alex = alexander(pd);
        CHECK(alex == torus_alexander(r, r + 1));
        ok &= alex == torus_alexander(r, r + 1);
        const auto cert = unknotting_sequence(sigma);
        CHECK(cert.total_cost == r * (r - 1) / 2);
        CHECK(cert.total_cost == unknotting_bound(p));
        ok &= cert.total_cost == r * (r - 1) / 2 && cert.total_cost == unknotting_bound(p);
    }
    CHECK(sw.seconds() < 10.0);
    report(1, "torus crossing counts, Alexander polynomials, unknotting costs", sw, ok);
}

TEST_CASE("criterion 2: extremal characterization at p = 5 and 7") {
    Stopwatch sw;
    bool ok = true;
    for (int p : {5, 7}) {
        int extremal_classes = 0;
        for (const auto& rep : enumerate_classes(p))
            extremal_classes += is_extremal(rep) ? 1 : 0;
        CHECK(extremal_classes == 2);
        ok &= extremal_classes == 2;

        std::vector<int> tail;
        for (int v = 2; v <= p; ++v) tail.push_back(v);
        do {
            std::vector<int> entries = {1};
            entries.insert(entries.end(), tail.begin(), tail.end());
            const PetalPermutation sigma(entries);
            const bool meets = unknotting_sequence(sigma).total_cost == unknotting_bound(p);
            if (meets != is_extremal(sigma)) {
                CHECK(meets == is_extremal(sigma));
                ok = false;
            }
        } while (std::next_permutation(tail.begin(), tail.end()));
    }
    CHECK(sw.seconds() < 60.0);
    report(2, "unknotting bound met exactly on the two extremal classes", sw, ok);
}

TEST_CASE("criterion 3: census at p = 5 and p = 7") {
    Stopwatch sw;
    bool ok = true;
    const auto table = KnotTable::bundled();

    const auto c5 = classify(5, kDefaultBracketBudget, &table);
    ok &= c5.flagged.empty() && c5.rows.size() == 3;
    CHECK(c5.rows.size() == 3);
    std::map<std::string, int> n5;
    for (const auto& r : c5.rows) n5[r.knot.value_or("?")] += r.class_count;
    CHECK(n5.at("0_1") == 6);
    CHECK(n5.at("3_1") == 1);
    CHECK(n5.at("3_1*") == 1);
    ok &= n5.size() == 3 && n5.at("3_1") == 1 && n5.at("3_1*") == 1;

    const auto c7 = classify(7, kDefaultBracketBudget, &table);
    ok &= c7.flagged.empty();
    std::map<std::string, int> n7; // classes per knot type, chiralities merged
    for (const auto& r : c7.rows) {
        std::string base = r.knot.value_or("?");
        if (!base.empty() && base.back() == '*') base.pop_back();
        n7[base] += r.class_count;
    }
    CHECK(n7.at("8_19") == 2);
    CHECK(n7.count("5_1") == 1);
    CHECK(n7.count("4_1") == 1);
    ok &= n7.at("8_19") == 2 && n7.count("5_1") == 1 && n7.count("4_1") == 1;
    ok &= n7.count("?") == 0; // every census fingerprint identified

    CHECK(sw.seconds() < 300.0);
    report(3, "p=5 census is {unknot, 3_1, 3_1*}; p=7 contains 8_19 twice, 5_1, 4_1", sw,
           ok);
}

namespace {

struct ComposeOutputs {
    UbercrossingDiagram granny;
    UbercrossingDiagram square;
    UbercrossingDiagram triple;
};

ComposeOutputs build_compositions() {
    const auto pre = unfold_top(from_petal(torus_permutation(2)));
    const auto granny = compose_simple(pre, pre);
    const auto square = compose_simple(pre, mirror(pre));
    const auto triple = compose_simple(granny, pre);
    return {granny, square, triple};
}

} // namespace

TEST_CASE("criterion 4: composition of trefoil pre-petals") {
    Stopwatch sw;
    bool ok = true;
    const auto tre = fingerprint(petal_reduced_diagram(torus_permutation(2)));
    const auto out = build_compositions();

    CHECK(out.granny.n() == 6);
    ok &= out.granny.n() == 6;
    const auto fg = fingerprint(resolve(out.granny));
    CHECK(fg.det == 9);
    CHECK(fg.alex == tre.alex * tre.alex);
    ok &= fg.det == 9 && fg.alex == tre.alex * tre.alex;

    bool has_l = false, has_r = false;
    for (const auto& r : ribbons(out.granny)) {
        has_l |= r.handedness == Handedness::Left;
        has_r |= r.handedness == Handedness::Right;
    }
    CHECK(has_l);
    CHECK(has_r);
    ok &= has_l && has_r;

    CHECK(out.triple.n() == 8);
    ok &= out.triple.n() == 8;

    CHECK(sw.seconds() < 10.0);
    report(4, "granny sum: 6 strands, det 9, Alexander squared, both ribbons; triple: 8",
           sw, ok);
}

TEST_CASE("criterion 5: bridge bound on every produced diagram") {
    Stopwatch sw;
    bool ok = true;
    const auto table = KnotTable::bundled();
    const char* torus_names[] = {nullptr, nullptr, "3_1", "8_19", "10_124"};

    for (int r = 2; r <= 4; ++r) {
        const auto rec = table.by_name(torus_names[r]);
        REQUIRE(rec.has_value());
        const auto petal = from_petal(torus_permutation(r));
        const auto pre = unfold_top(petal);
        CHECK(check_bridge_bound(petal, *rec));
        CHECK(check_bridge_bound(pre, *rec));
        CHECK(pre.n() == 2 * rec->bridge_number); // ueber equality for T(r, r+1)
        ok &= check_bridge_bound(petal, *rec) && pre.n() == 2 * rec->bridge_number;
    }

    const auto out = build_compositions();
    const auto granny_rec = table.by_name("granny");
    const auto square_rec = table.by_name("square");
    REQUIRE(granny_rec.has_value());
    REQUIRE(square_rec.has_value());
    CHECK(check_bridge_bound(out.granny, *granny_rec));
    CHECK(check_bridge_bound(out.square, *square_rec));
    CHECK(out.granny.n() == 2 * granny_rec->bridge_number); // Schubert equality
    CHECK(out.square.n() == 2 * square_rec->bridge_number);
    ok &= out.granny.n() == 6 && granny_rec->bridge_number == 3;

    // census diagrams from criterion 3
    for (int p : {5, 7}) {
        const auto census = classify(p, kDefaultBracketBudget, &table);
        for (const auto& row : census.rows) {
            REQUIRE(row.knot.has_value());
            std::string base = *row.knot;
            if (!base.empty() && base.back() == '*') base.pop_back();
            const auto rec = table.by_name(base);
            REQUIRE(rec.has_value());
            const bool pass = check_bridge_bound(from_petal(row.example), *rec);
            if (!pass) CHECK(pass);
            ok &= pass;
        }
    }
    report(5, "n >= 2 b(K) everywhere, with equality for torus pre-petals and composites",
           sw, ok);
}

TEST_CASE("criterion 6: oracle coherence across all p <= 7 classes") {
    Stopwatch sw;
    bool ok = true;
    long checked = 0;
    for (int p : {3, 5, 7}) {
        for (const auto& rep : enumerate_classes(p)) {
            const auto d = from_petal(rep);
            const auto f0 = fingerprint(resolve(d, PerturbationSchedule::defaults(p)));

            // (a) three perturbation schedules
            for (unsigned seed : {11u, 77u}) {
                const auto f =
                    fingerprint(resolve(d, PerturbationSchedule::seeded(p, seed)));
                if (f != f0) {
                    CHECK(f == f0);
                    ok = false;
                }
            }
            // (b) every member of the equivalence class
            for (const auto& member : class_members(rep)) {
                const auto f = fingerprint(resolve(from_petal(member)));
                if (f != f0) {
                    CHECK(f == f0);
                    ok = false;
                }
            }
            // (c) reverse petal and reduction pipeline routes
            const auto f_rev = fingerprint(reverse_petal_diagram(rep));
            const auto f_pipe = fingerprint(petal_reduced_diagram(rep));
            if (f_rev != f0 || f_pipe != f0) {
                CHECK(f_rev == f0);
                CHECK(f_pipe == f0);
                ok = false;
            }
            // (d) trivial petal insertion and loop removal
            const auto grown =
                add_trivial_petal(d, d.arcs()[1], (p + 1) / 2, Handedness::Left);
            const auto f_grown = fingerprint(petal_reduced_diagram(petal_permutation(grown)));
            if (f_grown != f0) {
                CHECK(f_grown == f0);
                ok = false;
            }
            for (const auto& rb : ribbons(d)) {
                const int ha = d.height(rb.strand_a), hb = d.height(rb.strand_b);
                if (std::abs(ha - hb) != 1) continue;
                const auto f_shrunk = fingerprint(resolve(remove_trivial_loop(d, rb.arc)));
                if (f_shrunk != f0) {
                    CHECK(f_shrunk == f0);
                    ok = false;
                }
                break;
            }
            ++checked;
        }
    }
    CHECK(checked == 2 + 8 + 108);
    CHECK(sw.seconds() < 600.0);
    report(6, "fingerprints agree across schedules, members, routes, and moves", sw, ok);
}

TEST_CASE("criterion 7: figure 7 regression") {
    Stopwatch sw;
    const auto big = parse_permutation("1,4,5,3,7,2,6");
    const auto small = remove_trivial_petal(big, 2);
    const bool moved = small == parse_permutation("1,3,5,2,4");
    CHECK(moved);

    const auto table = KnotTable::bundled();
    const auto f_big = fingerprint(petal_reduced_diagram(big));
    const auto f_small = fingerprint(petal_reduced_diagram(small));
    CHECK(f_big == f_small);
    const auto id = table.identify(f_big);
    REQUIRE(id.has_value());
    CHECK(id->record.name == "3_1");
    report(7, "trivial petal removal maps (1,4,5,3,7,2,6) to (1,3,5,2,4), both 3_1", sw,
           moved && f_big == f_small && id->record.name == "3_1");
}
