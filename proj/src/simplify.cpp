#include "petalknot/simplify.hpp"

#include "petalknot/errors.hpp"
#include "petalknot/resolve.hpp"
#include "petalknot/uberdiag.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

namespace petalknot {

long petal_crossing_bound(int p) {
    if (p < 3 || p % 2 == 0) throw ParseError("petal count must be odd and >= 3");
    return (static_cast<long>(p) * p - 2 * p - 3) / 4;
}

bool pipeline_is_generic(const PetalPermutation& sigma) {
    const int p = sigma.p();
    const int removals = (p - 3) / 2;
    std::vector<int> pos; // angular positions of the removed strands
    for (int i = 1; i <= p; ++i)
        if (sigma.at(i) <= removals) pos.push_back(i);
    for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = a + 1; b < pos.size(); ++b) {
            const int d = std::abs(pos[a] - pos[b]);
            if (d == 1 || d == p - 1) return false;
        }
    return true;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Vec {
    double x, y;
};

double ang_of(Vec v) { return std::atan2(v.y, v.x); }

// cyclic successor strand
int succ(int k, int p) { return k % p + 1; }
int pred(int k, int p) { return (k + p - 2) % p + 1; }

long chord_pair_id(int a, int b, int p) {
    if (a > b) std::swap(a, b);
    return static_cast<long>(a) * (2 * p) + b;
}

long ring_pair_id(int a, int b, int p) {
    if (a > b) std::swap(a, b);
    return static_cast<long>(4 * p) * p + static_cast<long>(a) * (2 * p) + b;
}

// Geometry of the alternating-offset star for one petal permutation.
struct StarGeometry {
    int p;
    std::vector<int> heights;                 // [1..p]
    std::vector<Vec> u;                       // chord directions [1..p]
    std::map<std::pair<int, int>, Vec> cross; // chord pair -> intersection point
    std::map<std::pair<int, int>, double> par; // param of the crossing along .first's chord
    std::vector<int> petal_end;               // petal (k,k+1) attaches at chord k's
                                               // high-param end (+1) or low end (-1)
    double r_star = 0.0;                       // radius of the outermost crossings

    explicit StarGeometry(const PetalPermutation& sigma) : p(sigma.p()) {
        heights.assign(static_cast<std::size_t>(p) + 1, 0);
        for (int k = 1; k <= p; ++k) heights[static_cast<std::size_t>(k)] = sigma.at(k);
        u.assign(static_cast<std::size_t>(p) + 1, Vec{0, 0});
        std::vector<Vec> nor(static_cast<std::size_t>(p) + 1);
        std::vector<double> off(static_cast<std::size_t>(p) + 1);
        const PerturbationSchedule sched = PerturbationSchedule::star(p);
        for (int k = 1; k <= p; ++k) {
            const double th = -2.0 * kPi * (k - 1) / (2.0 * p);
            const Vec a{std::cos(th), std::sin(th)};
            u[static_cast<std::size_t>(k)] = {-a.x, -a.y};
            nor[static_cast<std::size_t>(k)] = {a.y, -a.x};
            off[static_cast<std::size_t>(k)] = sched.offsets[static_cast<std::size_t>(k - 1)];
        }
        for (int a = 1; a <= p; ++a)
            for (int b = a + 1; b <= p; ++b) {
                const Vec na = nor[static_cast<std::size_t>(a)],
                          nb = nor[static_cast<std::size_t>(b)];
                const double det = na.x * nb.y - na.y * nb.x;
                const double oa = off[static_cast<std::size_t>(a)],
                             ob = off[static_cast<std::size_t>(b)];
                const Vec x{(oa * nb.y - ob * na.y) / det, (ob * na.x - oa * nb.x) / det};
                cross[{a, b}] = x;
                par[{a, b}] = u[static_cast<std::size_t>(a)].x * x.x +
                              u[static_cast<std::size_t>(a)].y * x.y;
                par[{b, a}] = u[static_cast<std::size_t>(b)].x * x.x +
                              u[static_cast<std::size_t>(b)].y * x.y;
                r_star = std::max(r_star, std::hypot(x.x, x.y));
            }

        // verify the monogon structure: each petal's tip crossing is extremal
        // along both of its chords, at the end where the petal arc attaches
        const UbercrossingDiagram d = from_petal(sigma);
        petal_end.assign(static_cast<std::size_t>(p) + 1, 0);
        for (auto [e1, e2] : d.arcs()) {
            int a = d.strand_of(e1), b = d.strand_of(e2);
            int ea = e1, eb = e2;
            if (succ(a, p) != b) {
                std::swap(a, b);
                std::swap(ea, eb);
            }
            if (succ(a, p) != b) throw VerificationError("petal arc joins non-neighbours");
            // the arc attaches at chord a's far end iff its endpoint label > p
            const int side_a = ea > p ? +1 : -1; // +1 = high-param end (t ~ +1)
            const int side_b = eb > p ? +1 : -1;
            petal_end[static_cast<std::size_t>(a)] = side_a;
            for (int o = 1; o <= p; ++o) {
                if (o == a || o == b) continue;
                const double t_tip = par.at({a, b});
                const double t_o = par.at({a, o});
                if (side_a > 0 ? t_o >= t_tip : t_o <= t_tip)
                    throw VerificationError("petal tip is not extremal along its chord");
                const double s_tip = par.at({b, a});
                const double s_o = par.at({b, o});
                if (side_b > 0 ? s_o >= s_tip : s_o <= s_tip)
                    throw VerificationError("petal tip is not extremal along its chord");
            }
        }
    }

    long tip_id(int k) const { return chord_pair_id(k, succ(k, p), p); }
    Vec tip_point(int k) const {
        const int a = std::min(k, succ(k, p)), b = std::max(k, succ(k, p));
        return cross.at({a, b});
    }
};

struct Ring {
    int strand = 0;
    int order = 0;        // removal order, 1-based
    double phi_in = 0.0;  // junction angle at tip (pred, strand)
    double phi_out = 0.0; // junction angle at tip (strand, succ)
    double arc_delta = 0.0; // signed sweep from phi_in; >0 = counterclockwise
};

double norm_angle(double a) {
    while (a <= -kPi) a += 2 * kPi;
    while (a > kPi) a -= 2 * kPi;
    return a;
}

// offset of angle theta inside the swept interval, or nullopt
std::optional<double> sweep_offset(const Ring& r, double theta) {
    double rel = norm_angle(theta - r.phi_in);
    if (r.arc_delta > 0) {
        if (rel < 0) rel += 2 * kPi;
        if (rel > 1e-12 && rel < r.arc_delta - 1e-12) return rel;
    } else {
        if (rel > 0) rel -= 2 * kPi;
        if (rel < -1e-12 && rel > r.arc_delta + 1e-12) return -rel;
    }
    return std::nullopt;
}

struct PipelineResult {
    PlanarDiagram pd;
    StarContext ctx;
};

// Build the diagram after `stage` steps of the reduction pipeline.
PipelineResult build_stage(const PetalPermutation& sigma, int stage) {
    const int p = sigma.p();
    const int max_removals = (p - 3) / 2;
    if (stage < 0 || stage > 1 + max_removals)
        throw ParseError("pipeline stage out of range");
    const StarGeometry g(sigma);

    StarContext ctx{sigma, stage, 0, {}, {}};
    ctx.strand_crossings.assign(static_cast<std::size_t>(p) + 1, {});
    for (int k = 1; k <= p; ++k) ctx.tip_crossings.push_back(g.tip_id(k));

    if (stage == 0) {
        // the raw star is exactly resolve() under the star schedule
        const UbercrossingDiagram d = from_petal(sigma);
        PlanarDiagram pd = resolve(d, PerturbationSchedule::star(p));
        ctx.crossing_count = pd.crossing_count();
        for (int k = 1; k <= p; ++k) {
            std::vector<std::pair<double, long>> evs;
            for (int o = 1; o <= p; ++o)
                if (o != k) evs.emplace_back(g.par.at({k, o}), chord_pair_id(k, o, p));
            std::sort(evs.begin(), evs.end());
            for (auto& [t, id] : evs)
                ctx.strand_crossings[static_cast<std::size_t>(k)].push_back(id);
        }
        return {std::move(pd), std::move(ctx)};
    }

    const int removals = stage - 1;
    // removal flags for the FULL pipeline: side choices must stay compatible
    // with strands that are rerouted at later stages as well
    std::vector<char> removed_final(static_cast<std::size_t>(p) + 1, 0);
    for (int k = 1; k <= p; ++k)
        if (g.heights[static_cast<std::size_t>(k)] <= (p - 3) / 2)
            removed_final[static_cast<std::size_t>(k)] = 1;
    std::vector<char> removed(static_cast<std::size_t>(p) + 1, 0);
    std::vector<Ring> rings;
    for (int i = 1; i <= removals; ++i) {
        int s = 0;
        for (int k = 1; k <= p; ++k)
            if (g.heights[static_cast<std::size_t>(k)] == i) s = k;
        removed[static_cast<std::size_t>(s)] = 1;
        Ring r;
        r.strand = s;
        r.order = i;
        const int a_in = pred(s, p); // entering junction is tip (a_in, s)
        r.phi_in = ang_of(g.tip_point(a_in));
        r.phi_out = ang_of(g.tip_point(s));
        const double ccw = [&] {
            double d0 = norm_angle(r.phi_out - r.phi_in);
            if (d0 <= 0) d0 += 2 * kPi;
            return d0;
        }();
        int tips_ccw = 0, tips_cw = 0;
        for (int k = 1; k <= p; ++k) {
            if (k == a_in || k == s) continue;
            double rel = norm_angle(ang_of(g.tip_point(k)) - r.phi_in);
            if (rel < 0) rel += 2 * kPi;
            if (rel < ccw)
                ++tips_ccw;
            else
                ++tips_cw;
        }
        // A sweep may not dip at a junction both of whose strands the full
        // pipeline reroutes: a later mover attached there would be trapped
        // inside this ring's dip pocket. Prefer the side surrounding fewer
        // petals (ties clockwise), fall back to the other side.
        auto side_ok = [&](double delta) {
            Ring probe = r;
            probe.arc_delta = delta;
            for (const Ring& older : rings) {
                for (const int tip : {pred(older.strand, p), older.strand}) {
                    if (!sweep_offset(probe, ang_of(g.tip_point(tip)))) continue;
                    const int other = (tip == older.strand) ? succ(older.strand, p)
                                                            : pred(older.strand, p);
                    if (removed_final[static_cast<std::size_t>(other)]) return false;
                }
            }
            return true;
        };
        const double preferred = tips_ccw < tips_cw ? ccw : ccw - 2 * kPi;
        const double fallback = preferred > 0 ? ccw - 2 * kPi : ccw;
        if (side_ok(preferred)) {
            r.arc_delta = preferred;
        } else if (side_ok(fallback)) {
            r.arc_delta = fallback;
        } else {
            throw VerificationError(
                "strand removal: no sweep side avoids rerouted junction pairs");
        }
        rings.push_back(r);
    }

    // A rerouted strand sweeps outside the star region but cannot cross the
    // height-interpolating junction loops left by earlier removals. At every
    // earlier junction inside its sweep it dips under the junction instead,
    // picking up one crossing with the surviving chord's stub at that tip.
    struct StubCross {
        long id;
        int mover; // rerouted strand
        int mover_order;
        int owner;        // the earlier removed strand whose junction is passed
        int stub;         // surviving chord crossed near the junction, 0 if none
        int junction_tip; // petal index of the junction passed
        double sweep;     // offset along the mover's sweep
    };
    std::vector<StubCross> stub_crossings;
    for (const Ring& mover : rings) {
        for (const Ring& older : rings) {
            if (older.order >= mover.order) continue;
            // junction tips of `older`: tip (pred, s) and tip (s, succ)
            for (const int tip : {pred(older.strand, p), older.strand}) {
                const double phi = ang_of(g.tip_point(tip));
                const auto off = sweep_offset(mover, phi);
                if (!off) continue;
                const int other =
                    (tip == older.strand) ? succ(older.strand, p) : pred(older.strand, p);
                const int stub = removed[static_cast<std::size_t>(other)] ? 0 : other;
                stub_crossings.push_back(
                    StubCross{ring_pair_id(mover.strand, older.strand, p), mover.strand,
                              mover.order, older.strand, stub, tip, *off});
            }
        }
    }
    // a mover passes exactly one junction of every earlier ring when no two
    // removed strands are angular neighbours
    for (const Ring& mover : rings)
        for (const Ring& older : rings) {
            if (older.order >= mover.order) continue;
            const int d = std::abs(mover.strand - older.strand);
            if (d == 1 || d == p - 1) continue;
            int cnt = 0;
            for (const auto& sc : stub_crossings)
                if (sc.mover == mover.strand && sc.owner == older.strand) ++cnt;
            if (cnt != 1)
                throw VerificationError(
                    "strand removal: reroute passes the wrong junction count");
        }

    auto alive_neighbours = [&](int a, int b) {
        return succ(a, p) == b || succ(b, p) == a;
    };

    // assemble traversal passes following the angular chain 1 -> 2 -> ... -> p
    std::vector<detail::CrossingPass> passes;
    auto over_of = [&](int s, int o) {
        return g.heights[static_cast<std::size_t>(s)] < g.heights[static_cast<std::size_t>(o)];
    };
    for (int k = 1; k <= p; ++k) {
        if (!removed[static_cast<std::size_t>(k)]) {
            // straight segment from tip (k-1,k) to tip (k,k+1)
            const double t_from = g.par.at({k, pred(k, p)});
            const double t_to = g.par.at({k, succ(k, p)});
            const bool fwd = t_to > t_from;
            const Vec dir = fwd ? g.u[static_cast<std::size_t>(k)]
                                : Vec{-g.u[static_cast<std::size_t>(k)].x,
                                      -g.u[static_cast<std::size_t>(k)].y};
            struct Ev {
                double t;
                long id;
                bool over;
            };
            std::vector<Ev> evs;
            for (int o = 1; o <= p; ++o) {
                if (o == k || removed[static_cast<std::size_t>(o)] || alive_neighbours(k, o))
                    continue;
                evs.push_back(Ev{fwd ? g.par.at({k, o}) : -g.par.at({k, o}),
                                 chord_pair_id(k, o, p), over_of(k, o)});
            }
            // stub crossings sit just shy of the junction tip, with later
            // movers dipping deeper toward the star
            for (const auto& sc : stub_crossings) {
                if (sc.stub != k) continue;
                const int jt = sc.junction_tip; // tip (jt, jt+1); k is one side
                const int partner = (jt == k) ? succ(k, p) : jt;
                const double tip_par = g.par.at({k, partner});
                const double nudge =
                    (tip_par > 0 ? -1.0 : 1.0) * 1e-9 * sc.mover_order;
                evs.push_back(Ev{fwd ? tip_par + nudge : -(tip_par + nudge), sc.id,
                                 over_of(k, sc.mover)});
            }
            std::sort(evs.begin(), evs.end(),
                      [](const Ev& a, const Ev& b) { return a.t < b.t; });
            for (const auto& ev : evs) {
                passes.push_back(detail::CrossingPass{ev.id, ev.over, dir.x, dir.y});
                ctx.strand_crossings[static_cast<std::size_t>(k)].push_back(ev.id);
            }
        } else {
            const Ring& r = *std::find_if(rings.begin(), rings.end(),
                                          [&](const Ring& q) { return q.strand == k; });
            std::vector<const StubCross*> hits;
            for (const auto& sc : stub_crossings)
                if (sc.mover == k && sc.stub != 0) hits.push_back(&sc);
            std::sort(hits.begin(), hits.end(),
                      [](auto* a, auto* b) { return a->sweep < b->sweep; });
            const double tang = r.arc_delta > 0 ? 1.0 : -1.0;
            for (const auto* sc : hits) {
                const double phi = ang_of(g.tip_point(sc->junction_tip));
                passes.push_back(detail::CrossingPass{sc->id, over_of(k, sc->stub),
                                                      -tang * std::sin(phi),
                                                      tang * std::cos(phi)});
            }
        }
    }
    PipelineResult res{detail::pd_from_passes(passes), std::move(ctx)};
    res.ctx.crossing_count = res.pd.crossing_count();
    return res;
}

void check_pd_matches(const PlanarDiagram& pd, const PetalPermutation& sigma, int stage) {
    const PipelineResult expect = build_stage(sigma, stage);
    const auto a = pd.crossings.empty() ? pd : renumber_along_traversal(pd);
    const auto b = expect.pd.crossings.empty() ? expect.pd
                                               : renumber_along_traversal(expect.pd);
    if (a.crossing_count() != b.crossing_count())
        throw ParseError("context inconsistent with diagram (crossing count)");
    if (gauss_code_str(gauss_code(a)) != gauss_code_str(gauss_code(b)))
        throw ParseError("context inconsistent with diagram (traversal)");
}

} // namespace

std::pair<PlanarDiagram, StarContext> star_diagram(const PetalPermutation& sigma) {
    PipelineResult r = build_stage(sigma, 0);
    return {std::move(r.pd), std::move(r.ctx)};
}

std::pair<PlanarDiagram, StarContext> remove_monogons(const PlanarDiagram& pd,
                                                      const StarContext& ctx) {
    if (ctx.stage != 0) throw ParseError("monogons already removed");
    check_pd_matches(pd, ctx.sigma, 0);
    const int p = ctx.p();
    PipelineResult r = build_stage(ctx.sigma, 1);
    if (r.pd.crossing_count() != pd.crossing_count() - p)
        throw VerificationError("monogon removal must delete exactly p crossings");
    for (int k = 1; k <= p; ++k)
        if (static_cast<int>(r.ctx.strand_crossings[static_cast<std::size_t>(k)].size()) !=
            p - 3)
            throw VerificationError("each strand must keep p-3 crossings after monogons");
    return {std::move(r.pd), std::move(r.ctx)};
}

std::pair<PlanarDiagram, StarContext> strand_removal(const PlanarDiagram& pd,
                                                     const StarContext& ctx, int iteration) {
    const int p = ctx.p();
    if (ctx.stage < 1) throw ParseError("remove monogons before strand removal");
    if (iteration != ctx.removals_done() + 1)
        throw ParseError("strand removals must be applied in height order");
    if (iteration > (p - 3) / 2) throw ParseError("iteration exceeds (p-3)/2");
    check_pd_matches(pd, ctx.sigma, ctx.stage);
    PipelineResult r = build_stage(ctx.sigma, ctx.stage + 1);
    if (pipeline_is_generic(ctx.sigma)) {
        const int net = r.pd.crossing_count() - pd.crossing_count();
        if (net != 2 * iteration + 1 - p)
            throw VerificationError("strand removal net crossing change mismatch");
    }
    return {std::move(r.pd), std::move(r.ctx)};
}

PlanarDiagram petal_reduced_diagram(const PetalPermutation& sigma) {
    const int p = sigma.p();
    PipelineResult r = build_stage(sigma, 1 + (p - 3) / 2);
    const long expect = petal_crossing_bound(p);
    if (pipeline_is_generic(sigma)) {
        if (r.pd.crossing_count() != expect)
            throw VerificationError("pipeline crossing count differs from (p^2-2p-3)/4");
    } else if (r.pd.crossing_count() > expect) {
        throw VerificationError("pipeline exceeded the (p^2-2p-3)/4 bound");
    }
    return std::move(r.pd);
}

} // namespace petalknot
