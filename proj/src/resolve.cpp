#include "petalknot/resolve.hpp"

#include "petalknot/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace petalknot {

namespace detail {

PlanarDiagram pd_from_passes(const std::vector<CrossingPass>& passes) {
    PlanarDiagram pd;
    const int m = static_cast<int>(passes.size());
    if (m == 0) return pd;
    if (m % 2 != 0) throw VerificationError("odd number of crossing passes");

    std::map<long, std::pair<int, int>> by_id; // id -> (over pass idx, under pass idx), 1-based
    for (int i = 1; i <= m; ++i) {
        const auto& p = passes[static_cast<std::size_t>(i - 1)];
        auto& [ov, un] = by_id[p.crossing_id];
        int& slot = p.over ? ov : un;
        if (slot != 0) throw VerificationError("crossing passed twice on the same level");
        slot = i;
    }
    auto arc_before = [m](int i) { return i == 1 ? m : i - 1; };
    for (const auto& [id, ou] : by_id) {
        const auto [ov, un] = ou;
        if (ov == 0 || un == 0)
            throw VerificationError("crossing lacks an over or an under pass");
        const auto& po = passes[static_cast<std::size_t>(ov - 1)];
        const auto& pu = passes[static_cast<std::size_t>(un - 1)];
        const double cross = po.dirx * pu.diry - po.diry * pu.dirx;
        if (cross == 0.0) throw VerificationError("tangent crossing directions");
        Crossing c{};
        c.sign = cross > 0 ? 1 : -1;
        c.arcs[0] = arc_before(un);
        c.arcs[2] = un;
        c.arcs[static_cast<std::size_t>(c.over_in_pos())] = arc_before(ov);
        c.arcs[static_cast<std::size_t>(c.over_out_pos())] = ov;
        pd.crossings.push_back(c);
    }
    pd.validate();
    return pd;
}

} // namespace detail

PerturbationSchedule PerturbationSchedule::defaults(int n) { return star(n); }

PerturbationSchedule PerturbationSchedule::ramp(int n) {
    PerturbationSchedule s;
    for (int k = 1; k <= n; ++k) s.offsets.push_back(k * 1e-3);
    return s;
}

PerturbationSchedule PerturbationSchedule::star(int n) {
    // alternating signs push each strand toward its petals, producing the star
    // pattern with a monogon at every petal tip; the tiny magnitude ramp keeps
    // the offsets pairwise distinct without disturbing any crossing order
    PerturbationSchedule s;
    for (int k = 1; k <= n; ++k)
        s.offsets.push_back((k % 2 == 0 ? 1.0 : -1.0) * 1e-3 * (1.0 + k * 1e-4));
    return s;
}

PerturbationSchedule PerturbationSchedule::seeded(int n, unsigned seed) {
    if (seed == 0) return defaults(n);
    PerturbationSchedule s;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-0.05, 0.05);
    for (int k = 1; k <= n; ++k) {
        double o;
        bool ok;
        do {
            o = dist(rng);
            ok = std::abs(o) > 1e-6;
            for (double prev : s.offsets) ok = ok && std::abs(o - prev) > 1e-6;
        } while (!ok);
        s.offsets.push_back(o);
    }
    return s;
}

namespace {

struct Vec {
    double x, y;
};

Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
Vec operator*(double s, Vec a) { return {s * a.x, s * a.y}; }
double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
double norm(Vec a) { return std::sqrt(dot(a, a)); }

} // namespace

PlanarDiagram resolve(const UbercrossingDiagram& d, const PerturbationSchedule& sched) {
    const int n = d.n();
    if (static_cast<int>(sched.offsets.size()) != n)
        throw ParseError("schedule must provide one offset per strand");
    for (int i = 0; i < n; ++i) {
        if (std::abs(sched.offsets[static_cast<std::size_t>(i)]) >= 0.1)
            throw ParseError("offset magnitude must stay below 0.1 of the radius");
        for (int j = i + 1; j < n; ++j)
            if (sched.offsets[static_cast<std::size_t>(i)] ==
                sched.offsets[static_cast<std::size_t>(j)])
                throw ParseError("offsets must be pairwise distinct");
    }
    if (n == 1) return PlanarDiagram{}; // single chord, no crossings

    const double two_pi = 2.0 * std::acos(-1.0);
    auto endpoint_pos = [&](int e) {
        const double th = -two_pi * (e - 1) / (2.0 * n);
        return Vec{std::cos(th), std::sin(th)};
    };
    // strand k: line through foot o_k * n_k with direction u_k
    std::vector<Vec> u(static_cast<std::size_t>(n) + 1), nor(static_cast<std::size_t>(n) + 1);
    std::vector<double> off(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        const Vec a = endpoint_pos(k);
        u[static_cast<std::size_t>(k)] = {-a.x, -a.y};
        nor[static_cast<std::size_t>(k)] = {a.y, -a.x}; // ccw rotation of u
        off[static_cast<std::size_t>(k)] = sched.offsets[static_cast<std::size_t>(k - 1)];
    }

    struct Hit {
        Vec at;
        double tj, tk; // param along strands j, k measured from the j / k endpoint side
    };
    std::map<std::pair<int, int>, Hit> hits;
    std::vector<Vec> all_pts;
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            const Vec nj = nor[static_cast<std::size_t>(j)], nk = nor[static_cast<std::size_t>(k)];
            const double det = nj.x * nk.y - nj.y * nk.x;
            if (std::abs(det) < 1e-12) throw ParseError("degenerate schedule: parallel strands");
            const double oj = off[static_cast<std::size_t>(j)], ok = off[static_cast<std::size_t>(k)];
            const Vec x = {(oj * nk.y - ok * nj.y) / det, (ok * nj.x - oj * nk.x) / det};
            if (norm(x) > 0.995)
                throw ParseError("degenerate schedule: crossing escapes the disc");
            const Vec aj = endpoint_pos(j) + oj * nj;
            const Vec ak = endpoint_pos(k) + ok * nk;
            hits[{j, k}] = Hit{x, dot(u[static_cast<std::size_t>(j)], x - aj),
                               dot(u[static_cast<std::size_t>(k)], x - ak)};
            all_pts.push_back(x);
        }
    for (std::size_t i = 0; i < all_pts.size(); ++i)
        for (std::size_t j = i + 1; j < all_pts.size(); ++j)
            if (norm(all_pts[i] - all_pts[j]) <= sched.tolerance)
                throw ParseError("degenerate schedule: crossings closer than tolerance");

    // traversal from endpoint 1; strand travelled from endpoint e to antipode
    std::vector<detail::CrossingPass> passes;
    int e = 1;
    do {
        const int s = d.strand_of(e);
        const bool forward = e <= n; // direction u_s when starting at the near endpoint
        const Vec dir = forward ? u[static_cast<std::size_t>(s)]
                                : Vec{-u[static_cast<std::size_t>(s)].x,
                                      -u[static_cast<std::size_t>(s)].y};
        struct Ev {
            double t;
            int other;
        };
        std::vector<Ev> evs;
        for (int o = 1; o <= n; ++o) {
            if (o == s) continue;
            const Hit& h = hits.at({std::min(s, o), std::max(s, o)});
            const double t = (s < o) ? h.tj : h.tk;
            evs.push_back({forward ? t : -t, o});
        }
        std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) { return a.t < b.t; });
        for (const Ev& ev : evs)
            passes.push_back(detail::CrossingPass{
                static_cast<long>(std::min(s, ev.other)) * (2 * n) + std::max(s, ev.other),
                d.height(s) < d.height(ev.other), dir.x, dir.y});
        e = d.partner(d.antipode(e));
    } while (e != 1);

    PlanarDiagram pd = detail::pd_from_passes(passes);
    if (pd.crossing_count() != n * (n - 1) / 2)
        throw VerificationError("resolve produced the wrong crossing count");
    return pd;
}

PlanarDiagram resolve(const UbercrossingDiagram& d) {
    return resolve(d, PerturbationSchedule::defaults(d.n()));
}

PlanarDiagram reverse_petal_diagram(const PetalPermutation& sigma) {
    const UbercrossingDiagram pre = unfold_top(from_petal(sigma));
    const int n = pre.n();

    // nesting arc; for the 2-strand unknot pre-petal take the merged arc (3,4)
    std::pair<int, int> nest;
    if (n == 2) {
        nest = {3, 4};
    } else {
        const auto nests = pre.nesting_arcs();
        if (nests.size() != 1)
            throw VerificationError("pre-petal projection must have one nesting loop");
        nest = nests[0];
    }

    // traversal anchored at the nesting arc: cross it from g1 to g2, then walk
    const int g1 = nest.first, g2 = nest.second;
    std::vector<int> strands; // s_1 .. s_n
    int e = g2;
    while (true) {
        strands.push_back(pre.strand_of(e));
        const int exit = pre.antipode(e);
        if (exit == g1) break;
        e = pre.partner(exit);
        if (static_cast<int>(strands.size()) > n)
            throw VerificationError("pre-petal traversal failed to close");
    }
    if (static_cast<int>(strands.size()) != n)
        throw VerificationError("pre-petal traversal missed strands");

    // connector x positions: between consecutive strands alternating sides,
    // nesting connector rightmost
    const int n_right_others = (n - 2) / 2;
    std::vector<double> conn_x(static_cast<std::size_t>(n)); // conn[i] joins s_i+1, s_i+2; conn[n-1] = nesting
    int next_left = 1, next_right = 1;
    for (int i = 1; i <= n - 1; ++i)
        conn_x[static_cast<std::size_t>(i - 1)] =
            (i % 2 == 1) ? -static_cast<double>(next_left++) : static_cast<double>(next_right++);
    conn_x[static_cast<std::size_t>(n - 1)] = n_right_others + 1;

    // horizontal extent of each height line = x range of its two connectors
    std::vector<double> xmin(static_cast<std::size_t>(n) + 1, 0.0),
        xmax(static_cast<std::size_t>(n) + 1, 0.0);
    auto line_of = [&](int i) { return pre.height(strands[static_cast<std::size_t>(i)]); };
    for (int i = 0; i < n; ++i) {
        const int prev_conn = (i == 0) ? n - 1 : i - 1; // connector entering s_{i+1}
        const int next_conn = i;                        // connector leaving s_{i+1}
        const double xa = conn_x[static_cast<std::size_t>(prev_conn)];
        const double xb = conn_x[static_cast<std::size_t>(next_conn)];
        xmin[static_cast<std::size_t>(line_of(i))] = std::min(xa, xb);
        xmax[static_cast<std::size_t>(line_of(i))] = std::max(xa, xb);
    }

    // crossings: connector c (x = X, between lines la < lb) x line l
    struct RpCross {
        int conn;
        int line;
    };
    std::vector<RpCross> crossings;
    auto conn_lines = [&](int ci) {
        const int sa = strands[static_cast<std::size_t>(ci)];
        const int sb = strands[static_cast<std::size_t>((ci + 1) % n)];
        return std::pair(pre.height(sa), pre.height(sb));
    };
    for (int ci = 0; ci < n; ++ci) {
        const auto [ha, hb] = conn_lines(ci);
        const double X = conn_x[static_cast<std::size_t>(ci)];
        for (int l = std::min(ha, hb) + 1; l < std::max(ha, hb); ++l)
            if (xmin[static_cast<std::size_t>(l)] < X && X < xmax[static_cast<std::size_t>(l)])
                crossings.push_back({ci, l});
    }
    auto cross_id = [&](int ci, int l) { return static_cast<long>(ci) * (n + 1) + l; };

    // walk the closed polyline; over/under by first visit (right of A = over)
    std::map<long, bool> decided; // id -> first visitor was over?
    std::vector<detail::CrossingPass> passes;
    auto visit = [&](long id, double X, double dirx, double diry) {
        bool over;
        if (decided.count(id)) {
            over = !decided.at(id);
        } else {
            over = X > 0;
            decided[id] = over;
        }
        passes.push_back(detail::CrossingPass{id, over, dirx, diry});
    };

    // start on the nesting connector (rightmost strand), then s_1, conn_1, ...
    for (int step = 0; step < n; ++step) {
        const int ci = (n - 1 + step) % n; // connector before s_{step+1}
        // connector pass: vertical at X from line(prev end) to line(next start)
        const auto [ha, hb] = conn_lines(ci);
        const double X = conn_x[static_cast<std::size_t>(ci)];
        const double dir = (hb > ha) ? -1.0 : 1.0; // y = -line, travel toward hb
        std::vector<int> ls;
        for (int l = std::min(ha, hb) + 1; l < std::max(ha, hb); ++l)
            if (xmin[static_cast<std::size_t>(l)] < X && X < xmax[static_cast<std::size_t>(l)])
                ls.push_back(l);
        if (hb < ha) std::reverse(ls.begin(), ls.end()); // travel from ha toward hb
        for (int l : ls) visit(cross_id(ci, l), X, 0.0, dir);

        // line pass: s_{step+1} from this connector's x to the next one's
        const int line = line_of(step % n);
        const double x_from = X;
        const double x_to = conn_x[static_cast<std::size_t>(step % n)];
        std::vector<std::pair<double, long>> evs;
        for (const auto& rc : crossings)
            if (rc.line == line) evs.emplace_back(conn_x[static_cast<std::size_t>(rc.conn)],
                                                  cross_id(rc.conn, rc.line));
        std::sort(evs.begin(), evs.end());
        if (x_to < x_from) std::reverse(evs.begin(), evs.end());
        for (const auto& [x, id] : evs) {
            if ((x_to > x_from && (x <= x_from || x >= x_to)) ||
                (x_to < x_from && (x >= x_from || x <= x_to)))
                continue;
            visit(id, x, x_to > x_from ? 1.0 : -1.0, 0.0);
        }
    }

    if (passes.size() != 2 * crossings.size())
        throw VerificationError("reverse petal traversal missed crossings");
    return detail::pd_from_passes(passes);
}

} // namespace petalknot
