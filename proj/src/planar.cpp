#include "petalknot/planar.hpp"

#include "petalknot/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace petalknot {

namespace {

struct Pass {
    int crossing; // index into crossings
    bool over;
};

int in_arc(const Crossing& c, bool over) {
    return over ? c.arcs[static_cast<std::size_t>(c.over_in_pos())] : c.arcs[0];
}

int out_arc(const Crossing& c, bool over) {
    return over ? c.arcs[static_cast<std::size_t>(c.over_out_pos())] : c.arcs[2];
}

// arc label -> the unique pass consuming (in) / producing (out) it
struct Wiring {
    std::map<int, Pass> in_of;
    std::map<int, Pass> out_of;
};

Wiring wire(const PlanarDiagram& pd) {
    Wiring w;
    for (int ci = 0; ci < pd.crossing_count(); ++ci) {
        const Crossing& c = pd.crossings[static_cast<std::size_t>(ci)];
        if (c.sign != 1 && c.sign != -1) throw VerificationError("crossing sign must be +-1");
        for (bool over : {false, true}) {
            const int ia = in_arc(c, over), oa = out_arc(c, over);
            if (w.in_of.count(ia)) throw VerificationError("arc consumed twice");
            if (w.out_of.count(oa)) throw VerificationError("arc produced twice");
            w.in_of[ia] = Pass{ci, over};
            w.out_of[oa] = Pass{ci, over};
        }
    }
    if (w.in_of.size() != w.out_of.size())
        throw VerificationError("arc in/out counts differ");
    for (const auto& [arc, pass] : w.in_of)
        if (!w.out_of.count(arc)) throw VerificationError("arc has no producer");
    return w;
}

// passes in traversal order, starting from the consumer of the smallest arc
std::vector<Pass> traverse(const PlanarDiagram& pd, const Wiring& w) {
    std::vector<Pass> order;
    if (pd.crossings.empty()) return order;
    int arc = w.in_of.begin()->first;
    const int total = 2 * pd.crossing_count();
    for (int steps = 0; steps < total; ++steps) {
        const Pass p = w.in_of.at(arc);
        order.push_back(p);
        arc = out_arc(pd.crossings[static_cast<std::size_t>(p.crossing)], p.over);
    }
    if (arc != w.in_of.begin()->first)
        throw VerificationError("traversal does not close");
    return order;
}

} // namespace

int PlanarDiagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings) w += c.sign;
    return w;
}

void PlanarDiagram::validate() const {
    const Wiring w = wire(*this);
    const auto order = traverse(*this, w);
    if (static_cast<int>(order.size()) != 2 * crossing_count())
        throw VerificationError("PD is not a single closed curve");
    std::vector<int> seen(crossings.size(), 0);
    for (const Pass& p : order) seen[static_cast<std::size_t>(p.crossing)] += p.over ? 1 : 2;
    for (int v : seen)
        if (v != 3) throw VerificationError("crossing not traversed once over, once under");
}

std::vector<GaussEntry> gauss_code(const PlanarDiagram& pd) {
    std::vector<GaussEntry> best;
    if (pd.crossings.empty()) return best;
    const Wiring w = wire(pd);
    const auto order = traverse(pd, w);
    const int m = static_cast<int>(order.size());
    // canonical start: the rotation with the lexicographically least code
    for (int start = 0; start < m; ++start) {
        std::vector<GaussEntry> code;
        std::vector<int> id(pd.crossings.size(), 0);
        int next_id = 1;
        for (int s = 0; s < m; ++s) {
            const Pass& p = order[static_cast<std::size_t>((start + s) % m)];
            int& i = id[static_cast<std::size_t>(p.crossing)];
            if (i == 0) i = next_id++;
            code.push_back(GaussEntry{
                i, p.over, pd.crossings[static_cast<std::size_t>(p.crossing)].sign});
        }
        auto less = [](const std::vector<GaussEntry>& a, const std::vector<GaussEntry>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto ka = std::tuple(a[i].crossing, !a[i].over, a[i].sign);
                const auto kb = std::tuple(b[i].crossing, !b[i].over, b[i].sign);
                if (ka != kb) return ka < kb;
            }
            return false;
        };
        if (best.empty() || less(code, best)) best = std::move(code);
    }
    return best;
}

PlanarDiagram from_gauss(const std::vector<GaussEntry>& code) {
    PlanarDiagram pd;
    if (code.empty()) return pd;
    const int m = static_cast<int>(code.size());
    if (m % 2 != 0) throw ParseError("Gauss code must have even length");
    std::map<int, std::pair<int, int>> passes; // id -> (over pos, under pos), 1-based, 0 = unset
    std::map<int, int> signs;
    for (int i = 1; i <= m; ++i) {
        const GaussEntry& e = code[static_cast<std::size_t>(i - 1)];
        auto& [op, up] = passes[e.crossing];
        (e.over ? op : up) = i;
        if (signs.count(e.crossing) && signs[e.crossing] != e.sign)
            throw ParseError("inconsistent signs in Gauss code");
        signs[e.crossing] = e.sign;
    }
    auto arc_before = [m](int pos) { return pos == 1 ? m : pos - 1; };
    for (const auto& [id, ou] : passes) {
        const auto [op, up] = ou;
        if (op == 0 || up == 0)
            throw ParseError("crossing " + std::to_string(id) + " lacks an over or under pass");
        Crossing c{};
        c.sign = signs[id];
        c.arcs[0] = arc_before(up);
        c.arcs[2] = up;
        const int oi = c.sign > 0 ? 3 : 1;
        c.arcs[static_cast<std::size_t>(oi)] = arc_before(op);
        c.arcs[static_cast<std::size_t>(4 - oi)] = op;
        pd.crossings.push_back(c);
    }
    pd.validate();
    return pd;
}

std::string gauss_code_str(const std::vector<GaussEntry>& code) {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : code) {
        if (!first) os << " ";
        os << (e.over ? "O" : "U") << e.crossing << (e.sign > 0 ? "+" : "-");
        first = false;
    }
    return os.str();
}

PlanarDiagram renumber_along_traversal(const PlanarDiagram& pd) {
    if (pd.crossings.empty()) return pd;
    const Wiring w = wire(pd);
    const auto order = traverse(pd, w);
    std::map<int, int> newlab;
    for (int i = 1; i <= static_cast<int>(order.size()); ++i) {
        const Pass& p = order[static_cast<std::size_t>(i - 1)];
        const int oa = out_arc(pd.crossings[static_cast<std::size_t>(p.crossing)], p.over);
        newlab[oa] = i;
    }
    PlanarDiagram out = pd;
    for (auto& c : out.crossings)
        for (auto& a : c.arcs) a = newlab.at(a);
    out.validate();
    return out;
}

namespace {

// arc-label union-find used by the reduction moves
struct ArcMerge {
    std::map<int, int> parent;
    int find(int a) {
        if (!parent.count(a)) return a;
        const int r = find(parent[a]);
        parent[a] = r;
        return r;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

bool try_r1(PlanarDiagram& pd) {
    for (std::size_t ci = 0; ci < pd.crossings.size(); ++ci) {
        const Crossing& c = pd.crossings[ci];
        for (int i = 0; i < 4; ++i) {
            if (c.arcs[static_cast<std::size_t>(i)] !=
                c.arcs[static_cast<std::size_t>((i + 1) % 4)])
                continue;
            const int x = c.arcs[static_cast<std::size_t>((i + 2) % 4)];
            const int y = c.arcs[static_cast<std::size_t>((i + 3) % 4)];
            PlanarDiagram next;
            next.crossings = pd.crossings;
            next.crossings.erase(next.crossings.begin() + static_cast<std::ptrdiff_t>(ci));
            if (x != y) {
                ArcMerge am;
                am.unite(x, y);
                for (auto& cc : next.crossings)
                    for (auto& a : cc.arcs) a = am.find(a);
            } else if (!next.crossings.empty()) {
                throw VerificationError("kink removal disconnected the diagram");
            }
            next.validate();
            pd = std::move(next);
            return true;
        }
    }
    return false;
}

bool try_r2(PlanarDiagram& pd) {
    const auto slot_kind = [](const Crossing& c, int arc, bool& over, bool& under) {
        over = under = false;
        for (int i = 0; i < 4; ++i) {
            if (c.arcs[static_cast<std::size_t>(i)] != arc) continue;
            if (i == 0 || i == 2)
                under = true;
            else
                over = true;
        }
    };
    const int n = pd.crossing_count();
    for (int ci = 0; ci < n; ++ci) {
        for (int di = ci + 1; di < n; ++di) {
            const Crossing& c = pd.crossings[static_cast<std::size_t>(ci)];
            const Crossing& d = pd.crossings[static_cast<std::size_t>(di)];
            // arcs occurring in both crossings
            std::vector<int> shared;
            for (int a : c.arcs)
                if (std::find(d.arcs.begin(), d.arcs.end(), a) != d.arcs.end() &&
                    std::find(shared.begin(), shared.end(), a) == shared.end())
                    shared.push_back(a);
            if (shared.size() < 2) continue;
            int x = 0, y = 0;
            for (int a : shared) {
                bool oc, uc, od, ud;
                slot_kind(c, a, oc, uc);
                slot_kind(d, a, od, ud);
                if (oc && od && !uc && !ud && x == 0) x = a;
                if (uc && ud && !oc && !od && y == 0) y = a;
            }
            if (x == 0 || y == 0 || x == y) continue;

            // other over/under arcs at each end of the bigon
            auto other_arc = [](const Crossing& c0, int arc, bool over_side) {
                for (int i : over_side ? std::initializer_list<int>{1, 3}
                                       : std::initializer_list<int>{0, 2})
                    if (c0.arcs[static_cast<std::size_t>(i)] != arc)
                        return c0.arcs[static_cast<std::size_t>(i)];
                return arc; // over/under strand closes on itself
            };
            const int xc = other_arc(c, x, true), xd = other_arc(d, x, true);
            const int yc = other_arc(c, y, false), yd = other_arc(d, y, false);

            PlanarDiagram next;
            for (int k = 0; k < n; ++k)
                if (k != ci && k != di)
                    next.crossings.push_back(pd.crossings[static_cast<std::size_t>(k)]);
            ArcMerge am;
            am.unite(xc, x);
            am.unite(am.find(xc), am.find(xd));
            am.unite(yc, y);
            am.unite(am.find(yc), am.find(yd));
            for (auto& cc : next.crossings)
                for (auto& a : cc.arcs) a = am.find(a);
            try {
                next.validate();
            } catch (const VerificationError&) {
                continue; // not a removable bigon in this configuration
            }
            pd = std::move(next);
            return true;
        }
    }
    return false;
}

} // namespace

PlanarDiagram reduce_r1_r2(const PlanarDiagram& pd) {
    PlanarDiagram cur = pd;
    cur.validate();
    bool progress = true;
    while (progress) {
        progress = false;
        while (try_r1(cur)) progress = true;
        if (try_r2(cur)) progress = true;
    }
    return cur.crossings.empty() ? cur : renumber_along_traversal(cur);
}

} // namespace petalknot
