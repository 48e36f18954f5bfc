#include "petalknot/uberdiag.hpp"

#include "petalknot/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace petalknot {

namespace {

int mod1(int v, int m) {
    int r = v % m;
    if (r <= 0) r += m;
    return r;
}

} // namespace

UbercrossingDiagram::UbercrossingDiagram(int n, std::vector<int> heights,
                                         std::vector<std::pair<int, int>> arcs)
    : n_(n) {
    if (n < 1) throw ParseError("strand count must be >= 1");
    if (static_cast<int>(heights.size()) != n)
        throw ParseError("heights size must equal strand count");
    heights_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) heights_[static_cast<std::size_t>(k)] =
        heights[static_cast<std::size_t>(k - 1)];
    partner_.assign(static_cast<std::size_t>(2 * n) + 1, 0);
    if (static_cast<int>(arcs.size()) != n) throw ParseError("matching must have n arcs");
    for (auto [a, b] : arcs) {
        if (a < 1 || a > 2 * n || b < 1 || b > 2 * n || a == b)
            throw ParseError("arc endpoint out of range");
        if (partner_[static_cast<std::size_t>(a)] || partner_[static_cast<std::size_t>(b)])
            throw ParseError("endpoint matched twice");
        partner_[static_cast<std::size_t>(a)] = b;
        partner_[static_cast<std::size_t>(b)] = a;
    }
    validate();
}

int UbercrossingDiagram::strand_with_height(int h) const {
    for (int k = 1; k <= n_; ++k)
        if (height(k) == h) return k;
    throw VerificationError("no strand with height " + std::to_string(h));
}

std::vector<std::pair<int, int>> UbercrossingDiagram::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int e = 1; e <= 2 * n_; ++e)
        if (partner(e) > e) out.emplace_back(e, partner(e));
    return out; // sorted by construction
}

std::vector<int> UbercrossingDiagram::span(std::pair<int, int> arc) const {
    const int m = 2 * n_;
    if (n_ == 1) return {};
    const int a = arc.first, b = arc.second;
    const int cw_ab = mod1(b - a, m) - 1;  // endpoints strictly inside cw(a->b)
    const int cw_ba = m - 2 - cw_ab;
    if (cw_ab == cw_ba)
        throw VerificationError("antipodal arc has no canonical span side");
    std::vector<int> out;
    if (cw_ab < cw_ba) {
        for (int i = 1; i <= cw_ab; ++i) out.push_back(mod1(a + i, m));
    } else {
        for (int i = 1; i <= cw_ba; ++i) out.push_back(mod1(b + i, m));
    }
    return out;
}

std::vector<std::pair<int, int>> UbercrossingDiagram::nesting_arcs() const {
    std::vector<std::pair<int, int>> out;
    for (auto a : arcs())
        if (is_nesting(a)) out.push_back(a);
    return out;
}

bool UbercrossingDiagram::is_adjacent_pair(std::pair<int, int> arc) const {
    const int m = 2 * n_;
    return mod1(arc.second - arc.first, m) == 1 || mod1(arc.first - arc.second, m) == 1;
}

std::vector<int> UbercrossingDiagram::traversal() const {
    std::vector<int> order;
    int e = 1;
    do {
        order.push_back(strand_of(e));
        e = partner(antipode(e));
        if (static_cast<int>(order.size()) > n_) break;
    } while (e != 1);
    return order;
}

void UbercrossingDiagram::validate() const {
    const int m = 2 * n_;
    // heights form a bijection onto 1..n
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    for (int k = 1; k <= n_; ++k) {
        const int h = height(k);
        if (h < 1 || h > n_ || seen[static_cast<std::size_t>(h)])
            throw VerificationError("heights are not a bijection onto 1..n");
        seen[static_cast<std::size_t>(h)] = 1;
    }
    // matching is a fixed-point-free involution
    for (int e = 1; e <= m; ++e) {
        const int q = partner(e);
        if (q < 1 || q > m || q == e || partner(q) != e)
            throw VerificationError("matching is not an involution");
    }
    // no arc joins the two endpoints of one strand (n > 1)
    if (n_ > 1)
        for (int e = 1; e <= m; ++e)
            if (partner(e) == antipode(e))
                throw VerificationError("arc joins the two endpoints of one strand");
    // outer-planarity: no two arcs interleave cyclically
    auto in_cw = [&](int x, int a, int b) {
        return x != a && x != b && mod1(x - a, m) < mod1(b - a, m);
    };
    const auto as = arcs();
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = i + 1; j < as.size(); ++j) {
            const bool c_in = in_cw(as[j].first, as[i].first, as[i].second);
            const bool d_in = in_cw(as[j].second, as[i].first, as[i].second);
            if (c_in != d_in) throw VerificationError("matching arcs interleave");
        }
    // single closed curve
    if (static_cast<int>(traversal().size()) != n_)
        throw VerificationError("diagram is not a single closed curve");
}

UbercrossingDiagram from_petal(const PetalPermutation& sigma) {
    const int p = sigma.p();
    std::vector<int> heights = sigma.entries();
    std::vector<std::pair<int, int>> arcs;
    for (int t = 0; t < p; ++t) {
        const int a = mod1(p + 2 * t + 1, 2 * p);
        const int b = mod1(p + 2 * t + 2, 2 * p);
        arcs.emplace_back(a, b);
    }
    return UbercrossingDiagram(p, std::move(heights), std::move(arcs));
}

bool is_petal_diagram(const UbercrossingDiagram& d) {
    for (auto a : d.arcs())
        if (!d.span(a).empty()) return false;
    return true;
}

PetalPermutation petal_permutation(const UbercrossingDiagram& d) {
    if (!is_petal_diagram(d)) throw ParseError("diagram is not a petal diagram");
    const int s = d.strand_with_height(1);
    std::vector<int> entries;
    for (int i = 0; i < d.n(); ++i) entries.push_back(d.height(mod1(s + i, d.n())));
    return PetalPermutation(std::move(entries));
}

UbercrossingDiagram unfold_top(const UbercrossingDiagram& d) {
    if (!is_petal_diagram(d)) throw ParseError("unfold_top requires a petal diagram");
    const int n = d.n();
    if (n < 3) throw ParseError("unfold_top requires at least 3 strands");
    const int s = d.strand_with_height(1);
    const int sf = d.antipode(s);
    const int f1 = d.partner(s);
    const int f2 = d.partner(sf);

    auto relabel = [&](int e) { return e - (e > s ? 1 : 0) - (e > sf ? 1 : 0); };
    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : d.arcs()) {
        if (a == s || b == s || a == sf || b == sf) continue;
        arcs.emplace_back(relabel(a), relabel(b));
    }
    arcs.emplace_back(relabel(f1), relabel(f2));

    std::vector<int> heights;
    for (int k = 1; k <= n; ++k)
        if (k != s) heights.push_back(d.height(k) - 1);

    UbercrossingDiagram out(n - 1, std::move(heights), std::move(arcs));
    // the merged arc nests the chord-free side: (n-3) endpoints under it
    const std::pair<int, int> merged = {std::min(relabel(f1), relabel(f2)),
                                        std::max(relabel(f1), relabel(f2))};
    if (static_cast<int>(out.span(merged).size()) != n - 3)
        throw VerificationError("unfold_top: unexpected nesting span size");
    return out;
}

UbercrossingDiagram fold_top(const UbercrossingDiagram& d) {
    const int n = d.n();
    std::pair<int, int> nest;
    if (n == 2) {
        nest = {3, 4}; // degenerate pre-petal of the unknot
    } else {
        auto nests = d.nesting_arcs();
        if (nests.size() != 1) throw ParseError("fold_top requires exactly one nesting arc");
        nest = nests[0];
    }
    if (static_cast<int>(d.span(nest).size()) != n - 2)
        throw ParseError("fold_top: nesting span is not foldable");
    // orient so the span is cw(g1 -> g2)
    int g1 = nest.first, g2 = nest.second;
    if (mod1(g2 - g1, 2 * n) - 1 != n - 2) std::swap(g1, g2);

    // insert e_a just before g1 and e_b just after g2 (both on the long side);
    // build the new cyclic sequence explicitly: [e_a][g1 .. g2][e_b][rest]
    std::vector<int> old_order; // old labels clockwise starting at g1
    for (int i = 0; i < 2 * n; ++i) old_order.push_back(mod1(g1 + i, 2 * n));
    std::map<int, int> to_new; // old label -> new label
    int slot = 1;
    ++slot;                    // new slot 1 = e_a
    const int ea = 1;
    int eb = 0;
    for (int i = 0; i < 2 * n; ++i) {
        to_new[old_order[static_cast<std::size_t>(i)]] = slot++;
        if (old_order[static_cast<std::size_t>(i)] == g2) {
            eb = slot++; // new slot right after g2 = e_b
        }
    }
    if (eb != n + 2 || slot != 2 * n + 3)
        throw VerificationError("fold_top: slot bookkeeping failed");

    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : d.arcs()) {
        if ((a == nest.first && b == nest.second) || (a == nest.second && b == nest.first))
            continue;
        arcs.emplace_back(to_new[a], to_new[b]);
    }
    arcs.emplace_back(ea, to_new[g1]);
    arcs.emplace_back(to_new[g2], eb);

    // new strand = top (height 1); old heights shift down
    const int nn = n + 1;
    std::vector<int> heights(static_cast<std::size_t>(nn), 0);
    for (int k = 1; k <= n; ++k) {
        const int e1 = to_new[k], e2 = to_new[d.antipode(k)];
        const int strand = std::min(e1, e2) <= nn ? std::min(e1, e2) : std::max(e1, e2) - nn;
        if (std::max(e1, e2) - std::min(e1, e2) != nn)
            throw VerificationError("fold_top: endpoints no longer antipodal");
        heights[static_cast<std::size_t>(strand - 1)] = d.height(k) + 1;
    }
    heights[0] = 1; // e_a = endpoint 1 belongs to the new top strand
    return UbercrossingDiagram(nn, std::move(heights), std::move(arcs));
}

std::vector<Ribbon> ribbons(const UbercrossingDiagram& d) {
    std::vector<Ribbon> out;
    const int m = 2 * d.n();
    const auto nests = d.nesting_arcs();
    for (auto arc : d.arcs()) {
        if (!d.span(arc).empty()) continue;
        int u = arc.first, v = arc.second;
        if (mod1(v - u, m) != 1) std::swap(u, v); // u = clockwise-earlier endpoint
        Ribbon r;
        r.arc = {u, v};
        r.strand_a = d.strand_of(u);
        r.strand_b = d.strand_of(v);
        r.over_strand =
            d.height(r.strand_a) < d.height(r.strand_b) ? r.strand_a : r.strand_b;
        r.handedness = (r.over_strand == r.strand_a) ? Handedness::Right : Handedness::Left;
        const bool has_bottom =
            d.height(r.strand_a) == d.n() || d.height(r.strand_b) == d.n();
        if (has_bottom) {
            for (auto nest : nests) {
                const auto sp = d.span(nest);
                if (std::find(sp.begin(), sp.end(), u) != sp.end() &&
                    std::find(sp.begin(), sp.end(), v) != sp.end()) {
                    r.bottom = true;
                    break;
                }
            }
        }
        out.push_back(r);
    }
    return out;
}

std::optional<Ribbon> bottom_ribbon(const UbercrossingDiagram& d) {
    for (const auto& r : ribbons(d))
        if (r.bottom) return r;
    return std::nullopt;
}

UbercrossingDiagram mirror(const UbercrossingDiagram& d) {
    const int n = d.n();
    const int m = 2 * n;
    auto me = [&](int e) { return e == 1 ? 1 : m + 2 - e; };
    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : d.arcs()) arcs.emplace_back(me(a), me(b));
    std::vector<int> heights(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        const int nk = (k == 1) ? 1 : n + 2 - k;
        heights[static_cast<std::size_t>(nk - 1)] = d.height(k);
    }
    return UbercrossingDiagram(n, std::move(heights), std::move(arcs));
}

UbercrossingDiagram add_trivial_petal(const UbercrossingDiagram& d,
                                      std::pair<int, int> target_arc, int height_slot,
                                      Handedness handedness) {
    const int n = d.n();
    const int m = 2 * n;
    if (d.partner(target_arc.first) != target_arc.second)
        throw ParseError("target arc not present in matching");
    if (height_slot < 1 || height_slot > n + 1) throw ParseError("height slot out of range");

    // orient the arc so its span is cw(a -> b); the poke enters just after a
    int a = target_arc.first, b = target_arc.second;
    if (n > 1) {
        const int cw_ab = mod1(b - a, m) - 1;
        const int cw_ba = m - 2 - cw_ab;
        if (cw_ba < cw_ab) std::swap(a, b);
    }
    const int astar = d.antipode(a);
    const int lo = std::min(a, astar), hi = std::max(a, astar);
    auto relabel = [&](int e) { return e + (e > lo ? 2 : 0) + (e > hi ? 2 : 0); };

    // new slots: lo+1, lo+2 and hi+3, hi+4 (in new labels)
    const int p1 = lo + 1, p2 = lo + 2, q1 = hi + 3, q2 = hi + 4;
    const int alpha = (a == lo) ? p1 : q1; // first new endpoint clockwise after a
    const int beta = (a == lo) ? p2 : q2;
    const int alpha_far = (a == lo) ? q1 : p1;
    const int beta_far = (a == lo) ? q2 : p2;

    std::vector<std::pair<int, int>> arcs;
    for (auto [x, y] : d.arcs()) {
        if ((x == a && y == b) || (x == b && y == a)) continue;
        arcs.emplace_back(relabel(x), relabel(y));
    }
    arcs.emplace_back(relabel(a), alpha);
    arcs.emplace_back(beta, relabel(b));
    arcs.emplace_back(alpha_far, beta_far);

    const int nn = n + 2;
    std::vector<int> heights(static_cast<std::size_t>(nn), 0);
    for (int k = 1; k <= n; ++k) {
        const int e1 = relabel(k), e2 = relabel(d.antipode(k));
        const int strand = std::min(e1, e2);
        if (strand > nn || std::max(e1, e2) - strand != nn)
            throw VerificationError("add_trivial_petal: relabel broke antipodality");
        const int h = d.height(k);
        heights[static_cast<std::size_t>(strand - 1)] = h >= height_slot ? h + 2 : h;
    }
    // far arc (alpha_far, beta_far) is the new ribbon; its clockwise-earlier
    // endpoint is alpha_far, so Right means strand(alpha) is the over strand.
    const int s_alpha = std::min(alpha, alpha_far);
    const int s_beta = std::min(beta, beta_far);
    if (handedness == Handedness::Right) {
        heights[static_cast<std::size_t>(s_alpha - 1)] = height_slot;
        heights[static_cast<std::size_t>(s_beta - 1)] = height_slot + 1;
    } else {
        heights[static_cast<std::size_t>(s_alpha - 1)] = height_slot + 1;
        heights[static_cast<std::size_t>(s_beta - 1)] = height_slot;
    }
    return UbercrossingDiagram(nn, std::move(heights), std::move(arcs));
}

namespace {

// Delete strands x and y, joining external partners pairwise: xe with ye on
// one side, their antipodes on the other. Heights rank-compressed.
UbercrossingDiagram splice_out(const UbercrossingDiagram& d, int xe, int ye) {
    const int n = d.n();
    if (n <= 2) throw ParseError("cannot splice below 1 strand");
    const int xf = d.antipode(xe), yf = d.antipode(ye);
    const int sx = d.strand_of(xe), sy = d.strand_of(ye);
    if (sx == sy) throw ParseError("splice endpoints must be on distinct strands");

    std::vector<int> dead = {xe, ye, xf, yf};
    auto is_dead = [&](int e) { return std::find(dead.begin(), dead.end(), e) != dead.end(); };
    auto relabel = [&](int e) {
        int shift = 0;
        for (int v : dead)
            if (v < e) ++shift;
        return e - shift;
    };

    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : d.arcs()) {
        if (is_dead(a) || is_dead(b)) continue;
        arcs.emplace_back(relabel(a), relabel(b));
    }
    // near side
    if (d.partner(xe) != ye) {
        if (is_dead(d.partner(xe)) || is_dead(d.partner(ye)))
            throw VerificationError("splice_out: degenerate near reconnection");
        arcs.emplace_back(relabel(d.partner(xe)), relabel(d.partner(ye)));
    }
    // far side
    if (d.partner(xf) != yf) {
        if (is_dead(d.partner(xf)) || is_dead(d.partner(yf)))
            throw VerificationError("splice_out: degenerate far reconnection");
        arcs.emplace_back(relabel(d.partner(xf)), relabel(d.partner(yf)));
    }

    std::vector<std::pair<int, int>> strand_heights; // (old strand, height)
    for (int k = 1; k <= n; ++k)
        if (k != sx && k != sy) strand_heights.emplace_back(k, d.height(k));
    std::vector<int> hs;
    for (auto& [k, h] : strand_heights) hs.push_back(h);
    std::vector<int> sorted = hs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> heights(static_cast<std::size_t>(n - 2), 0);
    for (auto& [k, h] : strand_heights) {
        const int e1 = relabel(k), e2 = relabel(d.antipode(k));
        const int strand = std::min(e1, e2);
        const int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), h) -
                                          sorted.begin()) +
                         1;
        heights[static_cast<std::size_t>(strand - 1)] = rank;
    }
    return UbercrossingDiagram(n - 2, std::move(heights), std::move(arcs));
}

} // namespace

UbercrossingDiagram remove_trivial_loop(const UbercrossingDiagram& d,
                                        std::pair<int, int> arc) {
    const int m = 2 * d.n();
    int u = arc.first, v = arc.second;
    if (d.partner(u) != v) throw ParseError("arc not present in matching");
    if (mod1(v - u, m) != 1) {
        if (mod1(u - v, m) != 1) throw ParseError("arc does not join adjacent endpoints");
        std::swap(u, v);
    }
    const int h1 = d.height(d.strand_of(u)), h2 = d.height(d.strand_of(v));
    if (std::abs(h1 - h2) != 1)
        throw ParseError("loop strands do not have consecutive heights");
    return splice_out(d, u, v);
}

UbercrossingDiagram compose(const UbercrossingDiagram& d1, std::pair<int, int> ribbon1_arc,
                            const UbercrossingDiagram& d2) {
    const int n1 = d1.n(), n2 = d2.n();
    const int m1 = 2 * n1, m2 = 2 * n2;

    // locate ribbon1 in d1
    std::optional<Ribbon> r1;
    for (const auto& r : ribbons(d1)) {
        const auto sorted_arc = std::minmax(ribbon1_arc.first, ribbon1_arc.second);
        const auto sorted_r = std::minmax(r.arc.first, r.arc.second);
        if (std::pair(sorted_arc.first, sorted_arc.second) ==
            std::pair(sorted_r.first, sorted_r.second))
            r1 = r;
    }
    if (!r1) throw ParseError("ribbon arc not found in first diagram");

    // d2 must be a composable pre-petal: one nesting arc spanning n2-2
    // endpoints with the bottom ribbon inside it
    const auto nests = d2.nesting_arcs();
    if (nests.size() != 1)
        throw ParseError("second diagram is not a pre-petal projection");
    const auto nest = nests[0];
    if (static_cast<int>(d2.span(nest).size()) != n2 - 2)
        throw ParseError("second diagram's nesting loop is not foldable for composition");
    const auto btm = bottom_ribbon(d2);
    if (!btm) throw ParseError("second diagram has no bottom ribbon");
    if (btm->handedness == r1->handedness)
        throw ParseError("handedness conflict: ribbon and bottom ribbon have equal handedness");

    // orient the nesting arc so its span is cw(w1 -> w2)
    int w1 = nest.first, w2 = nest.second;
    if (mod1(w2 - w1, m2) - 1 != n2 - 2) std::swap(w1, w2);
    const int u = r1->arc.first, u2 = r1->arc.second;   // u2 = successor of u
    const int v = btm->arc.first, v2 = btm->arc.second; // inside the nest span

    // token sequence of the merged circle
    struct Tok {
        bool from_d2;
        int e;
    };
    std::vector<Tok> seq;
    auto push_run_d2 = [&](int from, int to) {
        for (int e = from;; e = mod1(e + 1, m2)) {
            seq.push_back({true, e});
            if (e == to) break;
        }
    };
    auto push_run_d1 = [&](int from, int to) {
        for (int e = from;; e = mod1(e + 1, m1)) {
            seq.push_back({false, e});
            if (e == to) break;
        }
    };
    push_run_d2(w1, v);
    seq.push_back({false, u});
    seq.push_back({false, u2});
    push_run_d2(v2, w2);
    if (n1 > 2) push_run_d1(mod1(u2 + 1, m1), mod1(u + n1 - 1, m1));
    push_run_d2(mod1(w1 + n2, m2), mod1(v + n2, m2));
    seq.push_back({false, mod1(u + n1, m1)});
    seq.push_back({false, mod1(u2 + n1, m1)});
    push_run_d2(mod1(v2 + n2, m2), mod1(w2 + n2, m2));
    if (n1 > 2) push_run_d1(mod1(u2 + n1 + 1, m1), mod1(u - 1, m1));

    const int N = n1 + n2;
    if (static_cast<int>(seq.size()) != 2 * N)
        throw VerificationError("compose: token sequence has wrong length");
    std::vector<int> slot_d1(static_cast<std::size_t>(m1) + 1, 0);
    std::vector<int> slot_d2(static_cast<std::size_t>(m2) + 1, 0);
    for (int s = 1; s <= 2 * N; ++s) {
        const Tok& t = seq[static_cast<std::size_t>(s - 1)];
        (t.from_d2 ? slot_d2 : slot_d1)[static_cast<std::size_t>(t.e)] = s;
    }

    // merged heights: d2's block directly above ribbon1's over strand
    const int o = r1->over_strand;
    const int ho = d1.height(o);
    std::vector<int> heights(static_cast<std::size_t>(N), 0);
    auto set_height = [&](int slot_a, int slot_b, int h) {
        const int strand = std::min(slot_a, slot_b);
        heights[static_cast<std::size_t>(strand - 1)] = h;
    };
    for (int k = 1; k <= n1; ++k) {
        const int h = d1.height(k);
        const int nh = (h < ho) ? h : (h == ho ? ho + n2 : h + n2);
        set_height(slot_d1[static_cast<std::size_t>(k)],
                   slot_d1[static_cast<std::size_t>(k + n1)], nh);
    }
    for (int k = 1; k <= n2; ++k)
        set_height(slot_d2[static_cast<std::size_t>(k)],
                   slot_d2[static_cast<std::size_t>(k + n2)], ho - 1 + d2.height(k));

    // raw matching of the disjoint union (two components until the splice,
    // so it cannot be a validated diagram yet)
    std::vector<int> partner(static_cast<std::size_t>(2 * N) + 1, 0);
    auto connect = [&](int a, int b) {
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    };
    for (auto [a, b] : d1.arcs())
        connect(slot_d1[static_cast<std::size_t>(a)], slot_d1[static_cast<std::size_t>(b)]);
    for (auto [a, b] : d2.arcs())
        connect(slot_d2[static_cast<std::size_t>(a)], slot_d2[static_cast<std::size_t>(b)]);

    // splice: cut the over strand o and d2's bottom strand b, reconnect the
    // external partners pairwise on each side
    const int o_near_old = (d1.strand_of(u) == o) ? u : u2;
    const int b_strand_d2 = d2.strand_of(v) == d2.strand_with_height(n2)
                                ? d2.strand_of(v)
                                : d2.strand_of(v2);
    if (d2.height(b_strand_d2) != n2)
        throw VerificationError("compose: bottom ribbon does not contain the bottom strand");
    const int b_near_old = (d2.strand_of(v) == b_strand_d2) ? v : v2;

    const int xe = slot_d1[static_cast<std::size_t>(o_near_old)];
    const int ye = slot_d2[static_cast<std::size_t>(b_near_old)];
    const int xf = xe <= N ? xe + N : xe - N;
    const int yf = ye <= N ? ye + N : ye - N;
    std::vector<int> dead = {xe, ye, xf, yf};
    auto is_dead = [&](int e) { return std::find(dead.begin(), dead.end(), e) != dead.end(); };
    auto relabel = [&](int e) {
        int shift = 0;
        for (int vdead : dead)
            if (vdead < e) ++shift;
        return e - shift;
    };
    std::vector<std::pair<int, int>> arcs;
    for (int e = 1; e <= 2 * N; ++e) {
        const int q = partner[static_cast<std::size_t>(e)];
        if (e > q || is_dead(e) || is_dead(q)) continue;
        arcs.emplace_back(relabel(e), relabel(q));
    }
    if (partner[static_cast<std::size_t>(xe)] == ye ||
        partner[static_cast<std::size_t>(xf)] == yf)
        throw VerificationError("compose: splice strands were directly joined");
    arcs.emplace_back(relabel(partner[static_cast<std::size_t>(xe)]),
                      relabel(partner[static_cast<std::size_t>(ye)]));
    arcs.emplace_back(relabel(partner[static_cast<std::size_t>(xf)]),
                      relabel(partner[static_cast<std::size_t>(yf)]));

    // heights: drop o and b (consecutive levels) and rank-compress
    const int sx = std::min(xe, xf), sy = std::min(ye, yf);
    std::vector<std::pair<int, int>> strand_heights; // (new strand, old height)
    std::vector<int> sorted;
    for (int k = 1; k <= N; ++k) {
        if (k == sx || k == sy) continue;
        const int e1 = relabel(k), e2 = relabel(k + N);
        strand_heights.emplace_back(std::min(e1, e2),
                                    heights[static_cast<std::size_t>(k - 1)]);
        sorted.push_back(heights[static_cast<std::size_t>(k - 1)]);
    }
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out_heights(static_cast<std::size_t>(N - 2), 0);
    for (auto [strand, h] : strand_heights)
        out_heights[static_cast<std::size_t>(strand - 1)] =
            static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), h) -
                             sorted.begin()) +
            1;

    UbercrossingDiagram out(N - 2, std::move(out_heights), std::move(arcs));
    if (out.n() != n1 + n2 - 2)
        throw VerificationError("compose: wrong output strand count");
    return out;
}

UbercrossingDiagram compose_simple(const UbercrossingDiagram& d1,
                                   const UbercrossingDiagram& d2) {
    const auto btm = bottom_ribbon(d2);
    if (!btm) throw ParseError("second diagram has no bottom ribbon");
    const Handedness wanted = flipped(btm->handedness);
    for (const auto& r : ribbons(d1))
        if (r.handedness == wanted) return compose(d1, r.arc, d2);
    const UbercrossingDiagram padded =
        add_trivial_petal(d1, d1.arcs().front(), 1, wanted);
    for (const auto& r : ribbons(padded))
        if (r.handedness == wanted) return compose(padded, r.arc, d2);
    throw VerificationError("compose_simple: added petal did not produce a usable ribbon");
}

} // namespace petalknot
