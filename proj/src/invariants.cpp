#include "petalknot/invariants.hpp"

#include "petalknot/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

namespace petalknot {

namespace {

// union-find over small integer labels
struct Uf {
    std::vector<int> parent;
    explicit Uf(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    // returns true if the union closed a loop (ends already connected)
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return true;
        parent[static_cast<std::size_t>(b)] = a;
        return false;
    }
};

struct BracketEngine {
    std::vector<Laurent> delta_pow; // delta^k, delta = -A^2 - A^-2

    explicit BracketEngine(int max_loops) {
        const Laurent delta =
            Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
        delta_pow.push_back(Laurent(1));
        for (int i = 1; i <= max_loops; ++i) delta_pow.push_back(delta_pow.back() * delta);
    }

    Laurent run(std::vector<std::array<int, 4>> cr, Uf uf, int closures) {
        Laurent factor(1);
        // absorb kinks: a crossing whose adjacent slots carry the same arc
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t ci = 0; ci < cr.size(); ++ci) {
                const auto t = cr[ci];
                for (int i = 0; i < 4; ++i) {
                    if (uf.find(t[static_cast<std::size_t>(i)]) !=
                        uf.find(t[static_cast<std::size_t>((i + 1) % 4)]))
                        continue;
                    factor = factor * Laurent::monomial(-1, i % 2 == 0 ? 3 : -3);
                    if (uf.unite(t[static_cast<std::size_t>((i + 2) % 4)],
                                 t[static_cast<std::size_t>((i + 3) % 4)]))
                        ++closures;
                    cr.erase(cr.begin() + static_cast<std::ptrdiff_t>(ci));
                    again = true;
                    break;
                }
                if (again) break;
            }
        }
        if (cr.empty()) {
            if (closures < 1) throw VerificationError("bracket state closed no loop");
            return factor * delta_pow[static_cast<std::size_t>(closures - 1)];
        }
        const auto t = cr.back();
        cr.pop_back();
        // A-smoothing joins slots (0,1) and (2,3); B joins (0,3) and (1,2)
        Laurent total;
        {
            Uf uf_a = uf;
            int cl = closures;
            if (uf_a.unite(t[0], t[1])) ++cl;
            if (uf_a.unite(t[2], t[3])) ++cl;
            total += Laurent::monomial(1, 1) * run(cr, std::move(uf_a), cl);
        }
        {
            Uf uf_b = std::move(uf);
            int cl = closures;
            if (uf_b.unite(t[0], t[3])) ++cl;
            if (uf_b.unite(t[1], t[2])) ++cl;
            total += Laurent::monomial(1, -1) * run(std::move(cr), std::move(uf_b), cl);
        }
        return factor * total;
    }
};

} // namespace

Laurent kauffman_bracket(const PlanarDiagram& pd, int max_crossings) {
    if (pd.crossings.empty()) return Laurent(1);
    if (pd.crossing_count() > max_crossings)
        throw BudgetError("bracket budget exceeded: " + std::to_string(pd.crossing_count()) +
                          " crossings > " + std::to_string(max_crossings));
    const PlanarDiagram canon = renumber_along_traversal(pd);
    std::vector<std::array<int, 4>> cr;
    for (const auto& c : canon.crossings) cr.push_back(c.arcs);
    const int arcs = 2 * canon.crossing_count();
    BracketEngine eng(canon.crossing_count() + 1);
    return eng.run(std::move(cr), Uf(arcs + 1), 0);
}

Laurent jones(const PlanarDiagram& pd, int max_crossings) {
    const PlanarDiagram red = reduce_r1_r2(pd);
    const Laurent br = kauffman_bracket(red, max_crossings);
    const int w = red.writhe();
    // (-A)^(-3w) * bracket, then t^(1/2) = A^(-2)
    const Laurent corrected =
        Laurent::monomial(w % 2 == 0 ? 1 : -1, -3 * w) * br;
    Laurent out;
    for (const auto& [e, c] : corrected.terms()) {
        if (e % 2 != 0)
            throw VerificationError("Jones polynomial has an odd A-exponent for a knot");
        out += Laurent::monomial(c, -e / 2);
    }
    return out;
}

namespace {

// determinant of a square Laurent-entry matrix by fraction-free elimination
Laurent bareiss_det(std::vector<std::vector<Laurent>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Laurent(1);
    int sign = 1;
    Laurent prev(1);
    for (int r = 0; r < n - 1; ++r) {
        // pivot search
        int pr = -1, pc = -1;
        for (int i = r; i < n && pr < 0; ++i)
            for (int j = r; j < n; ++j)
                if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) return Laurent(); // singular
        if (pr != r) {
            std::swap(m[static_cast<std::size_t>(pr)], m[static_cast<std::size_t>(r)]);
            sign = -sign;
        }
        if (pc != r) {
            for (auto& row : m)
                std::swap(row[static_cast<std::size_t>(pc)], row[static_cast<std::size_t>(r)]);
            sign = -sign;
        }
        for (int i = r + 1; i < n; ++i)
            for (int j = r + 1; j < n; ++j) {
                Laurent num = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] *
                                  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                              m[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                                  m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    num.is_zero() ? Laurent() : Laurent::div_exact(num, prev);
            }
        prev = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
        if (prev.is_zero()) return Laurent();
    }
    Laurent det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign > 0 ? det : -det;
}

} // namespace

Laurent alexander(const PlanarDiagram& pd) {
    if (pd.crossings.empty()) return Laurent(1);
    const PlanarDiagram canon = renumber_along_traversal(pd);
    const int c = canon.crossing_count();
    const int arcs = 2 * c;

    // Wirtinger arcs: PD arcs merged through every over-pass
    Uf uf(arcs + 1);
    for (const auto& cr : canon.crossings)
        uf.unite(cr.arcs[static_cast<std::size_t>(cr.over_in_pos())],
                 cr.arcs[static_cast<std::size_t>(cr.over_out_pos())]);
    std::map<int, int> wirt; // root -> column index
    for (int a = 1; a <= arcs; ++a) {
        const int r = uf.find(a);
        if (!wirt.count(r)) {
            const int next = static_cast<int>(wirt.size());
            wirt[r] = next;
        }
    }
    if (static_cast<int>(wirt.size()) != c)
        throw VerificationError("Wirtinger arc count differs from crossing count");

    const Laurent t = Laurent::monomial(1, 1);
    const Laurent one(1);
    std::vector<std::vector<Laurent>> m(static_cast<std::size_t>(c),
                                        std::vector<Laurent>(static_cast<std::size_t>(c)));
    for (int ci = 0; ci < c; ++ci) {
        const auto& cr = canon.crossings[static_cast<std::size_t>(ci)];
        const int col_o = wirt[uf.find(cr.arcs[static_cast<std::size_t>(cr.over_in_pos())])];
        const int col_a = wirt[uf.find(cr.arcs[0])];
        const int col_c = wirt[uf.find(cr.arcs[2])];
        auto& row = m[static_cast<std::size_t>(ci)];
        if (cr.sign > 0) {
            row[static_cast<std::size_t>(col_o)] += one - t;
            row[static_cast<std::size_t>(col_a)] += t;
            row[static_cast<std::size_t>(col_c)] += -one;
        } else {
            // relation scaled by t to stay polynomial
            row[static_cast<std::size_t>(col_o)] += t - one;
            row[static_cast<std::size_t>(col_a)] += one;
            row[static_cast<std::size_t>(col_c)] += -t;
        }
    }
    // delete last row and last column
    std::vector<std::vector<Laurent>> minor;
    for (int i = 0; i + 1 < c; ++i) {
        std::vector<Laurent> row;
        for (int j = 0; j + 1 < c; ++j)
            row.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        minor.push_back(std::move(row));
    }
    Laurent det = bareiss_det(std::move(minor));
    if (det.is_zero())
        throw VerificationError("Alexander determinant vanished (unrealizable diagram)");

    // normalize: lowest exponent 0, positive leading coefficient, symmetric
    det = det.shifted(-det.min_exp());
    if (det.coeff(det.max_exp()) < 0) det = -det;
    const int deg = det.max_exp();
    if (deg % 2 != 0)
        throw VerificationError("Alexander polynomial has odd degree");
    det = det.shifted(-deg / 2);
    if (det != det.inverted())
        throw VerificationError("Alexander polynomial is not palindromic");
    const BigInt at_one = det.eval(1);
    if (at_one != 1 && at_one != -1)
        throw VerificationError("Alexander polynomial does not evaluate to +-1 at t = 1");
    return det;
}

BigInt determinant(const PlanarDiagram& pd) {
    const BigInt v = alexander(pd).eval(-1);
    return v < 0 ? BigInt(-v) : v;
}

bool Fingerprint::operator<(const Fingerprint& o) const {
    if (det != o.det) return det < o.det;
    if (alex != o.alex) return alex < o.alex;
    return jones < o.jones;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    os << "det=" << det.str() << "; alexander=" << alex.str()
       << "; jones(t^1/2)=" << jones.str("s");
    return os.str();
}

Fingerprint fingerprint(const PlanarDiagram& pd, int max_crossings) {
    const PlanarDiagram red = reduce_r1_r2(pd);
    Fingerprint f;
    f.alex = alexander(red);
    f.det = [&] {
        const BigInt v = f.alex.eval(-1);
        return v < 0 ? BigInt(-v) : v;
    }();
    f.jones = jones(red, max_crossings);
    return f;
}

Fingerprint mirrored(const Fingerprint& f) {
    return Fingerprint{f.det, f.alex, f.jones.inverted()};
}

} // namespace petalknot
