#include "petalknot/unknot.hpp"

#include "petalknot/errors.hpp"

#include <optional>

namespace petalknot {

namespace {

int mod1(int v, int p) {
    int r = v % p;
    if (r <= 0) r += p;
    return r;
}

} // namespace

long unknotting_bound(int p) {
    if (p < 3 || p % 2 == 0)
        throw ParseError("petal count must be odd and >= 3");
    return static_cast<long>(p - 1) * (p - 3) / 8;
}

UnknottingCertificate unknotting_sequence(const PetalPermutation& sigma) {
    UnknottingCertificate cert{sigma, {}, 0, sigma};
    PetalPermutation cur = sigma;
    while (cur.p() > 3) {
        const int p = cur.p();
        // closest cyclic pair, ties by smallest position
        int best_i = 1, best_d = p;
        for (int i = 1; i <= p; ++i) {
            const int d = cyclic_distance(p, cur.at(i), cur.at_cyclic(i + 1));
            if (d < best_d) {
                best_d = d;
                best_i = i;
            }
        }
        const int i = best_i, j = (i % p) + 1;
        const int x = cur.at(i), y = cur.at(j);
        const int d = best_d;
        auto pass = [&](int pos, int new_rank) {
            auto [next, cost] = change_height(cur, pos, new_rank);
            cur = next;
            cert.moves.push_back(
                UnknotMove{UnknotMove::Kind::HeightPass, pos, new_rank, cost});
            cert.total_cost += cost;
        };
        if (d > 1) {
            if (mod1(x + d, p) == y) {
                if (x + d == y) {
                    pass(i, y - 1); // slide down just above the partner
                } else {
                    pass(i, p); // wraps: park at the bottom,
                    pass(j, 1); // partner to the top; pair (p,1) is trivial
                }
            } else {
                if (x - d == y) {
                    pass(i, y + 1);
                } else {
                    pass(i, 1);
                    pass(j, p);
                }
            }
            if (cyclic_distance(cur.p(), cur.at(i), cur.at_cyclic(i + 1)) != 1)
                throw VerificationError("height passes failed to create a trivial petal");
        }
        cert.moves.push_back(UnknotMove{UnknotMove::Kind::RemovePetal, i, 0, 0});
        cur = remove_trivial_petal(cur, i);
    }
    cert.final = cur;
    if (cert.total_cost > unknotting_bound(sigma.p()))
        throw VerificationError("greedy unknotting exceeded the (p-1)(p-3)/8 bound");
    const PetalPermutation check = replay(sigma, cert.moves);
    if (check != cert.final)
        throw VerificationError("certificate replay mismatch");
    return cert;
}

PetalPermutation replay(const PetalPermutation& initial,
                        const std::vector<UnknotMove>& moves) {
    PetalPermutation cur = initial;
    for (const auto& mv : moves) {
        if (mv.kind == UnknotMove::Kind::HeightPass) {
            auto [next, cost] = change_height(cur, mv.position, mv.new_rank);
            if (cost != mv.cost)
                throw VerificationError("recorded pass cost differs on replay");
            cur = next;
        } else {
            cur = remove_trivial_petal(cur, mv.position);
        }
    }
    return cur;
}

} // namespace petalknot
