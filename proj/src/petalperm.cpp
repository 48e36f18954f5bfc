#include "petalknot/petalperm.hpp"

#include "petalknot/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace petalknot {

namespace {

int mod1(int v, int p) { // representative of v in 1..p
    int m = v % p;
    if (m <= 0) m += p;
    return m;
}

} // namespace

PetalPermutation::PetalPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int p = static_cast<int>(entries_.size());
    if (p < 3) throw ParseError("permutation must have at least 3 entries", entries_.size());
    if (p % 2 == 0) throw ParseError("strand count must be odd, got " + std::to_string(p),
                                     entries_.size());
    std::vector<char> seen(static_cast<std::size_t>(p) + 1, 0);
    for (int i = 1; i <= p; ++i) {
        const int v = at(i);
        if (v < 1 || v > p)
            throw ParseError("entry " + std::to_string(v) + " out of range 1.." +
                                 std::to_string(p),
                             static_cast<std::size_t>(i));
        if (seen[static_cast<std::size_t>(v)])
            throw ParseError("duplicate entry " + std::to_string(v),
                             static_cast<std::size_t>(i));
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

int PetalPermutation::at_cyclic(int pos) const { return at(mod1(pos, p())); }

std::string PetalPermutation::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 1; i <= p(); ++i) {
        if (i > 1) os << ",";
        os << at(i);
    }
    os << ")";
    return os.str();
}

PetalPermutation parse_permutation(const std::string& text) {
    std::string body = text;
    // strip optional surrounding parentheses
    auto first = body.find_first_not_of(" \t\r\n");
    auto last = body.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty permutation", 1);
    body = body.substr(first, last - first + 1);
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);

    std::vector<int> entries;
    std::size_t pos = 0;
    std::size_t token_index = 0;
    while (pos < body.size()) {
        while (pos < body.size() && (std::isspace(static_cast<unsigned char>(body[pos])) ||
                                     body[pos] == ','))
            ++pos;
        if (pos >= body.size()) break;
        ++token_index;
        std::size_t end = pos;
        while (end < body.size() && !std::isspace(static_cast<unsigned char>(body[end])) &&
               body[end] != ',')
            ++end;
        const std::string tok = body.substr(pos, end - pos);
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            entries.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("invalid integer token '" + tok + "'", token_index);
        }
        pos = end;
    }
    if (entries.empty()) throw ParseError("empty permutation", 1);
    return PetalPermutation(std::move(entries));
}

DifferenceClass canonical_class(const PetalPermutation& sigma) {
    const int p = sigma.p();
    std::vector<int> diffs(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i)
        diffs[static_cast<std::size_t>(i - 1)] = mod1(sigma.at_cyclic(i + 1) - sigma.at(i), p);

    std::vector<int> best = diffs;
    for (int r = 1; r < p; ++r) {
        std::vector<int> rot(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) rot[static_cast<std::size_t>(i)] =
            diffs[static_cast<std::size_t>((i + r) % p)];
        if (rot < best) best = rot;
    }
    PetalPermutation rep = permutation_from_diffs(best);
    return DifferenceClass{std::move(diffs), std::move(best), std::move(rep)};
}

PetalPermutation permutation_from_diffs(const std::vector<int>& diffs, int start) {
    const int p = static_cast<int>(diffs.size());
    std::vector<int> entries(static_cast<std::size_t>(p));
    int cur = start;
    for (int i = 0; i < p; ++i) {
        entries[static_cast<std::size_t>(i)] = cur;
        cur = mod1(cur + diffs[static_cast<std::size_t>(i)], p);
    }
    if (cur != start)
        throw VerificationError("difference sequence does not sum to 0 mod p");
    return PetalPermutation(std::move(entries));
}

int cyclic_distance(int p, int x, int y) {
    if (x < 1 || x > p || y < 1 || y > p)
        throw ParseError("height out of range 1..=" + std::to_string(p));
    for (int d = 0; d <= (p - 1) / 2; ++d)
        if (mod1(x + d, p) == y || mod1(x - d, p) == y) return d;
    throw VerificationError("cyclic_distance exceeded (p-1)/2");
}

std::vector<int> trivial_petals(const PetalPermutation& sigma) {
    std::vector<int> out;
    const int p = sigma.p();
    for (int i = 1; i <= p; ++i)
        if (cyclic_distance(p, sigma.at(i), sigma.at_cyclic(i + 1)) == 1) out.push_back(i);
    return out;
}

PetalPermutation remove_trivial_petal(const PetalPermutation& sigma, int i) {
    const int p = sigma.p();
    if (p == 3)
        throw ParseError("cannot remove a petal from a 3-petal diagram (already trivial)");
    if (i < 1 || i > p) throw ParseError("petal position out of range");
    if (cyclic_distance(p, sigma.at(i), sigma.at_cyclic(i + 1)) != 1)
        throw ParseError("position " + std::to_string(i) + " is not a trivial petal");

    const int j = (i % p) + 1; // cyclic successor position
    std::vector<int> kept;
    kept.reserve(static_cast<std::size_t>(p - 2));
    for (int k = 1; k <= p; ++k)
        if (k != i && k != j) kept.push_back(sigma.at(k));

    // rank-compress remaining heights to 1..p-2
    std::vector<int> sorted = kept;
    std::sort(sorted.begin(), sorted.end());
    for (int& v : kept)
        v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                             sorted.begin()) +
            1;
    return PetalPermutation(std::move(kept));
}

std::pair<PetalPermutation, int> change_height(const PetalPermutation& sigma, int i,
                                               int new_rank) {
    const int p = sigma.p();
    if (i < 1 || i > p) throw ParseError("position out of range");
    if (new_rank < 1 || new_rank > p) throw ParseError("rank out of range 1..=" +
                                                       std::to_string(p));
    const int old_rank = sigma.at(i);
    std::vector<int> entries = sigma.entries();
    for (int k = 0; k < p; ++k) {
        int& v = entries[static_cast<std::size_t>(k)];
        if (k == i - 1) {
            v = new_rank;
        } else if (old_rank < new_rank && v > old_rank && v <= new_rank) {
            --v;
        } else if (new_rank < old_rank && v >= new_rank && v < old_rank) {
            ++v;
        }
    }
    const int cost = std::abs(new_rank - old_rank);
    return {PetalPermutation(std::move(entries)), cost};
}

PetalPermutation torus_permutation(int r) {
    if (r < 1) throw ParseError("torus parameter must be >= 1");
    const int p = 2 * r + 1;
    std::vector<int> entries(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) entries[static_cast<std::size_t>(i - 1)] =
        mod1(1 + (i - 1) * r, p);
    return PetalPermutation(std::move(entries));
}

bool is_extremal(const PetalPermutation& sigma) {
    const int p = sigma.p();
    const int k = (p - 1) / 2;
    for (int i = 1; i <= p; ++i)
        if (cyclic_distance(p, sigma.at(i), sigma.at_cyclic(i + 1)) != k) return false;
    return true;
}

} // namespace petalknot
