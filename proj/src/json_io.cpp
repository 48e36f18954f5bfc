#include "petalknot/json_io.hpp"

#include "petalknot/errors.hpp"

#include <limits>

namespace petalknot {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json coeff_to_json(const BigInt& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

BigInt coeff_from_json(const json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

} // namespace

ordered_json to_json(const PetalPermutation& sigma) { return sigma.entries(); }

ordered_json to_json(const UbercrossingDiagram& d) {
    ordered_json j;
    j["n"] = d.n();
    std::vector<int> hs;
    for (int k = 1; k <= d.n(); ++k) hs.push_back(d.height(k));
    j["heights"] = hs;
    ordered_json m = ordered_json::array();
    for (auto [a, b] : d.arcs()) m.push_back(ordered_json::array({a, b}));
    j["matching"] = m;
    return j;
}

ordered_json to_json(const PlanarDiagram& pd) {
    ordered_json j;
    ordered_json cs = ordered_json::array();
    ordered_json ss = ordered_json::array();
    for (const auto& c : pd.crossings) {
        cs.push_back(ordered_json::array({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]}));
        ss.push_back(c.sign);
    }
    j["crossings"] = cs;
    j["signs"] = ss;
    return j;
}

ordered_json to_json(const Laurent& poly, const std::string& var) {
    ordered_json j;
    j["var"] = var;
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : poly.terms())
        terms.push_back(ordered_json::array({e, coeff_to_json(c)}));
    j["terms"] = terms;
    return j;
}

ordered_json to_json(const Fingerprint& f) {
    ordered_json j;
    j["determinant"] = coeff_to_json(f.det);
    j["alexander"] = to_json(f.alex, "t");
    j["jones"] = to_json(f.jones, "t^(1/2)");
    return j;
}

ordered_json to_json(const UnknottingCertificate& cert) {
    ordered_json j;
    j["initial"] = to_json(cert.initial);
    ordered_json moves = ordered_json::array();
    for (const auto& m : cert.moves) {
        ordered_json mj;
        if (m.kind == UnknotMove::Kind::HeightPass) {
            mj["type"] = "pass";
            mj["position"] = m.position;
            mj["new_rank"] = m.new_rank;
            mj["cost"] = m.cost;
        } else {
            mj["type"] = "remove";
            mj["position"] = m.position;
        }
        moves.push_back(mj);
    }
    j["moves"] = moves;
    j["total_cost"] = cert.total_cost;
    j["final"] = to_json(cert.final);
    return j;
}

PetalPermutation permutation_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("permutation JSON must be an array");
    return PetalPermutation(j.get<std::vector<int>>());
}

UbercrossingDiagram diagram_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    auto heights = j.at("heights").get<std::vector<int>>();
    std::vector<std::pair<int, int>> arcs;
    for (const auto& a : j.at("matching"))
        arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    return UbercrossingDiagram(n, std::move(heights), std::move(arcs));
}

PlanarDiagram pd_from_json(const json& j) {
    PlanarDiagram pd;
    const auto& cs = j.at("crossings");
    const auto& ss = j.at("signs");
    if (cs.size() != ss.size()) throw ParseError("crossing and sign counts differ");
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Crossing c{};
        for (int k = 0; k < 4; ++k)
            c.arcs[static_cast<std::size_t>(k)] = cs[i].at(static_cast<std::size_t>(k)).get<int>();
        c.sign = ss[i].get<int>();
        pd.crossings.push_back(c);
    }
    pd.validate();
    return pd;
}

Laurent laurent_from_json(const json& j) {
    Laurent out;
    for (const auto& term : j.at("terms"))
        out += Laurent::monomial(coeff_from_json(term.at(1)), term.at(0).get<int>());
    return out;
}

Fingerprint fingerprint_from_json(const json& j) {
    Fingerprint f;
    f.det = coeff_from_json(j.at("determinant"));
    f.alex = laurent_from_json(j.at("alexander"));
    f.jones = laurent_from_json(j.at("jones"));
    return f;
}

UnknottingCertificate certificate_from_json(const json& j) {
    UnknottingCertificate cert{permutation_from_json(j.at("initial")),
                               {},
                               j.at("total_cost").get<int>(),
                               permutation_from_json(j.at("final"))};
    for (const auto& mj : j.at("moves")) {
        UnknotMove m{};
        if (mj.at("type") == "pass") {
            m.kind = UnknotMove::Kind::HeightPass;
            m.position = mj.at("position").get<int>();
            m.new_rank = mj.at("new_rank").get<int>();
            m.cost = mj.at("cost").get<int>();
        } else {
            m.kind = UnknotMove::Kind::RemovePetal;
            m.position = mj.at("position").get<int>();
        }
        cert.moves.push_back(m);
    }
    return cert;
}

} // namespace petalknot
