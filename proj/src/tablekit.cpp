#include "petalknot/tablekit.hpp"

#include "petalknot/errors.hpp"
#include "petalknot/json_io.hpp"
#include "petalknot/resolve.hpp"
#include "petalknot/simplify.hpp"

#include "knot_table_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace petalknot {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

KnotRecord record_from_json(const json& j) {
    KnotRecord r;
    r.name = j.at("name").get<std::string>();
    r.crossing_number = j.at("crossing_number").get<int>();
    r.bridge_number = j.at("bridge_number").get<int>();
    if (j.contains("unknotting_number") && !j.at("unknotting_number").is_null())
        r.unknotting_number = j.at("unknotting_number").get<int>();
    r.chiral = j.at("chiral").get<bool>();
    r.fp = fingerprint_from_json(j.at("fingerprint"));
    r.provenance = j.value("provenance", std::string{});
    return r;
}

} // namespace

KnotTable::KnotTable(std::vector<KnotRecord> records) : records_(std::move(records)) {
    std::set<std::string> fps;
    for (const auto& r : records_)
        if (!fps.insert(r.fp.str()).second)
            throw ParseError("knot table has duplicate fingerprints");
}

KnotTable KnotTable::bundled() {
    const json j = json::parse(detail::kBundledKnotTable);
    std::vector<KnotRecord> recs;
    for (const auto& rj : j) recs.push_back(record_from_json(rj));
    return KnotTable(std::move(recs));
}

KnotTable KnotTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open knot table: " + path);
    json j;
    in >> j;
    std::vector<KnotRecord> recs;
    for (const auto& rj : j) recs.push_back(record_from_json(rj));
    return KnotTable(std::move(recs));
}

KnotTable KnotTable::from_environment() {
    if (const char* p = std::getenv("PETALKNOT_TABLE")) return load(p);
    return bundled();
}

std::optional<Identification> KnotTable::identify(const Fingerprint& f) const {
    for (const auto& r : records_) {
        if (r.fp == f) return Identification{r, false};
        if (mirrored(r.fp) == f) return Identification{r, true};
    }
    return std::nullopt;
}

std::optional<KnotRecord> KnotTable::by_name(const std::string& name) const {
    for (const auto& r : records_)
        if (r.name == name) return r;
    return std::nullopt;
}

std::vector<PetalPermutation> enumerate_classes(int p) {
    if (p < 3 || p > 9 || p % 2 == 0)
        throw ParseError("class enumeration supports odd p between 3 and 9");
    std::vector<int> tail;
    for (int v = 2; v <= p; ++v) tail.push_back(v);
    std::set<std::vector<int>> keys;
    do {
        std::vector<int> entries = {1};
        entries.insert(entries.end(), tail.begin(), tail.end());
        keys.insert(canonical_class(PetalPermutation(entries)).canonical_rotation);
    } while (std::next_permutation(tail.begin(), tail.end()));
    std::vector<PetalPermutation> reps;
    for (const auto& key : keys) reps.push_back(permutation_from_diffs(key));
    return reps;
}

namespace {

struct RepResult {
    std::optional<Fingerprint> fp;
    std::string error;
};

RepResult fingerprint_rep(const PetalPermutation& rep, int budget) {
    RepResult r;
    try {
        r.fp = fingerprint(petal_reduced_diagram(rep), budget);
    } catch (const BudgetError& e) {
        r.error = e.what();
    }
    return r;
}

ClassificationTable aggregate(int p, const std::vector<PetalPermutation>& reps,
                              const std::vector<RepResult>& results,
                              const KnotTable* table) {
    ClassificationTable out;
    out.p = p;
    out.total_classes = static_cast<int>(reps.size());
    std::map<Fingerprint, ClassRow> rows;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& rr = results[i];
        if (!rr.fp) {
            out.flagged.push_back(FlaggedRow{reps[i], rr.error});
            continue;
        }
        auto it = rows.find(*rr.fp);
        if (it == rows.end()) {
            ClassRow row{*rr.fp, 1, reps[i], std::nullopt};
            if (table) {
                if (auto id = table->identify(*rr.fp)) row.knot = id->display_name();
            }
            rows.emplace(*rr.fp, std::move(row));
        } else {
            ++it->second.class_count;
        }
    }
    for (auto& [fp, row] : rows) out.rows.push_back(std::move(row));
    return out;
}

} // namespace

std::optional<ClassRow> ClassificationTable::find(const Fingerprint& f) const {
    for (const auto& r : rows)
        if (r.fp == f) return r;
    return std::nullopt;
}

ClassificationTable classify_serial(int p, int budget, const KnotTable* table) {
    const auto reps = enumerate_classes(p);
    std::vector<RepResult> results(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        results[i] = fingerprint_rep(reps[i], budget);
    return aggregate(p, reps, results, table);
}

ClassificationTable classify(int p, int budget, const KnotTable* table) {
    const auto reps = enumerate_classes(p);
    std::vector<RepResult> results(reps.size());
    const int n = static_cast<int>(reps.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i)
        results[static_cast<std::size_t>(i)] =
            fingerprint_rep(reps[static_cast<std::size_t>(i)], budget);
    return aggregate(p, reps, results, table);
}

ClassificationTable classify_checkpointed(int p, const std::string& dir, int budget,
                                          const KnotTable* table) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const auto reps = enumerate_classes(p);
    const int shard_size = 256;
    const int shards = (static_cast<int>(reps.size()) + shard_size - 1) / shard_size;
    std::vector<RepResult> results(reps.size());
    for (int s = 0; s < shards; ++s) {
        const fs::path file = fs::path(dir) / ("classify_p" + std::to_string(p) + "_shard" +
                                               std::to_string(s) + ".json");
        const int lo = s * shard_size;
        const int hi = std::min<int>(lo + shard_size, static_cast<int>(reps.size()));
        if (fs::exists(file)) {
            std::ifstream in(file);
            json j;
            in >> j;
            int i = lo;
            for (const auto& rj : j) {
                RepResult rr;
                if (rj.contains("fingerprint"))
                    rr.fp = fingerprint_from_json(rj.at("fingerprint"));
                else
                    rr.error = rj.value("error", "budget exceeded");
                results[static_cast<std::size_t>(i++)] = std::move(rr);
            }
            if (i != hi) throw ParseError("checkpoint shard has wrong size: " + file.string());
            continue;
        }
#pragma omp parallel for schedule(dynamic)
        for (int i = lo; i < hi; ++i)
            results[static_cast<std::size_t>(i)] =
                fingerprint_rep(reps[static_cast<std::size_t>(i)], budget);
        ordered_json out = ordered_json::array();
        for (int i = lo; i < hi; ++i) {
            ordered_json rj;
            rj["representative"] = to_json(reps[static_cast<std::size_t>(i)]);
            if (results[static_cast<std::size_t>(i)].fp)
                rj["fingerprint"] = to_json(*results[static_cast<std::size_t>(i)].fp);
            else
                rj["error"] = results[static_cast<std::size_t>(i)].error;
            out.push_back(rj);
        }
        std::ofstream of(file);
        of << out.dump(1) << "\n";
    }
    return aggregate(p, reps, results, table);
}

std::optional<int> min_petal_search(const Fingerprint& f, int p_max, int budget) {
    if (p_max > 9) throw ParseError("petal search is exhaustive only up to p = 9");
    for (int p = 3; p <= p_max; p += 2) {
        const auto table = classify(p, budget);
        if (table.find(f)) return p;
    }
    return std::nullopt;
}

bool check_bridge_bound(const UbercrossingDiagram& d, const KnotRecord& rec) {
    const PlanarDiagram pd = resolve(d);
    try {
        const Fingerprint f = fingerprint(pd);
        if (f != rec.fp && f != mirrored(rec.fp))
            throw ParseError("record does not match the diagram's fingerprint");
    } catch (const BudgetError&) {
        // large diagrams: match on the polynomial-time invariants, which are
        // mirror-blind anyway (the bound itself only needs the bridge number)
        if (alexander(pd) != rec.fp.alex || determinant(pd) != rec.fp.det)
            throw ParseError("record does not match the diagram's invariants");
    }
    return d.n() >= 2 * rec.bridge_number;
}

std::string classification_csv(const ClassificationTable& table) {
    std::ostringstream os;
    os << "p,class_count,example,knot,determinant,alexander,jones\n";
    for (const auto& r : table.rows) {
        os << table.p << "," << r.class_count << ",\"" << r.example.str() << "\",";
        os << (r.knot ? *r.knot : std::string("?")) << ",";
        os << r.fp.det.str() << ",\"" << r.fp.alex.str() << "\",\""
           << r.fp.jones.str("s") << "\"\n";
    }
    for (const auto& fr : table.flagged)
        os << table.p << ",1,\"" << fr.example.str() << "\",budget-exceeded,,,\n";
    return os.str();
}

} // namespace petalknot
