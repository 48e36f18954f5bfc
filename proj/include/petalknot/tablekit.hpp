#pragma once

#include "petalknot/invariants.hpp"
#include "petalknot/petalperm.hpp"
#include "petalknot/uberdiag.hpp"

#include <optional>
#include <string>
#include <vector>

namespace petalknot {

// Reference data for one knot. Numeric table values come from standard knot
// tables; fingerprints are computed from the named construction.
struct KnotRecord {
    std::string name;
    int crossing_number = 0;
    int bridge_number = 0;
    std::optional<int> unknotting_number;
    bool chiral = false;
    Fingerprint fp;
    std::string provenance;
};

struct Identification {
    KnotRecord record;
    bool is_mirror = false; // matched after t -> 1/t on the Jones polynomial

    std::string display_name() const {
        return is_mirror && record.chiral ? record.name + "*" : record.name;
    }
};

class KnotTable {
public:
    KnotTable() = default;
    explicit KnotTable(std::vector<KnotRecord> records);

    static KnotTable bundled();
    static KnotTable load(const std::string& path);
    // PETALKNOT_TABLE env var overrides the bundled table
    static KnotTable from_environment();

    const std::vector<KnotRecord>& records() const { return records_; }
    std::optional<Identification> identify(const Fingerprint& f) const;
    std::optional<KnotRecord> by_name(const std::string& name) const;

private:
    std::vector<KnotRecord> records_;
};

// One class representative per rotation-equivalence class, sorted by the
// canonical difference sequence. Supported for odd p between 3 and 9.
std::vector<PetalPermutation> enumerate_classes(int p);

struct ClassRow {
    Fingerprint fp;
    int class_count = 0;
    PetalPermutation example; // representative with the least canonical key
    std::optional<std::string> knot; // table name when identified
};

struct FlaggedRow {
    PetalPermutation example;
    std::string error;
};

struct ClassificationTable {
    int p = 0;
    std::vector<ClassRow> rows; // sorted by fingerprint
    std::vector<FlaggedRow> flagged;
    int total_classes = 0;

    std::optional<ClassRow> find(const Fingerprint& f) const;
};

// Fingerprint every class representative through the reduction pipeline and
// aggregate per fingerprint. The parallel kernel partitions representatives
// across OpenMP workers; results are merged in representative order, so the
// output is identical to classify_serial for any worker count.
ClassificationTable classify(int p, int budget = kDefaultBracketBudget,
                             const KnotTable* table = nullptr);
ClassificationTable classify_serial(int p, int budget = kDefaultBracketBudget,
                                    const KnotTable* table = nullptr);

// classify with per-shard checkpoint files under dir, keyed by (p, shard).
ClassificationTable classify_checkpointed(int p, const std::string& dir,
                                          int budget = kDefaultBracketBudget,
                                          const KnotTable* table = nullptr);

// Smallest p <= p_max whose classification contains the fingerprint.
std::optional<int> min_petal_search(const Fingerprint& f, int p_max,
                                    int budget = kDefaultBracketBudget);

// Lemma check: any diagram of the knot needs n >= 2 b(K) strands.
bool check_bridge_bound(const UbercrossingDiagram& d, const KnotRecord& rec);

std::string classification_csv(const ClassificationTable& table);

} // namespace petalknot
