// petalknot: petal permutations, uebercrossing diagrams, and exact knot
// invariants from the command line.

#include "petalknot/braid.hpp"
#include "petalknot/errors.hpp"
#include "petalknot/invariants.hpp"
#include "petalknot/json_io.hpp"
#include "petalknot/petalperm.hpp"
#include "petalknot/resolve.hpp"
#include "petalknot/simplify.hpp"
#include "petalknot/svg.hpp"
#include "petalknot/tablekit.hpp"
#include "petalknot/uberdiag.hpp"
#include "petalknot/unknot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace petalknot;
using nlohmann::ordered_json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct Options {
    std::string format = "text";
    unsigned seed = 0;
    int budget = kDefaultBracketBudget;
};

void emit(const ordered_json& j, const Options& opt) {
    if (opt.format == "json") {
        std::cout << j.dump(1) << "\n";
        return;
    }
    // text: flat key: value lines
    for (const auto& [k, v] : j.items()) {
        if (v.is_string())
            std::cout << k << ": " << v.get<std::string>() << "\n";
        else
            std::cout << k << ": " << v.dump() << "\n";
    }
}

ordered_json fingerprint_report(const Fingerprint& f) {
    ordered_json j = to_json(f);
    j["alexander_text"] = f.alex.str();
    // knots always land on integer powers of t (even t^(1/2) exponents)
    Laurent jones_t;
    for (const auto& [e, c] : f.jones.terms()) jones_t += Laurent::monomial(c, e / 2);
    j["jones_text"] = jones_t.str();
    return j;
}

Fingerprint fingerprint_of(const PetalPermutation& sigma, const Options& opt) {
    if (opt.seed != 0) {
        const auto d = from_petal(sigma);
        return fingerprint(resolve(d, PerturbationSchedule::seeded(d.n(), opt.seed)),
                           opt.budget);
    }
    return fingerprint(petal_reduced_diagram(sigma), opt.budget);
}

int run_identify(const std::string& perm, const Options& opt, bool self_check) {
    const auto sigma = parse_permutation(perm);
    const auto table = KnotTable::from_environment();
    const Fingerprint f = fingerprint_of(sigma, opt);

    if (self_check) {
        const auto d = from_petal(sigma);
        for (unsigned s : {1u, 2u, 3u}) {
            const auto fs =
                fingerprint(resolve(d, PerturbationSchedule::seeded(d.n(), s)), opt.budget);
            if (fs != f) throw VerificationError("self-check: schedules disagree");
        }
    }

    ordered_json j;
    j["schema"] = 1;
    j["permutation"] = to_json(sigma);
    j["petals"] = sigma.p();
    const auto id = table.identify(f);
    j["knot"] = id ? ordered_json(id->display_name()) : ordered_json(nullptr);
    j["fingerprint"] = fingerprint_report(f);
    // certificates: uebercrossing strand count, reduced crossing count,
    // unknotting cost against the (p-1)(p-3)/8 bound
    j["uber_strands"] = unfold_top(from_petal(sigma)).n();
    j["reduced_crossings"] = petal_reduced_diagram(sigma).crossing_count();
    const auto cert = unknotting_sequence(sigma);
    j["unknotting_cost"] = cert.total_cost;
    j["unknotting_bound"] = unknotting_bound(sigma.p());
    if (id && id->record.bridge_number > 0)
        j["bridge_bound_ok"] =
            check_bridge_bound(unfold_top(from_petal(sigma)), id->record);
    emit(j, opt);
    return 0;
}

int run_invariants(const std::string& perm, const Options& opt) {
    const auto sigma = parse_permutation(perm);
    ordered_json j;
    j["schema"] = 1;
    j["permutation"] = to_json(sigma);
    j["fingerprint"] = fingerprint_report(fingerprint_of(sigma, opt));
    emit(j, opt);
    return 0;
}

int run_reduce(const std::string& perm, const Options& opt) {
    const auto sigma = parse_permutation(perm);
    const auto pd = petal_reduced_diagram(sigma);
    ordered_json j;
    j["schema"] = 1;
    j["permutation"] = to_json(sigma);
    j["crossings"] = pd.crossing_count();
    j["bound"] = petal_crossing_bound(sigma.p());
    j["pd"] = to_json(pd.crossings.empty() ? pd : renumber_along_traversal(pd));
    j["gauss"] = gauss_code_str(gauss_code(pd));
    emit(j, opt);
    return 0;
}

int run_unknot(const std::string& perm, const Options& opt, const std::string& replay_path) {
    const auto sigma = parse_permutation(perm);
    if (!replay_path.empty()) {
        std::ifstream in(replay_path);
        if (!in) throw ParseError("cannot open certificate: " + replay_path);
        nlohmann::json cj;
        in >> cj;
        const auto cert = certificate_from_json(cj);
        const auto final = replay(sigma, cert.moves);
        if (final != cert.final || final.p() != 3)
            throw VerificationError("certificate replay mismatch");
        ordered_json j;
        j["schema"] = 1;
        j["replay"] = "ok";
        j["final"] = to_json(final);
        emit(j, opt);
        return 0;
    }
    const auto cert = unknotting_sequence(sigma);
    ordered_json j = to_json(cert);
    j["schema"] = 1;
    j["bound"] = unknotting_bound(sigma.p());
    emit(j, opt);
    return 0;
}

int run_compose(const std::vector<std::string>& perms, const Options& opt) {
    if (perms.size() < 2) throw ParseError("compose needs at least two permutations");
    std::vector<PetalPermutation> sigmas;
    for (const auto& s : perms) sigmas.push_back(parse_permutation(s));

    UbercrossingDiagram acc = unfold_top(from_petal(sigmas[0]));
    Laurent alex_expect = alexander(resolve(acc));
    BigInt det_expect = determinant(resolve(acc));
    for (std::size_t i = 1; i < sigmas.size(); ++i) {
        const auto pre = unfold_top(from_petal(sigmas[i]));
        alex_expect = alex_expect * alexander(resolve(pre));
        det_expect = det_expect * determinant(resolve(pre));
        acc = compose_simple(acc, pre);
    }
    const auto pd = resolve(acc);
    if (alexander(pd) != alex_expect || determinant(pd) != det_expect)
        throw VerificationError("composition invariants are not multiplicative");

    ordered_json j;
    j["schema"] = 1;
    j["strands"] = acc.n();
    j["diagram"] = to_json(acc);
    j["alexander"] = to_json(alex_expect, "t");
    j["determinant"] = det_expect.str();
    try {
        j["fingerprint"] = fingerprint_report(fingerprint(pd, opt.budget));
    } catch (const BudgetError&) {
        j["fingerprint"] = nullptr;
        j["note"] = "jones skipped: crossing budget exceeded after reduction";
    }
    emit(j, opt);
    return 0;
}

int run_enumerate(int p, const Options& opt) {
    const auto reps = enumerate_classes(p);
    ordered_json j;
    j["schema"] = 1;
    j["p"] = p;
    j["classes"] = static_cast<int>(reps.size());
    ordered_json list = ordered_json::array();
    for (const auto& r : reps) list.push_back(to_json(r));
    j["representatives"] = list;
    emit(j, opt);
    return 0;
}

int run_classify(int p, const Options& opt, bool serial, bool allow_long,
                 const std::string& checkpoint_dir, const std::string& out_path) {
    if (p == 9 && !allow_long)
        throw ParseError("p = 9 is a long-running mode; pass --long to enable it");
    const auto table = KnotTable::from_environment();
    ClassificationTable res;
    if (!checkpoint_dir.empty())
        res = classify_checkpointed(p, checkpoint_dir, opt.budget, &table);
    else if (serial)
        res = classify_serial(p, opt.budget, &table);
    else
        res = classify(p, opt.budget, &table);

    if (opt.format == "csv") {
        const std::string csv = classification_csv(res);
        if (!out_path.empty()) {
            std::ofstream(out_path) << csv;
        } else {
            std::cout << csv;
        }
        return 0;
    }
    ordered_json j;
    j["schema"] = 1;
    j["p"] = res.p;
    j["total_classes"] = res.total_classes;
    ordered_json rows = ordered_json::array();
    for (const auto& r : res.rows) {
        ordered_json rj;
        rj["knot"] = r.knot ? ordered_json(*r.knot) : ordered_json(nullptr);
        rj["class_count"] = r.class_count;
        rj["example"] = to_json(r.example);
        rj["fingerprint"] = to_json(r.fp);
        rows.push_back(rj);
    }
    j["rows"] = rows;
    ordered_json flagged = ordered_json::array();
    for (const auto& fr : res.flagged) {
        ordered_json fj;
        fj["example"] = to_json(fr.example);
        fj["error"] = fr.error;
        flagged.push_back(fj);
    }
    j["flagged"] = flagged;
    if (!out_path.empty()) {
        std::ofstream(out_path) << j.dump(1) << "\n";
        return 0;
    }
    emit(j, opt);
    return 0;
}

int run_reverse_petal(const std::string& perm, const Options& opt) {
    const auto sigma = parse_permutation(perm);
    const auto pd = reverse_petal_diagram(sigma);
    ordered_json j;
    j["schema"] = 1;
    j["permutation"] = to_json(sigma);
    j["crossings"] = pd.crossing_count();
    j["pd"] = to_json(pd.crossings.empty() ? pd : renumber_along_traversal(pd));
    j["gauss"] = gauss_code_str(gauss_code(pd));
    j["fingerprint"] = fingerprint_report(fingerprint(pd, opt.budget));
    emit(j, opt);
    return 0;
}

int run_export(const std::string& input, bool prepetal, const std::string& out_path) {
    // accepts a permutation or a diagram JSON file
    std::optional<UbercrossingDiagram> d;
    try {
        const auto sigma = parse_permutation(input);
        d = prepetal ? unfold_top(from_petal(sigma)) : from_petal(sigma);
    } catch (const ParseError&) {
        std::ifstream in(input);
        if (!in) throw;
        nlohmann::json j;
        in >> j;
        d = diagram_from_json(j);
    }
    const std::string svg = render_svg(*d);
    if (out_path.empty()) {
        std::cout << svg;
    } else {
        std::ofstream(out_path) << svg;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"petal permutations, uebercrossing diagrams, and exact knot invariants"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    Options opt;
    app.add_option("--format", opt.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", opt.seed, "perturbation schedule seed (0 = star schedule)");
    app.add_option("--budget", opt.budget, "crossing budget for the bracket state sum");

    std::string perm, perm_b, replay_path, checkpoint_dir, out_path;
    std::vector<std::string> perms;
    bool self_check = false, prepetal = false, serial = false, allow_long = false;
    int p = 5;

    auto* identify = app.add_subcommand("identify", "fingerprint and table lookup");
    identify->add_option("permutation", perm)->required();
    identify->add_flag("--self-check", self_check,
                       "verify three perturbation seeds agree");

    auto* invariants = app.add_subcommand("invariants", "print the fingerprint");
    invariants->add_option("permutation", perm)->required();

    auto* reduce = app.add_subcommand("reduce", "reduced diagram via the star pipeline");
    reduce->add_option("permutation", perm)->required();

    auto* unknot = app.add_subcommand("unknot", "greedy unknotting certificate");
    unknot->add_option("permutation", perm)->required();
    unknot->add_option("--replay", replay_path, "verify a certificate file instead");

    auto* compose = app.add_subcommand("compose", "connected sum of petal knots");
    compose->add_option("permutations", perms)->expected(-2);

    auto* enumerate = app.add_subcommand("enumerate", "rotation classes at odd p");
    enumerate->add_option("--p", p)->required();

    auto* classify = app.add_subcommand("classify", "knot census at odd p");
    classify->add_option("--p", p)->required();
    classify->add_flag("--serial", serial, "use the serial reference kernel");
    classify->add_flag("--long", allow_long, "allow the long-running p = 9 census");
    classify->add_option("--checkpoint", checkpoint_dir, "shard checkpoint directory");
    classify->add_option("--out", out_path, "write the table to a file");

    auto* reverse = app.add_subcommand("reverse-petal", "sideways double-crossing diagram");
    reverse->add_option("permutation", perm)->required();

    auto* exportc = app.add_subcommand("export", "deterministic SVG rendering");
    exportc->add_option("permutation", perm)->required();
    exportc->add_flag("--prepetal", prepetal, "render the unfolded pre-petal projection");
    exportc->add_option("--out", out_path, "output file (stdout when absent)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (identify->parsed()) return run_identify(perm, opt, self_check);
        if (invariants->parsed()) return run_invariants(perm, opt);
        if (reduce->parsed()) return run_reduce(perm, opt);
        if (unknot->parsed()) return run_unknot(perm, opt, replay_path);
        if (compose->parsed()) return run_compose(perms, opt);
        if (enumerate->parsed()) return run_enumerate(p, opt);
        if (classify->parsed())
            return run_classify(p, opt, serial, allow_long, checkpoint_dir, out_path);
        if (reverse->parsed()) return run_reverse_petal(perm, opt);
        if (exportc->parsed()) return run_export(perm, prepetal, out_path);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const VerificationError& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
