// vblocks: rank queries, fusion validation, catalog inspection and
// verification suites for factorization-style rank computations.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input,
//             3 fusion-validation failure, 4 verification-suite failure.

#include "vblocks/catalog.hpp"
#include "vblocks/errors.hpp"
#include "vblocks/factorization.hpp"
#include "vblocks/fock.hpp"
#include "vblocks/genus_zero.hpp"
#include "vblocks/sewing.hpp"
#include "vblocks/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace vblocks;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitValidation = 3;
constexpr int kExitVerifyFailure = 4;

struct OutputSink {
    std::string path;
    std::string format = "text"; // text | json | csv

    void write(const std::string& text, const json& doc, const std::string& csv) const {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
        if (format == "json")
            *os << doc.dump(2) << "\n";
        else if (format == "csv")
            *os << csv;
        else
            *os << text;
    }
};

std::vector<std::size_t> parse_insertions(const FusionRing& ring, const std::string& csv) {
    std::vector<std::size_t> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto idx = resolve_label(ring, token);
        if (!idx) throw UnstableQueryError("unknown insertion label '" + token + "'");
        out.push_back(*idx);
    }
    return out;
}

std::vector<P1Point> parse_points(const std::string& csv) {
    std::vector<P1Point> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "inf")
            out.push_back(P1Point::infinity());
        else
            out.push_back(P1Point::at(Rational::parse(token)));
    }
    return out;
}

int cmd_rank(const std::string& catalog, long genus, const std::string& insertions,
             long invariance_trials, std::uint64_t seed, const OutputSink& sink, bool force) {
    const CatalogEntry cat = resolve_catalog(catalog, force);
    const RankEngine engine(cat.ring);
    const auto labels = parse_insertions(cat.ring, insertions);

    const BigInt value = engine.rank(genus, labels);

    json doc;
    doc["command"] = "rank";
    doc["catalog"] = cat.name;
    doc["genus"] = genus;
    json ins = json::array();
    for (auto l : labels) ins.push_back(cat.ring.label(l));
    doc["insertions"] = ins;
    doc["rank"] = value.str();

    std::string text = value.str() + "\n";
    std::string csv = "rank\n" + value.str() + "\n";

    if (invariance_trials > 0) {
        const auto report = engine.invariance_check(genus, labels, invariance_trials, seed);
        doc["invariance"] = {{"trials", invariance_trials},
                             {"seed", seed},
                             {"agree", report.agree},
                             {"witness", report.witness}};
        json vals = json::array();
        for (const auto& v : report.trial_values) vals.push_back(v.str());
        doc["invariance"]["values"] = vals;
        text += report.agree ? "invariance: all trials agree\n"
                             : "invariance: DISAGREEMENT " + report.witness + "\n";
        if (!report.agree) {
            sink.write(text, doc, csv);
            return kExitVerifyFailure;
        }
    }
    sink.write(text, doc, csv);
    return kExitOk;
}

int cmd_graph_rank(const std::string& catalog, const std::string& graph_path,
                   const OutputSink& sink, bool force) {
    const CatalogEntry cat = resolve_catalog(catalog, force);
    std::ifstream in(graph_path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + graph_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const StableGraph graph = StableGraph::from_json(buf.str(), cat.ring);
    const RankEngine engine(cat.ring);
    const BigInt value = engine.rank_via_graph(graph);

    json doc;
    doc["command"] = "graph-rank";
    doc["catalog"] = cat.name;
    doc["graph"] = graph_path;
    doc["genus"] = graph.total_genus();
    doc["rank"] = value.str();
    sink.write(value.str() + "\n", doc, "rank\n" + value.str() + "\n");
    return kExitOk;
}

int cmd_validate(const std::string& catalog, bool force, const OutputSink& sink) {
    CatalogEntry cat = resolve_catalog(catalog, /*force=*/true); // validate ourselves below
    const auto report = validate_fusion(cat.ring);

    json doc;
    doc["command"] = "validate";
    doc["catalog"] = cat.name;
    doc["ok"] = report.ok();
    json issues = json::array();
    for (const auto& issue : report.issues) {
        json w = json::array();
        for (const auto& s : issue.witness) w.push_back(s);
        issues.push_back({{"constraint", issue.constraint}, {"witness", w},
                          {"message", issue.message}});
    }
    doc["issues"] = issues;

    std::string csv = "constraint,witness,message\n";
    for (const auto& issue : report.issues) {
        std::string w;
        for (const auto& s : issue.witness) w += (w.empty() ? "" : " ") + s;
        csv += issue.constraint + "," + w + "," + issue.message + "\n";
    }
    sink.write(report.ok() ? "ok\n" : report.str(), doc, csv);
    if (!report.ok() && !force) return kExitValidation;
    return kExitOk;
}

int cmd_catalog(const std::string& show, const std::string& export_path, const OutputSink& sink,
                bool force) {
    const CatalogEntry cat = resolve_catalog(show, force);
    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) throw std::runtime_error("cannot open output file: " + export_path);
        out << fusion_to_json(cat.ring, cat.provenance_notes) << "\n";
        std::cout << "wrote " << export_path << "\n";
        return kExitOk;
    }

    json doc;
    doc["command"] = "catalog";
    doc["catalog"] = cat.name;
    doc["central_charge"] = cat.ring.central_charge().str();
    doc["vacuum"] = cat.ring.label(cat.ring.vacuum());
    json labels = json::array();
    for (std::size_t i = 0; i < cat.ring.size(); ++i)
        labels.push_back({{"label", cat.ring.label(i)},
                          {"weight", cat.ring.weight(i).str()},
                          {"dual", cat.ring.label(cat.ring.dual(i))}});
    doc["labels"] = labels;
    doc["provenance_notes"] = cat.provenance_notes;

    std::ostringstream text;
    text << cat.name << "\n";
    text << "  c = " << cat.ring.central_charge().str() << "\n";
    text << "  labels (" << cat.ring.size() << "):\n";
    for (std::size_t i = 0; i < cat.ring.size(); ++i)
        text << "    " << cat.ring.label(i) << "  h = " << cat.ring.weight(i).str()
             << "  dual = " << cat.ring.label(cat.ring.dual(i)) << "\n";

    std::string csv = "label,weight,dual\n";
    for (std::size_t i = 0; i < cat.ring.size(); ++i)
        csv += cat.ring.label(i) + "," + cat.ring.weight(i).str() + "," +
               cat.ring.label(cat.ring.dual(i)) + "\n";

    sink.write(text.str(), doc, csv);
    return kExitOk;
}

int cmd_verify(const std::string& suite, long cutoff, std::uint64_t seed, const OutputSink& sink) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto checks = verify::run_suite(suite, cutoff, seed);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ostringstream text;
    json items = json::array();
    std::string csv = "check,pass,detail\n";
    bool ok = true;
    for (const auto& c : checks) {
        ok = ok && c.pass;
        text << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) text << " -- " << c.detail;
        text << "\n";
        items.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        csv += c.name + "," + (c.pass ? "1" : "0") + "," + c.detail + "\n";
    }
    text << (ok ? "all checks passed" : "CHECKS FAILED") << " (" << checks.size() << " checks, "
         << secs << " s)\n";

    json doc;
    doc["command"] = "verify";
    doc["suite"] = suite;
    doc["cutoff"] = cutoff;
    doc["seed"] = seed;
    doc["ok"] = ok;
    doc["checks"] = items;
    sink.write(text.str(), doc, csv);
    return ok ? kExitOk : kExitVerifyFailure;
}

int cmd_oracle(const std::string& catalog, const std::string& labels_csv, long cutoff,
               const std::string& points_csv, long pole_bound, bool compare, const OutputSink& sink) {
    const CatalogEntry cat = resolve_catalog(catalog);
    if (cat.family != CatalogFamily::Lattice)
        throw std::invalid_argument("oracle: only lattice catalogs have concrete modules");
    const long k = cat.k;

    if (compare) {
        const auto cmp = oracle_vs_fusion(k, cutoff, pole_bound);
        std::ostringstream text;
        json rows = json::array();
        std::string csv = "labels,fusion,estimate,stabilized,match\n";
        for (const auto& row : cmp.rows) {
            std::string lbl = std::to_string(row.labels[0]) + "," +
                              std::to_string(row.labels[1]) + "," + std::to_string(row.labels[2]);
            text << "(" << lbl << ") fusion=" << row.fusion << " estimate=" << row.estimate
                 << (row.stabilized ? "" : " (unstabilized)") << (row.match ? "" : "  MISMATCH")
                 << "\n";
            rows.push_back({{"labels", row.labels},
                            {"fusion", row.fusion},
                            {"estimate", row.estimate},
                            {"stabilized", row.stabilized},
                            {"match", row.match}});
            csv += "\"" + lbl + "\"," + std::to_string(row.fusion) + "," +
                   std::to_string(row.estimate) + "," + (row.stabilized ? "1" : "0") + "," +
                   (row.match ? "1" : "0") + "\n";
        }
        text << (cmp.all_match ? "all triples match\n" : "MISMATCHES FOUND\n");
        json doc;
        doc["command"] = "oracle";
        doc["catalog"] = cat.name;
        doc["cutoff"] = cutoff;
        doc["all_match"] = cmp.all_match;
        doc["rows"] = rows;
        sink.write(text.str(), doc, csv);
        return cmp.all_match ? kExitOk : kExitVerifyFailure;
    }

    std::vector<long> labels;
    {
        std::stringstream ss(labels_csv);
        std::string token;
        while (std::getline(ss, token, ',')) labels.push_back(std::stol(token));
    }
    std::vector<P1Point> points = points_csv.empty()
                                      ? std::vector<P1Point>{P1Point::at(Rational(0)),
                                                             P1Point::at(Rational(1)),
                                                             P1Point::at(Rational(-1))}
                                      : parse_points(points_csv);
    if (labels.size() != points.size())
        throw std::invalid_argument("oracle: need one label per point");

    const FockVOA voa = FockVOA::lattice(k, std::max(cutoff, 2L));
    std::vector<FockModule> mods;
    mods.reserve(labels.size());
    for (long j : labels) mods.push_back(FockModule::lattice(voa, j, cutoff));
    std::vector<const FockModule*> ptrs;
    for (const auto& m : mods) ptrs.push_back(&m);

    const auto est = truncated_coinvariant_dim(voa, ptrs, points, cutoff, pole_bound);

    json doc;
    doc["command"] = "oracle";
    doc["catalog"] = cat.name;
    doc["labels"] = labels;
    doc["cutoff"] = est.cutoff;
    doc["ambient_dim"] = est.ambient_dim;
    doc["relation_rank"] = est.relation_rank;
    doc["estimate"] = est.estimate;
    doc["stabilized"] = est.stabilized;
    doc["history"] = est.history;

    std::ostringstream text;
    text << "estimate = " << est.estimate << (est.stabilized ? " (stabilized)" : " (NOT stabilized)")
         << "\nambient = " << est.ambient_dim << ", relation rank = " << est.relation_rank
         << "\nhistory:";
    for (long v : est.history) text << " " << v;
    text << "\n";

    std::string csv = "cutoff,estimate,stabilized\n" + std::to_string(est.cutoff) + "," +
                      std::to_string(est.estimate) + "," + (est.stabilized ? "1" : "0") + "\n";
    sink.write(text.str(), doc, csv);
    return kExitOk;
}

int cmd_characters(const std::string& catalog, const std::string& label, long cutoff,
                   const OutputSink& sink) {
    const CatalogEntry cat = resolve_catalog(catalog);
    if (cat.family != CatalogFamily::Lattice)
        throw std::invalid_argument("characters: only lattice catalogs have concrete modules");
    auto idx = resolve_label(cat.ring, label);
    if (!idx) throw std::invalid_argument("characters: unknown label '" + label + "'");
    const long j = std::stol(cat.ring.label(*idx));

    const QSeries chi = lattice_graded_dimension(cat.k, j, cutoff);
    const Rational cw = lattice_conformal_weight(cat.k, j);

    json doc;
    doc["command"] = "characters";
    doc["catalog"] = cat.name;
    doc["label"] = cat.ring.label(*idx);
    doc["conformal_weight"] = cw.str();
    json coeffs = json::array();
    for (long d = 0; d <= cutoff; ++d) coeffs.push_back(chi[d].str());
    doc["graded_dimension"] = coeffs;

    std::string csv = "level,dim\n";
    for (long d = 0; d <= cutoff; ++d) csv += std::to_string(d) + "," + chi[d].str() + "\n";
    sink.write("c_W = " + cw.str() + "\nchi = " + chi.str() + "\n", doc, csv);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact factorization ranks, fusion catalogs and truncated vertex-algebra checks"};
    app.require_subcommand(1);

    std::string catalog;
    std::string insertions;
    std::string graph_path;
    std::string suite = "all";
    std::string labels_csv;
    std::string points_csv;
    std::string show;
    std::string export_path;
    std::string label;
    long genus = 0;
    long cutoff = 6;
    long invariance = 0;
    long pole_bound = -1;
    bool compare = false;
    bool force = false;
    std::uint64_t seed = 0;
    OutputSink sink;

    auto add_output_opts = [&](CLI::App* cmd) {
        cmd->add_option("--format", sink.format, "output format: text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--output", sink.path, "write the report to a file instead of stdout");
    };

    auto* rank = app.add_subcommand("rank", "rank of the coinvariant bundle for (g, insertions)");
    rank->add_option("--catalog", catalog, "catalog selector, e.g. lattice:1, virasoro:2,5")
        ->required();
    rank->add_option("--genus", genus, "genus g >= 0")->required();
    rank->add_option("--insertions", insertions, "comma-separated module labels");
    rank->add_option("--invariance", invariance, "run N random-degeneration trials");
    rank->add_option("--seed", seed, "rng seed (default 0)");
    rank->add_flag("--force", force, "skip fusion validation of file catalogs");
    add_output_opts(rank);

    auto* graph = app.add_subcommand("graph-rank", "rank via an explicit stable dual graph");
    graph->add_option("--catalog", catalog)->required();
    graph->add_option("--graph", graph_path, "stable graph JSON document")->required();
    graph->add_flag("--force", force);
    add_output_opts(graph);

    auto* validate = app.add_subcommand("validate", "run the fusion-ring validator");
    validate->add_option("--catalog", catalog)->required();
    validate->add_flag("--force", force, "exit 0 even when validation fails");
    add_output_opts(validate);

    auto* cat = app.add_subcommand("catalog", "inspect or export a catalog");
    cat->add_option("--show", show, "catalog selector")->required();
    cat->add_option("--export", export_path, "write the fusion-ring document to this path");
    cat->add_flag("--force", force);
    add_output_opts(cat);

    auto* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--cutoff", cutoff, "truncation window for the suites (default 6)");
    verify->add_option("--seed", seed);
    add_output_opts(verify);

    auto* oracle = app.add_subcommand("oracle", "truncated coinvariant dimensions on P^1");
    oracle->add_option("--catalog", catalog, "a lattice catalog, e.g. lattice:1")->required();
    oracle->add_option("--labels", labels_csv, "comma-separated coset labels");
    oracle->add_option("--cutoff", cutoff)->required();
    oracle->add_option("--points", points_csv, "marked points (default 0,1,-1)");
    oracle->add_option("--pole-bound", pole_bound, "section pole bound (default from cutoff)");
    oracle->add_flag("--compare-fusion", compare, "compare all triples against the fusion tensor");
    add_output_opts(oracle);

    auto* chars = app.add_subcommand("characters", "graded dimensions of lattice modules");
    chars->add_option("--catalog", catalog)->required();
    chars->add_option("--label", label)->required();
    chars->add_option("--cutoff", cutoff)->required();
    add_output_opts(chars);

    CLI11_PARSE(app, argc, argv);

    try {
        if (rank->parsed())
            return cmd_rank(catalog, genus, insertions, invariance, seed, sink, force);
        if (graph->parsed()) return cmd_graph_rank(catalog, graph_path, sink, force);
        if (validate->parsed()) return cmd_validate(catalog, force, sink);
        if (cat->parsed()) return cmd_catalog(show, export_path, sink, force);
        if (verify->parsed()) return cmd_verify(suite, cutoff, seed, sink);
        if (oracle->parsed())
            return cmd_oracle(catalog, labels_csv, cutoff, points_csv, pole_bound, compare, sink);
        if (chars->parsed()) return cmd_characters(catalog, label, cutoff, sink);
        return kExitInvalidInput;
    } catch (const FusionValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InvalidCatalogError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const UnstableQueryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
