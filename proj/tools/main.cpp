// Command line front end: construct graphs, verify structural claims, report
// coloring bounds, solve list instances, hunt bad assignments, export DOT.
// Exit codes: 0 success / claims pass / colorable, 1 fail / uncolorable,
// 2 unknown or budget stop, 3 usage or precondition error.
#include "sqc/choose.hpp"
#include "sqc/construction.hpp"
#include "sqc/graph.hpp"
#include "sqc/io.hpp"
#include "sqc/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

// Records input/output digests and the wall time of one subcommand run.
// Disabled unless the run names an output or manifest path. The manifest is
// written even when the command fails, with the error message embedded.
struct ManifestSink {
    std::string command;
    std::string path;  // empty disables the sink
    std::optional<int> workers;
    ordered_json inputs = ordered_json::array();
    std::vector<std::string> output_paths;

    ManifestSink(std::string cmd, const std::string& out, const std::string& manifest)
        : command(std::move(cmd)) {
        if (!manifest.empty())
            path = manifest;
        else if (!out.empty())
            path = out + ".manifest.json";
    }

    static ordered_json digest_entry(const std::string& p) {
        ordered_json item;
        item["path"] = p;
        try {
            item["fnv1a64"] = sqc::to_hex64(sqc::fnv1a64_file(p));
        } catch (const std::exception&) {
            item["fnv1a64"] = nullptr;
        }
        return item;
    }

    void add_input(const std::string& p) {
        if (!path.empty()) inputs.push_back(digest_entry(p));
    }
    void add_output(const std::string& p) { output_paths.push_back(p); }

    void finish(long long wall_ms, const std::optional<std::string>& error) {
        if (path.empty()) return;
        ordered_json j;
        j["command"] = command;
        if (workers) j["workers"] = *workers;
        j["inputs"] = inputs;
        auto outs = ordered_json::array();
        for (const auto& p : output_paths) outs.push_back(digest_entry(p));
        j["outputs"] = std::move(outs);
        j["wall_ms"] = wall_ms;
        j["error"] = error ? ordered_json(*error) : ordered_json(nullptr);
        try {
            sqc::write_text_file(path, j.dump(2) + "\n");
        } catch (const std::exception& e) {
            std::cerr << "manifest write failed: " << e.what() << "\n";
        }
    }
};

int run_guarded(ManifestSink& sink, const std::function<int()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    std::optional<std::string> error;
    try {
        code = body();
    } catch (const std::exception& e) {
        error = e.what();
        std::cerr << "error: " << e.what() << "\n";
        code = 3;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    sink.finish(ms, error);
    return code;
}

int workers_from_env() {
    const char* s = std::getenv("SQC_WORKERS");
    if (!s || !*s) return 1;
    const int w = std::stoi(s);
    if (w < 1) throw std::invalid_argument("SQC_WORKERS must be >= 1");
    return w;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

nlohmann::json parse_file(const std::string& path) {
    return nlohmann::json::parse(sqc::read_text_file(path));
}

void emit(const std::string& text, const std::string& out, ManifestSink& sink,
          bool echo_stdout) {
    if (!out.empty()) {
        sqc::write_text_file(out, text);
        sink.add_output(out);
    }
    if (echo_stdout || out.empty()) std::cout << text;
}

std::vector<std::string> split_claims(const std::string& spec) {
    std::vector<std::string> claims;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) claims.push_back(item);
    return claims;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph squares, hub structure verification, exact list coloring"};
    app.require_subcommand(1);

    int n = 0, rounds = 0, k = 0, max_k = 4, size_guard = 8;
    long long budget = 0;
    int palette = 0;
    std::string graph_path, lists_path, out, manifest, claims_spec = "all";
    bool with_labels = false;

    auto add_io = [&](CLI::App* cmd, bool needs_graph) {
        if (needs_graph)
            cmd->add_option("--graph", graph_path, "graph JSON file")->required();
        cmd->add_option("--out", out, "write the result here");
        cmd->add_option("--manifest", manifest, "write a run manifest here");
    };

    auto* construct = app.add_subcommand("construct", "build a labeled graph of the family");
    construct->add_option("--n", n, "prime grid parameter")->required();
    construct->add_option("--rounds", rounds, "duplication rounds");
    add_io(construct, false);

    auto* verify = app.add_subcommand("verify", "check structural claims on a graph");
    verify->add_option("--graph", graph_path, "labeled graph JSON file");
    verify->add_option("--n", n, "prime grid parameter (build instead of load)");
    verify->add_option("--rounds", rounds, "duplication rounds");
    verify->add_option("--claims", claims_spec, "comma separated claim ids, or \"all\"");
    verify->add_option("--out", out, "write certificates JSON here");
    verify->add_option("--manifest", manifest, "write a run manifest here");

    auto* bounds = app.add_subcommand("bounds", "coloring bound summary for family members");
    bounds->add_option("--n", n, "prime grid parameter")->required();
    bounds->add_option("--rounds", rounds, "duplication rounds")->default_val(1);
    add_io(bounds, false);

    auto* solve = app.add_subcommand("solve", "color a graph from per-vertex lists");
    solve->add_option("--lists", lists_path, "list assignment JSON file")->required();
    solve->add_option("--budget", budget, "node budget, 0 = unlimited");
    add_io(solve, true);

    auto* oracle = app.add_subcommand("oracle", "exact list chromatic number, small graphs");
    oracle->add_option("--max-k", max_k, "largest list size to certify");
    oracle->add_option("--size-guard", size_guard, "refuse graphs larger than this");
    oracle->add_option("--palette", palette, "palette cap, 0 = list size * vertex count");
    add_io(oracle, true);

    auto* badsearch = app.add_subcommand("badsearch", "search for an uncolorable assignment");
    badsearch->add_option("--k", k, "list size")->required();
    badsearch->add_option("--palette", palette, "palette cap, 0 = k * vertex count");
    badsearch->add_option("--budget", budget, "assignments to test, 0 = unlimited");
    add_io(badsearch, true);

    auto* export_dot = app.add_subcommand("export-dot", "write the graph in DOT format");
    export_dot->add_flag("--labels", with_labels, "annotate vertices with role labels");
    add_io(export_dot, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    CLI::App* active = app.get_subcommands().front();
    ManifestSink sink(active->get_name(), out, manifest);

    if (active == construct) {
        return run_guarded(sink, [&] {
            const sqc::LabeledGraph g = sqc::build_iterated(n, rounds);
            emit(dump(sqc::labeled_graph_to_json(g)), out, sink, false);
            return 0;
        });
    }

    if (active == verify) {
        return run_guarded(sink, [&] {
            sqc::LabeledGraph g;
            if (!graph_path.empty()) {
                sink.add_input(graph_path);
                g = sqc::labeled_graph_from_json(parse_file(graph_path));
            } else if (n > 0) {
                g = sqc::build_iterated(n, rounds);
            } else {
                throw std::invalid_argument("provide --graph or --n");
            }
            const int workers = workers_from_env();
            sink.workers = workers;
            const std::vector<std::string> claims =
                claims_spec == "all" ? sqc::claim_ids(g.rounds) : split_claims(claims_spec);
            const auto reports = sqc::run_claims(g, claims, workers);
            bool all_pass = true;
            auto arr = ordered_json::array();
            for (const auto& rep : reports) {
                std::cout << rep.claim_id << ": " << (rep.pass ? "pass" : "fail") << "\n";
                all_pass = all_pass && rep.pass;
                arr.push_back(sqc::report_to_json(rep, g.n, g.rounds));
            }
            if (!out.empty()) {
                sqc::write_text_file(out, dump(arr));
                sink.add_output(out);
            }
            return all_pass ? 0 : 1;
        });
    }

    if (active == bounds) {
        return run_guarded(sink, [&] {
            const sqc::GapReport rep = sqc::gap_report(n, rounds);
            emit(dump(sqc::gap_report_to_json(rep)), out, sink, true);
            return rep.certified ? 0 : 1;
        });
    }

    if (active == solve) {
        return run_guarded(sink, [&] {
            sink.add_input(graph_path);
            sink.add_input(lists_path);
            const sqc::Graph g = sqc::graph_from_json(parse_file(graph_path));
            const sqc::ListAssignment L = sqc::lists_from_json(parse_file(lists_path));
            const sqc::SolveResult res = sqc::solve_lists(g, L, budget);
            ordered_json j;
            switch (res.status) {
                case sqc::SolveStatus::Colorable: j["status"] = "colorable"; break;
                case sqc::SolveStatus::Uncolorable: j["status"] = "uncolorable"; break;
                case sqc::SolveStatus::Unknown: j["status"] = "unknown"; break;
            }
            j["nodes"] = res.nodes;
            j["coloring"] =
                res.coloring ? ordered_json(*res.coloring) : ordered_json(nullptr);
            emit(dump(j), out, sink, true);
            if (res.status == sqc::SolveStatus::Colorable) return 0;
            return res.status == sqc::SolveStatus::Uncolorable ? 1 : 2;
        });
    }

    if (active == oracle) {
        return run_guarded(sink, [&] {
            sink.add_input(graph_path);
            const sqc::Graph g = sqc::graph_from_json(parse_file(graph_path));
            sqc::OracleOptions opts;
            opts.max_k = max_k;
            opts.size_guard = size_guard;
            opts.palette_cap = palette;
            const sqc::OracleResult res = sqc::list_chromatic_oracle(g, opts);
            ordered_json j;
            j["chromatic"] = res.chromatic;
            j["list_chromatic"] = res.list_chromatic ? ordered_json(*res.list_chromatic)
                                                     : ordered_json(nullptr);
            j["assignments_tested"] = res.assignments_tested;
            j["lower_bound_witness"] =
                res.lower_bound_witness ? sqc::lists_to_json(*res.lower_bound_witness)
                                        : ordered_json(nullptr);
            emit(dump(j), out, sink, true);
            return res.list_chromatic ? 0 : 2;
        });
    }

    if (active == badsearch) {
        return run_guarded(sink, [&] {
            sink.add_input(graph_path);
            const sqc::Graph g = sqc::graph_from_json(parse_file(graph_path));
            const sqc::BadSearchResult res = sqc::find_bad_assignment(g, k, palette, budget);
            ordered_json j;
            j["found"] = res.assignment.has_value();
            j["exhausted"] = res.exhausted;
            j["assignments_tested"] = res.assignments_tested;
            j["assignment"] =
                res.assignment ? sqc::lists_to_json(*res.assignment) : ordered_json(nullptr);
            emit(dump(j), out, sink, true);
            if (res.assignment) return 0;
            return res.exhausted ? 1 : 2;
        });
    }

    return run_guarded(sink, [&] {  // export-dot
        sink.add_input(graph_path);
        const nlohmann::json doc = parse_file(graph_path);
        std::string text;
        if (with_labels)
            text = sqc::to_dot(sqc::labeled_graph_from_json(doc), true);
        else
            text = sqc::to_dot(sqc::graph_from_json(doc));
        emit(text, out, sink, false);
        return 0;
    });
}
