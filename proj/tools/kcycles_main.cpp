// Command line front end: enumerate, trace, compare, mine, probe.
// Exit codes: 0 success, 1 compare found a discrepancy, 2 bad usage or
// unreadable input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kcycles/harness.hpp"
#include "kcycles/oracle.hpp"
#include "kcycles/search.hpp"
#include "kcycles/trace.hpp"

namespace {

using namespace kcycles;

struct Usage {
    std::string message;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Usage{"cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "adjlist") return parse_adjlist(text);
    if (format == "edgelist") return parse_edgelist(text);
    return parse_graph(text);
}

RelaxPolicy to_policy(const std::string& name) {
    return name == "original" ? RelaxPolicy::Original : RelaxPolicy::Revised;
}

SccMode to_scc_mode(const std::string& name) {
    return name == "whole" ? SccMode::Whole : SccMode::Scc;
}

nlohmann::json cycle_json(const Graph& g, const Cycle& c) {
    nlohmann::json labels = nlohmann::json::array();
    for (NodeId v : c.nodes) labels.push_back(g.label(v));
    return labels;
}

nlohmann::json counters_json(const RunCounters& c) {
    nlohmann::json j;
    j["edge_visits"] = c.edge_visits;
    j["lock_writes"] = c.lock_writes;
    j["relax_calls"] = c.relax_calls;
    j["blist_adds"] = c.blist_adds;
    j["cycles_found"] = c.cycles_found;
    j["max_lock_decrease_run"] = c.max_lock_decrease_run;
    j["total_ops"] = c.total_ops();
    return j;
}

// Streams rendered lines as events arrive instead of buffering the run.
struct PrintingSink final : TraceSink {
    void on_event(const TraceEvent& e) override {
        std::cout << render_line(e) << '\n';
    }
};

int run_enumerate(const std::string& path, const std::string& input_format,
                  int k, const std::string& policy, const std::string& scc,
                  const std::string& format) {
    Graph g = load_graph(path, input_format);
    EnumerateResult run =
        enumerate_cycles(g, k, to_policy(policy), {to_scc_mode(scc), nullptr});
    if (format == "structured") {
        for (const Cycle& c : run.cycles) {
            nlohmann::json line;
            line["cycle"] = cycle_json(g, c);
            line["length"] = c.length();
            std::cout << line.dump() << '\n';
        }
        nlohmann::json summary;
        summary["count"] = static_cast<long long>(run.cycles.size());
        summary["k"] = k;
        summary["policy"] = policy;
        summary["counters"] = counters_json(run.counters);
        std::cout << summary.dump() << '\n';
    } else {
        for (const Cycle& c : run.cycles)
            std::cout << format_cycle(g, c) << '\n';
        std::cout << run.cycles.size()
                  << (run.cycles.size() == 1 ? " cycle" : " cycles") << '\n';
    }
    return 0;
}

int run_trace(const std::string& path, const std::string& input_format, int k,
              const std::string& policy, const std::string& scc,
              const std::string& start) {
    Graph g = load_graph(path, input_format);
    PrintingSink sink;
    if (!start.empty()) {
        auto s = g.find(start);
        if (!s) throw Usage{"unknown start node " + start};
        search_from(g, *s, k, to_policy(policy), &sink);
    } else {
        enumerate_cycles(g, k, to_policy(policy), {to_scc_mode(scc), &sink});
    }
    return 0;
}

int run_compare(const std::string& path, const std::string& input_format,
                int k, const std::string& policy, const std::string& scc) {
    Graph g = load_graph(path, input_format);
    auto d = diff_test(g, k, to_policy(policy), to_scc_mode(scc));
    if (d) {
        std::cout << d->to_json() << '\n';
        return 1;
    }
    std::cout << "ok: enumerator matches reference, "
              << count_cycles(g, k) << " cycles\n";
    return 0;
}

int run_mine(int max_nodes, std::vector<int> k_values, long long budget,
             int permutations, std::uint64_t permutation_seed) {
    MinerOptions opts;
    opts.max_nodes = max_nodes;
    if (!k_values.empty()) opts.k_values = std::move(k_values);
    opts.budget = budget;
    opts.permutations_per_graph = permutations;
    opts.permutation_seed = permutation_seed;
    opts.on_found = [](const Discrepancy& d, long long instance) {
        nlohmann::json j = nlohmann::json::parse(d.to_json());
        j["instance"] = instance;
        std::cout << j.dump() << '\n';
    };
    MinerResult r = mine_counterexamples(opts);
    std::cerr << "tested " << r.instances_tested << " instances over "
              << r.subsets_enumerated << " edge subsets, found "
              << r.discrepancies.size() << '\n';
    return 0;
}

int run_probe(const std::vector<std::string>& paths,
              const std::string& input_format, int k,
              const std::string& policy) {
    std::vector<Graph> graphs;
    graphs.reserve(paths.size());
    for (const auto& path : paths)
        graphs.push_back(load_graph(path, input_format));
    ComplexityReport report =
        complexity_probe(graphs, k, to_policy(policy));
    std::cout << report.to_json() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded-length simple cycle enumerator"};
    app.set_version_flag("--version", "kcycles 1.0.0");
    app.require_subcommand(1);

    std::string path;
    std::vector<std::string> paths;
    std::string input_format = "auto";
    std::string policy = "revised";
    std::string scc = "scc";
    std::string format = "text";
    std::string start;
    int k = 0;
    int max_nodes = 5;
    std::vector<int> k_values;
    long long budget = 1000000;
    int permutations = 0;
    std::uint64_t permutation_seed = 1;

    const auto policy_check = CLI::IsMember({"original", "revised"});
    const auto scc_check = CLI::IsMember({"scc", "whole"});
    const auto input_check = CLI::IsMember({"auto", "adjlist", "edgelist"});

    CLI::App* enumerate = app.add_subcommand("enumerate", "list cycles of length <= k");
    enumerate->add_option("input", path, "graph file, - for stdin")->required();
    enumerate->add_option("-k,--k", k, "length bound")->required()
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--policy", policy, "relaxation policy")->check(policy_check);
    enumerate->add_option("--scc-mode", scc, "per-start pruning")->check(scc_check);
    enumerate->add_option("--format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    enumerate->add_option("--input-format", input_format, "graph file format")
        ->check(input_check);

    CLI::App* trace = app.add_subcommand("trace", "print the search event log");
    trace->add_option("input", path, "graph file, - for stdin")->required();
    trace->add_option("-k,--k", k, "length bound")->required()
        ->check(CLI::PositiveNumber);
    trace->add_option("--policy", policy, "relaxation policy")->check(policy_check);
    trace->add_option("--scc-mode", scc, "per-start pruning")->check(scc_check);
    trace->add_option("--start", start,
                      "search this start only, whole graph, no start removal");
    trace->add_option("--input-format", input_format, "graph file format")
        ->check(input_check);

    CLI::App* compare = app.add_subcommand(
        "compare", "diff a policy against the reference enumerator");
    std::string compare_policy = "original";  // the suspect policy by default
    compare->add_option("input", path, "graph file, - for stdin")->required();
    compare->add_option("-k,--k", k, "length bound")->required()
        ->check(CLI::PositiveNumber);
    compare->add_option("--policy", compare_policy, "relaxation policy")
        ->check(policy_check);
    compare->add_option("--scc-mode", scc, "per-start pruning")->check(scc_check);
    compare->add_option("--input-format", input_format, "graph file format")
        ->check(input_check);

    CLI::App* mine = app.add_subcommand(
        "mine", "search small digraphs for cycles the original policy drops");
    mine->add_option("--max-nodes", max_nodes, "largest node count, capped at 5")
        ->check(CLI::Range(2, 5));
    mine->add_option("-k,--k", k_values, "length bounds to test, repeatable");
    mine->add_option("--budget", budget, "instances to test before stopping")
        ->check(CLI::PositiveNumber);
    mine->add_option("--permutations", permutations,
                     "extra shuffled-adjacency instances per graph");
    mine->add_option("--permutation-seed", permutation_seed, "shuffle seed");

    CLI::App* probe = app.add_subcommand(
        "probe", "report work counters against the cost model");
    probe->add_option("inputs", paths, "graph files")->required();
    probe->add_option("-k,--k", k, "length bound")->required()
        ->check(CLI::PositiveNumber);
    probe->add_option("--policy", policy, "relaxation policy")->check(policy_check);
    probe->add_option("--input-format", input_format, "graph file format")
        ->check(input_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enumerate)
            return run_enumerate(path, input_format, k, policy, scc, format);
        if (*trace) return run_trace(path, input_format, k, policy, scc, start);
        if (*compare)
            return run_compare(path, input_format, k, compare_policy, scc);
        if (*mine)
            return run_mine(max_nodes, k_values, budget, permutations,
                            permutation_seed);
        if (*probe) return run_probe(paths, input_format, k, policy);
    } catch (const Usage& u) {
        std::cerr << "error: " << u.message << '\n';
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
