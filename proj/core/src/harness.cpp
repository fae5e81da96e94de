#include "kcycles/harness.hpp"

#include <algorithm>
#include <random>

#include "json.hpp"
#include "kcycles/oracle.hpp"

namespace kcycles {

namespace {

nlohmann::json cycle_to_json(const Graph& g, const Cycle& c) {
    nlohmann::json labels = nlohmann::json::array();
    for (NodeId v : c.nodes) labels.push_back(g.label(v));
    return labels;
}

nlohmann::json adjlist_lines(const Graph& g) {
    nlohmann::json lines = nlohmann::json::array();
    std::string text = to_adjlist(g);
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<Cycle> canonical_sorted(const std::vector<Cycle>& cycles) {
    std::vector<Cycle> out;
    out.reserve(cycles.size());
    for (const Cycle& c : cycles) out.push_back(canonical(c));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::string Discrepancy::to_json() const {
    nlohmann::json j;
    j["graph"] = adjlist_lines(graph);
    j["k"] = k;
    j["missing"] = nlohmann::json::array();
    for (const Cycle& c : missing) j["missing"].push_back(cycle_to_json(graph, c));
    j["spurious"] = nlohmann::json::array();
    for (const Cycle& c : spurious) j["spurious"].push_back(cycle_to_json(graph, c));
    return j.dump();
}

std::optional<Discrepancy> diff_test(const Graph& g, int k, RelaxPolicy policy,
                                     SccMode scc_mode) {
    CycleSet expected = brute_force_cycles(g, k);
    EnumerateResult run = enumerate_cycles(g, k, policy, {scc_mode, nullptr});
    std::vector<Cycle> actual = canonical_sorted(run.cycles);

    Discrepancy d;
    d.graph = g;
    d.k = k;
    std::set_difference(expected.cycles.begin(), expected.cycles.end(),
                        actual.begin(), actual.end(),
                        std::back_inserter(d.missing));
    std::set_difference(actual.begin(), actual.end(), expected.cycles.begin(),
                        expected.cycles.end(), std::back_inserter(d.spurious));
    if (d.missing.empty() && d.spurious.empty()) return std::nullopt;
    return d;
}

namespace {

// Reachability closure over bitmask adjacency rows; cheap strongly
// connected filter so most subsets never become Graph values.
bool strongly_connected_rows(const std::vector<unsigned>& adj, int n) {
    std::vector<unsigned> reach = adj;
    for (int via = 0; via < n; ++via) {
        for (int u = 0; u < n; ++u) {
            if (reach[u] >> via & 1u) reach[u] |= reach[via];
        }
    }
    const unsigned full = (1u << n) - 1u;
    for (int u = 0; u < n; ++u) {
        if ((reach[u] | (1u << u)) != full) return false;
    }
    return true;
}

Graph graph_from_rows(const std::vector<unsigned>& adj, int n) {
    Graph g;
    for (int v = 0; v < n; ++v) g.intern(std::string(1, char('A' + v)));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (adj[u] >> v & 1u) g.add_edge(u, v);
        }
    }
    return g;
}

Graph shuffled_successors(const Graph& g, std::mt19937_64& rng) {
    Graph out;
    for (const auto& label : g.labels()) out.intern(label);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        std::vector<NodeId> succ = g.successors(u);
        for (std::size_t i = succ.size(); i > 1; --i) {
            std::size_t j = rng() % i;
            std::swap(succ[i - 1], succ[j]);
        }
        for (NodeId w : succ) out.add_edge(u, w);
    }
    return out;
}

}  // namespace

MinerResult mine_counterexamples(const MinerOptions& options) {
    if (options.budget < 1)
        throw std::invalid_argument("mine_counterexamples: budget must be >= 1");
    if (options.max_nodes > 5)
        throw std::invalid_argument("mine_counterexamples: max_nodes is capped at 5");
    if (options.permutations_per_graph < 0)
        throw std::invalid_argument("mine_counterexamples: negative permutation count");

    MinerResult result;
    auto test_instance = [&](const Graph& g, int k) -> bool {
        // returns false once the budget is exhausted
        if (result.instances_tested >= options.budget) return false;
        ++result.instances_tested;
        if (auto d = diff_test(g, k, RelaxPolicy::Original)) {
            result.found_at.push_back(result.instances_tested);
            if (options.on_found) options.on_found(*d, result.instances_tested);
            result.discrepancies.push_back(std::move(*d));
        }
        return true;
    };

    for (int n = 2; n <= options.max_nodes; ++n) {
        const int pair_count = n * (n - 1);
        // bit b of a mask is pair (u, v) = (b / (n-1), ...) in row-major
        // order with the diagonal skipped; ascending bits give ascending
        // targets, so adjacency order equals generation order.
        const unsigned long long mask_end = 1ull << pair_count;
        for (unsigned long long mask = 0; mask < mask_end; ++mask) {
            ++result.subsets_enumerated;
            std::vector<unsigned> adj(n, 0);
            int bit = 0;
            for (int u = 0; u < n; ++u) {
                for (int v = 0; v < n; ++v) {
                    if (u == v) continue;
                    if (mask >> bit & 1ull) adj[u] |= 1u << v;
                    ++bit;
                }
            }
            if (!strongly_connected_rows(adj, n)) continue;
            Graph g = graph_from_rows(adj, n);
            for (int k : options.k_values) {
                if (!test_instance(g, k)) return result;
                for (int p = 0; p < options.permutations_per_graph; ++p) {
                    std::mt19937_64 rng(options.permutation_seed ^
                                        (mask * 0x9E3779B97F4A7C15ull) ^
                                        (static_cast<std::uint64_t>(n) << 56) ^
                                        static_cast<std::uint64_t>(p));
                    Graph shuffled = shuffled_successors(g, rng);
                    if (!test_instance(shuffled, k)) return result;
                }
            }
        }
    }
    return result;
}

Graph random_digraph(int n, double edge_probability, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_digraph: n must be >= 0");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw std::invalid_argument("random_digraph: probability outside [0, 1]");

    Graph g;
    for (int v = 0; v < n; ++v) {
        g.intern(n <= 26 ? std::string(1, char('A' + v)) : "v" + std::to_string(v));
    }
    // One draw per ordered pair in row-major order; keep iff the top 53
    // bits fall below floor(p * 2^53). mt19937_64 output is pinned by the
    // standard, so a seed names the same graph everywhere.
    const double two53 = 9007199254740992.0;
    const std::uint64_t threshold =
        edge_probability >= 1.0 ? static_cast<std::uint64_t>(two53)
                                : static_cast<std::uint64_t>(edge_probability * two53);
    std::mt19937_64 rng(seed);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if ((rng() >> 11) < threshold) g.add_edge(u, v);
        }
    }
    return g;
}

std::string ComplexityReport::to_json() const {
    nlohmann::json j;
    j["runs"] = nlohmann::json::array();
    for (const Run& r : runs) {
        nlohmann::json run;
        run["nodes"] = r.nodes;
        run["edges"] = r.edges;
        run["k"] = r.k;
        run["cycles"] = r.cycles;
        run["total_ops"] = r.total_ops;
        run["ratio"] = r.ratio;
        j["runs"].push_back(run);
    }
    j["fitted_constant"] = fitted_constant;
    return j.dump();
}

ComplexityReport complexity_probe(std::span<const Graph> graphs, int k,
                                  RelaxPolicy policy) {
    if (graphs.empty())
        throw std::invalid_argument("complexity_probe: no graphs given");
    ComplexityReport report;
    for (const Graph& g : graphs) {
        EnumerateResult run = enumerate_cycles(g, k, policy);
        ComplexityReport::Run r;
        r.nodes = g.node_count();
        r.edges = g.edge_count();
        r.k = k;
        r.cycles = run.counters.cycles_found;
        r.total_ops = run.counters.total_ops();
        const double denom = (static_cast<double>(r.cycles) + 1.0) * k *
                             std::max(1, r.nodes + r.edges);
        r.ratio = static_cast<double>(r.total_ops) / denom;
        report.fitted_constant = std::max(report.fitted_constant, r.ratio);
        report.runs.push_back(r);
    }
    return report;
}

}  // namespace kcycles
