#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kcycles/cycle.hpp"
#include "kcycles/graph.hpp"
#include "kcycles/search.hpp"

namespace kcycles {

// One graph on which an enumerator run disagreed with the reference
// enumerator. missing and spurious hold canonical cycles, sorted.
struct Discrepancy {
    Graph graph;
    int k = 0;
    std::vector<Cycle> missing;   // reference-only
    std::vector<Cycle> spurious;  // run-only

    // {"graph": [adjacency lines], "k": .., "missing": [[labels..]..],
    //  "spurious": ..} on one line.
    std::string to_json() const;
};

// Runs enumerate_cycles against brute_force_cycles and diffs the canonical
// cycle sets. nullopt when they agree.
std::optional<Discrepancy> diff_test(const Graph& g, int k, RelaxPolicy policy,
                                     SccMode scc_mode = SccMode::Scc);

struct MinerOptions {
    int max_nodes = 5;  // hard cap 5
    std::vector<int> k_values = {5};
    // Instances to diff-test before stopping; an instance is one
    // (graph, adjacency order, k) triple that passed the connectivity
    // filter. Must be >= 1.
    long long budget = 1;
    // Extra instances per graph and k with successor lists shuffled
    // (deterministically from permutation_seed, n, and the edge mask).
    int permutations_per_graph = 0;
    std::uint64_t permutation_seed = 1;
    // Called as each discrepancy is found, with the 1-based instance index.
    std::function<void(const Discrepancy&, long long)> on_found;
};

struct MinerResult {
    std::vector<Discrepancy> discrepancies;
    std::vector<long long> found_at;   // instance index per discrepancy
    long long instances_tested = 0;
    long long subsets_enumerated = 0;  // edge subsets examined, all of them
};

// Enumerates every digraph on 2..max_nodes labeled nodes (all subsets of
// the n*(n-1) loop-free ordered pairs, successor lists in ascending target
// order), keeps the strongly connected ones, and diff-tests each against
// the Original policy for every k in k_values until the budget runs out.
// Deterministic: same options, same result.
MinerResult mine_counterexamples(const MinerOptions& options);

// Each ordered pair (u, v), u != v, becomes an edge independently with
// probability p. Deterministic across platforms: a seeded std::mt19937_64
// is drawn once per pair in row-major order and the top 53 bits are
// compared against floor(p * 2^53). Labels are A..Z for n <= 26, else
// v0..v{n-1}.
Graph random_digraph(int n, double edge_probability, std::uint64_t seed);

// Work accounting across a set of runs. ratio is
// total_ops / ((cycles + 1) * k * (nodes + edges)); fitted_constant is the
// largest ratio seen. cycles is the run's own count, which the Revised
// policy makes exact.
struct ComplexityReport {
    struct Run {
        int nodes = 0;
        int edges = 0;
        int k = 0;
        long long cycles = 0;
        long long total_ops = 0;
        double ratio = 0.0;
    };
    std::vector<Run> runs;
    double fitted_constant = 0.0;

    std::string to_json() const;
};

ComplexityReport complexity_probe(std::span<const Graph> graphs, int k,
                                  RelaxPolicy policy);

}  // namespace kcycles
