#pragma once

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "kcycles/cycle.hpp"
#include "kcycles/graph.hpp"

namespace testsupport {

// Five-node graph on which the Original relaxation policy drops a cycle:
// at k=5 it reports ADA, ADBECA and AECA through A but never AECBDA.
// Successor order matters; keep it exactly as written.
inline constexpr const char* kCounterexampleText =
    "A D E\n"
    "B D E\n"
    "C A B\n"
    "D A B\n"
    "E C\n";

inline kcycles::Graph counterexample_graph() {
    return kcycles::parse_adjlist(kCounterexampleText);
}

// Formats each cycle against g and returns the sorted set of strings.
inline std::set<std::string> cycle_strings(const kcycles::Graph& g,
                                           const std::vector<kcycles::Cycle>& cycles) {
    std::set<std::string> out;
    for (const auto& c : cycles) out.insert(format_cycle(g, canonical(c)));
    return out;
}

// Same nodes and edges as g, with every successor list rebuilt in the
// given per-node orders (indices into the original lists).
inline kcycles::Graph reorder_successors(
    const kcycles::Graph& g, const std::vector<std::vector<int>>& orders) {
    kcycles::Graph out;
    for (const auto& label : g.labels()) out.intern(label);
    for (kcycles::NodeId u = 0; u < g.node_count(); ++u) {
        const auto& succ = g.successors(u);
        for (int idx : orders[u]) out.add_edge(u, succ[idx]);
    }
    return out;
}

// All per-node successor orderings of g (cartesian product of per-node
// permutations). Node order is untouched, so canonical forms stay
// comparable across the variants.
inline std::vector<kcycles::Graph> all_successor_orderings(const kcycles::Graph& g) {
    std::vector<std::vector<std::vector<int>>> per_node;
    for (kcycles::NodeId u = 0; u < g.node_count(); ++u) {
        std::vector<int> idx(g.successors(u).size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(idx);
        } while (std::next_permutation(idx.begin(), idx.end()));
        per_node.push_back(std::move(perms));
    }
    std::vector<kcycles::Graph> out;
    std::vector<std::vector<int>> pick(g.node_count());
    auto rec = [&](auto&& self, int u) -> void {
        if (u == g.node_count()) {
            out.push_back(reorder_successors(g, pick));
            return;
        }
        for (const auto& perm : per_node[u]) {
            pick[u] = perm;
            self(self, u + 1);
        }
    };
    rec(rec, 0);
    return out;
}

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

// Runs the command under sh with stderr folded into stdout.
inline CliResult run_command(const std::string& command) {
    CliResult r;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace testsupport
