#include "kcycles/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace kcycles {

bool CycleSet::contains(const Cycle& canonical_cycle) const {
    return std::binary_search(cycles.begin(), cycles.end(), canonical_cycle);
}

namespace {

struct Dfs {
    const Graph& g;
    int k;
    NodeId start;
    std::vector<char> on_path;
    std::vector<NodeId> path;
    std::vector<Cycle>& out;

    // len is the edge count from start to v. Recursion only extends while
    // the closing edge could still fit, so no emitted cycle exceeds k.
    void run(NodeId v, int len) {
        for (NodeId w : g.successors(v)) {
            if (w == start) {
                bool minimal = true;
                for (NodeId u : path) {
                    if (u < start) minimal = false;
                }
                if (minimal) {
                    Cycle c;
                    c.nodes = path;
                    c.nodes.push_back(start);
                    out.push_back(std::move(c));
                }
            } else if (!on_path[w] && len + 1 < k) {
                on_path[w] = 1;
                path.push_back(w);
                run(w, len + 1);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    }
};

}  // namespace

CycleSet brute_force_cycles(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("brute_force_cycles: k must be >= 1");
    CycleSet set;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        Dfs dfs{g, k, s, std::vector<char>(g.node_count(), 0), {}, set.cycles};
        dfs.on_path[s] = 1;
        dfs.path.push_back(s);
        dfs.run(s, 0);
    }
    // Emission starts at the smallest node of each cycle, so the cycles are
    // canonical and pairwise distinct already; sort for set semantics.
    std::sort(set.cycles.begin(), set.cycles.end());
    for (const Cycle& c : set.cycles) ++set.by_length[c.length()];
    return set;
}

long long count_cycles(const Graph& g, int k) {
    return static_cast<long long>(brute_force_cycles(g, k).cycles.size());
}

}  // namespace kcycles
