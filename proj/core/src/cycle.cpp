#include "kcycles/cycle.hpp"

#include <algorithm>

namespace kcycles {

Cycle canonical(const Cycle& c) {
    const auto m = c.nodes.size();
    if (m < 2) return c;
    auto first = c.nodes.begin();
    auto last = c.nodes.end() - 1;  // closing repeat excluded from the rotation
    auto min_it = std::min_element(first, last);
    Cycle out;
    out.nodes.reserve(m);
    out.nodes.insert(out.nodes.end(), min_it, last);
    out.nodes.insert(out.nodes.end(), first, min_it);
    out.nodes.push_back(*min_it);
    return out;
}

std::string format_cycle(const Graph& g, const Cycle& c) {
    bool multi = false;
    for (NodeId v : c.nodes) {
        if (g.label(v).size() > 1) multi = true;
    }
    std::string out;
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        if (multi && i > 0) out += '-';
        out += g.label(c.nodes[i]);
    }
    return out;
}

bool is_valid_cycle(const Graph& g, const Cycle& c, int k) {
    const auto m = c.nodes.size();
    if (m < 2) return false;
    if (c.nodes.front() != c.nodes.back()) return false;
    if (c.length() > k) return false;
    std::vector<char> seen(g.node_count(), 0);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        NodeId v = c.nodes[i];
        if (v < 0 || v >= g.node_count() || seen[v]) return false;
        seen[v] = 1;
        if (!g.has_edge(v, c.nodes[i + 1])) return false;
    }
    return true;
}

}  // namespace kcycles
