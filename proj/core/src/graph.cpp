#include "kcycles/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace kcycles {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    for (auto& line : lines) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    }
    return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) toks.push_back(line.substr(start, i - start));
    }
    return toks;
}

[[noreturn]] void duplicate_edge(const Graph& g, NodeId u, NodeId v, int line_no) {
    throw parse_error("duplicate edge " + g.label(u) + "->" + g.label(v) +
                          " at line " + std::to_string(line_no),
                      line_no);
}

}  // namespace

NodeId Graph::intern(std::string_view label) {
    for (NodeId v = 0; v < node_count(); ++v) {
        if (labels_[v] == label) return v;
    }
    labels_.emplace_back(label);
    succ_.emplace_back();
    return node_count() - 1;
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    for (NodeId v = 0; v < node_count(); ++v) {
        if (labels_[v] == label) return v;
    }
    return std::nullopt;
}

void Graph::add_edge(NodeId u, NodeId v) {
    if (u < 0 || u >= node_count() || v < 0 || v >= node_count())
        throw std::invalid_argument("add_edge: node id out of range");
    if (has_edge(u, v))
        throw std::invalid_argument("add_edge: duplicate edge " + labels_[u] +
                                    "->" + labels_[v]);
    succ_[u].push_back(v);
    ++edge_count_;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u < 0 || u >= node_count() || v < 0 || v >= node_count()) return false;
    const auto& s = succ_[u];
    return std::find(s.begin(), s.end(), v) != s.end();
}

Graph parse_adjlist(std::string_view text) {
    Graph g;
    auto lines = split_lines(text);
    // Sources first so that node order does not depend on where successor
    // tokens happen to sit.
    for (const auto& line : lines) {
        auto toks = tokenize(line);
        if (!toks.empty()) g.intern(toks[0]);
    }
    int line_no = 0;
    for (const auto& line : lines) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        NodeId u = *g.find(toks[0]);
        for (std::size_t i = 1; i < toks.size(); ++i) {
            NodeId v = g.intern(toks[i]);
            if (g.has_edge(u, v)) duplicate_edge(g, u, v, line_no);
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph parse_edgelist(std::string_view text) {
    Graph g;
    auto lines = split_lines(text);
    int line_no = 0;
    for (const auto& line : lines) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw parse_error("expected \"u v\" at line " + std::to_string(line_no),
                              line_no);
        g.intern(toks[0]);
    }
    line_no = 0;
    for (const auto& line : lines) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        NodeId u = *g.find(toks[0]);
        NodeId v = g.intern(toks[1]);
        if (g.has_edge(u, v)) duplicate_edge(g, u, v, line_no);
        g.add_edge(u, v);
    }
    return g;
}

Graph parse_graph(std::string_view text) {
    for (const auto& line : split_lines(text)) {
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        return toks.size() == 2 ? parse_edgelist(text) : parse_adjlist(text);
    }
    return Graph{};
}

std::string to_adjlist(const Graph& g) {
    std::string out;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out += g.label(v);
        for (NodeId w : g.successors(v)) {
            out += ' ';
            out += g.label(w);
        }
        out += '\n';
    }
    return out;
}

Graph remove_node(const Graph& g, NodeId v) {
    if (v < 0 || v >= g.node_count())
        throw std::invalid_argument("remove_node: unknown node");
    Graph out;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (u != v) out.intern(g.label(u));
    }
    auto remap = [v](NodeId x) { return x < v ? x : x - 1; };
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (u == v) continue;
        for (NodeId w : g.successors(u)) {
            if (w != v) out.add_edge(remap(u), remap(w));
        }
    }
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
    std::vector<char> mask(g.node_count(), 0);
    for (NodeId v : keep) {
        if (v < 0 || v >= g.node_count())
            throw std::invalid_argument("induced_subgraph: unknown node");
        mask[v] = 1;
    }
    Graph out;
    std::vector<NodeId> remap(g.node_count(), -1);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (mask[v]) remap[v] = out.intern(g.label(v));
    }
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (!mask[u]) continue;
        for (NodeId w : g.successors(u)) {
            if (mask[w]) out.add_edge(remap[u], remap[w]);
        }
    }
    return out;
}

namespace {

struct TarjanState {
    const Graph& g;
    std::vector<int> index;
    std::vector<int> lowlink;
    std::vector<char> on_stack;
    std::vector<NodeId> stack;
    int next_index = 0;
    std::vector<std::vector<NodeId>> comps;
};

void tarjan_dfs(TarjanState& st, NodeId v) {
    st.index[v] = st.lowlink[v] = st.next_index++;
    st.stack.push_back(v);
    st.on_stack[v] = 1;
    for (NodeId w : st.g.successors(v)) {
        if (st.index[w] < 0) {
            tarjan_dfs(st, w);
            st.lowlink[v] = std::min(st.lowlink[v], st.lowlink[w]);
        } else if (st.on_stack[w]) {
            st.lowlink[v] = std::min(st.lowlink[v], st.index[w]);
        }
    }
    if (st.lowlink[v] == st.index[v]) {
        std::vector<NodeId> comp;
        NodeId w;
        do {
            w = st.stack.back();
            st.stack.pop_back();
            st.on_stack[w] = 0;
            comp.push_back(w);
        } while (w != v);
        st.comps.push_back(std::move(comp));
    }
}

}  // namespace

std::vector<std::vector<NodeId>> strongly_connected_components(const Graph& g) {
    TarjanState st{g,
                   std::vector<int>(g.node_count(), -1),
                   std::vector<int>(g.node_count(), -1),
                   std::vector<char>(g.node_count(), 0),
                   {}};
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (st.index[v] < 0) tarjan_dfs(st, v);
    }
    for (auto& comp : st.comps) std::sort(comp.begin(), comp.end());
    std::sort(st.comps.begin(), st.comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return st.comps;
}

}  // namespace kcycles
