#pragma once

#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kcycles {

// Dense node index, valid only for the graph value that produced it.
// Derived graphs (remove_node, induced_subgraph) reindex their nodes.
using NodeId = int;

// Extended-integer infinity used for locks and backward distances.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Raised by the text parsers. Line numbers are 1-based and also appear in
// the message text.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line)
        : std::runtime_error(msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Directed graph with insertion-ordered successor lists. Successor order is
// part of the value: two graphs with the same edges in a different order
// compare unequal, and every transformation that keeps an edge keeps its
// position. Parallel edges are rejected, self-loops are allowed.
//
// Node order is fixed at construction: nodes that appear as a source (line
// head in an adjacency list, edge tail in an edge list) come first, in
// order of first appearance; nodes that only ever appear as targets follow,
// again in order of first appearance. Graphs are treated as immutable once
// built; the mutators below exist for builders and parsers.
class Graph {
public:
    // Returns the id for label, appending a new node if needed.
    NodeId intern(std::string_view label);
    std::optional<NodeId> find(std::string_view label) const;

    void add_edge(NodeId u, NodeId v);
    bool has_edge(NodeId u, NodeId v) const;

    int node_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return edge_count_; }
    const std::string& label(NodeId v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<NodeId>& successors(NodeId v) const { return succ_.at(v); }

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<NodeId>> succ_;
    int edge_count_ = 0;
};

// Adjacency list: each nonempty line is a source token followed by its
// successors in order. Repeated source lines append to the same list.
// A duplicate edge anywhere is a parse_error naming the offending line.
Graph parse_adjlist(std::string_view text);

// Edge list: each nonempty line is exactly "u v".
Graph parse_edgelist(std::string_view text);

// Auto-detection used by callers that accept either format: a first
// nonempty line of exactly two tokens reads as an edge list, anything else
// as an adjacency list. (The two formats agree on all-two-token inputs.)
Graph parse_graph(std::string_view text);

// One line per node in graph order; parse_adjlist(to_adjlist(g)) == g.
std::string to_adjlist(const Graph& g);

Graph remove_node(const Graph& g, NodeId v);
Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

// Partition into strongly connected components. Components are ordered by
// their smallest node id; nodes inside a component keep graph order.
std::vector<std::vector<NodeId>> strongly_connected_components(const Graph& g);

}  // namespace kcycles
