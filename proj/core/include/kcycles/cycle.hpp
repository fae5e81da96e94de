#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kcycles/graph.hpp"

namespace kcycles {

// Closed walk v0 .. vm with v0 == vm and v0 .. v(m-1) pairwise distinct.
// length() is the edge count m; a self-loop is the length-1 case.
struct Cycle {
    std::vector<NodeId> nodes;

    int length() const { return static_cast<int>(nodes.size()) - 1; }
    auto operator<=>(const Cycle&) const = default;
};

// Rotation that puts the smallest node id first; direction is kept.
// canonical of CADBEC(C) is ADBECA when A has the smaller id.
Cycle canonical(const Cycle& c);

// Labels joined directly ("ADA") while every label is a single character,
// with "-" between them otherwise ("v1-v2-v1").
std::string format_cycle(const Graph& g, const Cycle& c);

// Closure, simplicity, edge membership and the length bound in one check.
bool is_valid_cycle(const Graph& g, const Cycle& c, int k);

}  // namespace kcycles
