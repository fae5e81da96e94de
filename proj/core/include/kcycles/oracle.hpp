#pragma once

#include <map>
#include <vector>

#include "kcycles/cycle.hpp"
#include "kcycles/graph.hpp"

namespace kcycles {

// Canonical cycles plus a per-length tally. cycles is sorted and
// duplicate-free; the tallies sum to cycles.size().
struct CycleSet {
    std::vector<Cycle> cycles;
    std::map<int, long long> by_length;

    bool contains(const Cycle& canonical_cycle) const;
};

// Reference enumerator: plain depth-first search from every start with an
// on-path marker and the length cutoff, emitting only cycles that close at
// the start while the start is the smallest node on the path. No locks, no
// blocked lists, nothing clever; exponential, for instances small enough
// to check the real enumerator against.
CycleSet brute_force_cycles(const Graph& g, int k);

long long count_cycles(const Graph& g, int k);

}  // namespace kcycles
