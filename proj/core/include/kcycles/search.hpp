#pragma once

#include <vector>

#include "kcycles/cycle.hpp"
#include "kcycles/graph.hpp"
#include "kcycles/trace.hpp"

namespace kcycles {

// The enumerator is a depth-first search with per-node numeric locks and
// blocked lists. A frame at forward length flen sets lock[v] = flen on
// entry; a successor w is entered only while flen+1 < lock[w] and
// flen+1 < k, so locks both prevent stack revisits and prune paths too
// long to close. When a frame sees a cycle it relaxes locks along the
// blocked lists so shorter approaches can revisit; the two policies below
// differ only in how far relax raises a lock.
//
// Original raises lock[u] to k - blen + 1, the highest forward length that
// could still close a cycle through u given the backward distance blen
// observed. That bound assumes the blen it saw is the best possible, which
// is wrong in general: a later, shorter approach can be locked out and a
// cycle within the bound silently lost (see the bundled counterexample
// graph). Revised discards the estimate and restores lock[u] to infinity
// outright, which costs extra revisits but never loses a cycle.
enum class RelaxPolicy {
    Original,
    Revised,
};

// Subgraph handed to each start node's search: the strongly connected
// component of the start (cycles cannot leave it), or the whole remaining
// graph, which searches dead branches too but exercises the full lock and
// blocked-list machinery.
enum class SccMode {
    Scc,
    Whole,
};

// Work counters for one run. Initialization of the per-start lock and
// blocked-list arrays is setup, not search work, and is not counted.
struct RunCounters {
    long long edge_visits = 0;   // successor examinations, both loop passes
    long long lock_writes = 0;   // push writes and relax writes
    long long relax_calls = 0;   // relax invocations, recursive ones included
    long long blist_adds = 0;    // insertions into blocked lists
    long long cycles_found = 0;
    // Longest run of strictly decreasing writes to one node's lock between
    // two relaxations to infinity; stays at k or below under Revised.
    long long max_lock_decrease_run = 0;

    long long total_ops() const {
        return edge_visits + lock_writes + relax_calls + blist_adds;
    }
    // Sums the work counters; takes the max of max_lock_decrease_run.
    void absorb(const RunCounters& other);
};

// State of one search over a fixed subgraph. Invariants while a search
// runs: stack nodes are distinct with on_stack as their membership mask;
// the node pushed at depth d had lock = d written on entry; locks are in
// [0, k] or kInfinity under Original and {0..k-1} or kInfinity under
// Revised; blocked lists only grow.
struct SearchState {
    const Graph* graph = nullptr;
    int k = 0;
    RelaxPolicy policy = RelaxPolicy::Revised;

    std::vector<NodeId> stack;
    std::vector<char> on_stack;
    std::vector<int> lock;
    std::vector<std::vector<NodeId>> blist;

    std::vector<Cycle> found;
    RunCounters counters;

    TraceSink* sink = nullptr;
    int next_step = 1;

    // strictly-decreasing write runs per node, reset by writes of infinity
    std::vector<int> decrease_run;
};

SearchState make_search_state(const Graph& gs, int k, RelaxPolicy policy,
                              TraceSink* sink = nullptr);

// One frame rooted at v with forward length flen. Emits every cycle that
// closes at the stack bottom, returns the backward distance to the nearest
// such cycle (kInfinity if none), and on failure records v in the blocked
// lists of its successors.
int cycle_search(SearchState& st, NodeId v, int flen);

// Policy-dependent lock raise for u, recursing through u's blocked list
// into nodes not on the stack. blen is the backward distance that
// triggered the relaxation; Revised keeps it in the signature but only
// tests the lock for finiteness.
void relax_locks(SearchState& st, NodeId u, int blen);

struct EnumerateOptions {
    SccMode scc_mode = SccMode::Scc;
    TraceSink* sink = nullptr;
};

struct EnumerateResult {
    // Emission order, ids in the caller's graph. With starts taken in
    // graph order every cycle is emitted already canonical.
    std::vector<Cycle> cycles;
    RunCounters counters;
};

// Full run: for each start s in graph order, search the subgraph chosen by
// scc_mode with fresh locks and blocked lists, then drop s from the
// working graph. A start in a singleton component without a self-loop is
// skipped. Emits one Halt event at the end of the whole run.
EnumerateResult enumerate_cycles(const Graph& g, int k, RelaxPolicy policy,
                                 const EnumerateOptions& opts = {});

// Single search rooted at s over gs exactly as given: no component
// pruning, no start removal. Halt is emitted when the search returns.
EnumerateResult search_from(const Graph& gs, NodeId s, int k,
                            RelaxPolicy policy, TraceSink* sink = nullptr);

}  // namespace kcycles
