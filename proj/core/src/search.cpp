#include "kcycles/search.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "kcycles/graph.hpp"

namespace kcycles {

void RunCounters::absorb(const RunCounters& other) {
    edge_visits += other.edge_visits;
    lock_writes += other.lock_writes;
    relax_calls += other.relax_calls;
    blist_adds += other.blist_adds;
    cycles_found += other.cycles_found;
    max_lock_decrease_run =
        std::max(max_lock_decrease_run, other.max_lock_decrease_run);
}

SearchState make_search_state(const Graph& gs, int k, RelaxPolicy policy,
                              TraceSink* sink) {
    if (k < 1) throw std::invalid_argument("search: k must be >= 1");
    SearchState st;
    st.graph = &gs;
    st.k = k;
    st.policy = policy;
    st.on_stack.assign(gs.node_count(), 0);
    st.lock.assign(gs.node_count(), kInfinity);
    st.blist.assign(gs.node_count(), {});
    st.decrease_run.assign(gs.node_count(), 0);
    st.sink = sink;
    return st;
}

namespace {

void write_lock(SearchState& st, NodeId v, int value) {
    ++st.counters.lock_writes;
    const int old = st.lock[v];
    st.lock[v] = value;
    if (value == kInfinity) {
        st.decrease_run[v] = 0;
    } else if (value < old) {
        ++st.decrease_run[v];
        st.counters.max_lock_decrease_run = std::max(
            st.counters.max_lock_decrease_run,
            static_cast<long long>(st.decrease_run[v]));
    }
}

std::vector<std::string> stack_labels(const SearchState& st) {
    std::vector<std::string> labels;
    labels.reserve(st.stack.size());
    for (NodeId v : st.stack) labels.push_back(st.graph->label(v));
    return labels;
}

TraceEvent event(SearchState& st, TraceKind kind, NodeId node) {
    TraceEvent e;
    e.step = st.next_step++;
    e.kind = kind;
    e.stack = stack_labels(st);
    e.node = st.graph->label(node);
    return e;
}

void emit_push(SearchState& st, NodeId v, int flen) {
    if (!st.sink) return;
    auto e = event(st, TraceKind::Push, v);
    e.k = st.k;
    e.flen = flen;
    e.lock_after = flen;
    st.sink->on_event(e);
}

void emit_cycle(SearchState& st, NodeId v) {
    if (!st.sink) return;
    auto e = event(st, TraceKind::CycleFound, v);
    e.blen = 1;
    st.sink->on_event(e);
}

void emit_blocked(SearchState& st, NodeId w, int flen) {
    if (!st.sink) return;
    auto e = event(st, TraceKind::Blocked, w);
    e.k = st.k;
    e.flen = flen;
    e.lock_before = st.lock[w];
    st.sink->on_event(e);
}

void emit_relax_check(SearchState& st, NodeId u, int blen, int before) {
    if (!st.sink) return;
    auto e = event(st, TraceKind::RelaxCheck, u);
    e.k = st.k;
    e.blen = blen;
    e.lock_before = before;
    st.sink->on_event(e);
}

void emit_relax_write(SearchState& st, NodeId u, int blen) {
    if (!st.sink) return;
    auto e = event(st, TraceKind::RelaxWrite, u);
    e.k = st.k;
    e.blen = blen;
    e.lock_after = st.lock[u];
    st.sink->on_event(e);
}

void emit_blist_add(SearchState& st, NodeId w) {
    if (!st.sink) return;
    st.sink->on_event(event(st, TraceKind::BlistAdd, w));
}

void emit_pop(SearchState& st, NodeId v, int flen, int blen) {
    if (!st.sink) return;
    auto e = event(st, TraceKind::Pop, v);
    e.flen = flen;
    e.blen = blen;
    e.lock_before = st.lock[v];
    st.sink->on_event(e);
}

void emit_halt(TraceSink* sink, int step) {
    if (!sink) return;
    TraceEvent e;
    e.step = step;
    e.kind = TraceKind::Halt;
    sink->on_event(e);
}

}  // namespace

void relax_locks(SearchState& st, NodeId u, int blen) {
    ++st.counters.relax_calls;
    emit_relax_check(st, u, blen, st.lock[u]);
    bool raised = false;
    if (st.policy == RelaxPolicy::Original) {
        // Highest forward length still able to close through u, trusting
        // the observed blen as the true backward distance.
        const int target = st.k - blen + 1;
        if (st.lock[u] < target) {
            write_lock(st, u, target);
            raised = true;
        }
    } else {
        if (st.lock[u] != kInfinity) {
            write_lock(st, u, kInfinity);
            raised = true;
        }
    }
    if (!raised) return;
    emit_relax_write(st, u, blen);
    for (NodeId w : st.blist[u]) {
        if (!st.on_stack[w]) relax_locks(st, w, blen + 1);
    }
}

int cycle_search(SearchState& st, NodeId v, int flen) {
    assert(!st.on_stack[v]);
    int blen = kInfinity;
    emit_push(st, v, flen);
    write_lock(st, v, flen);
    st.stack.push_back(v);
    st.on_stack[v] = 1;

    for (NodeId w : st.graph->successors(v)) {
        ++st.counters.edge_visits;
        if (w == st.stack.front()) {
            Cycle c;
            c.nodes = st.stack;
            c.nodes.push_back(w);
            if (!is_valid_cycle(*st.graph, c, st.k))
                throw std::logic_error("enumerator emitted an invalid cycle");
            st.found.push_back(std::move(c));
            ++st.counters.cycles_found;
            emit_cycle(st, v);
            blen = 1;
        } else if (flen + 1 < st.lock[w] && flen + 1 < st.k) {
            const int sub = cycle_search(st, w, flen + 1);
            if (sub != kInfinity) blen = std::min(blen, sub + 1);
        } else {
            emit_blocked(st, w, flen);
        }
    }

    if (blen != kInfinity) {
        relax_locks(st, v, blen);
    } else {
        for (NodeId w : st.graph->successors(v)) {
            ++st.counters.edge_visits;
            auto& bl = st.blist[w];
            if (std::find(bl.begin(), bl.end(), v) == bl.end()) {
                bl.push_back(v);
                ++st.counters.blist_adds;
                emit_blist_add(st, w);
            }
        }
    }

    emit_pop(st, v, flen, blen);
    st.stack.pop_back();
    st.on_stack[v] = 0;
    return blen;
}

EnumerateResult search_from(const Graph& gs, NodeId s, int k,
                            RelaxPolicy policy, TraceSink* sink) {
    if (s < 0 || s >= gs.node_count())
        throw std::invalid_argument("search_from: unknown start node");
    SearchState st = make_search_state(gs, k, policy, sink);
    cycle_search(st, s, 0);
    emit_halt(sink, st.next_step);
    return {std::move(st.found), st.counters};
}

EnumerateResult enumerate_cycles(const Graph& g, int k, RelaxPolicy policy,
                                 const EnumerateOptions& opts) {
    if (k < 1) throw std::invalid_argument("enumerate_cycles: k must be >= 1");
    EnumerateResult out;
    Graph working = g;
    int step = 1;
    for (const std::string& start : g.labels()) {
        const NodeId sw = *working.find(start);
        const Graph* gs = &working;
        Graph component;
        if (opts.scc_mode == SccMode::Scc) {
            for (const auto& comp : strongly_connected_components(working)) {
                if (std::find(comp.begin(), comp.end(), sw) != comp.end()) {
                    if (comp.size() == 1 && !working.has_edge(sw, sw)) {
                        gs = nullptr;  // no cycle can pass through sw
                    } else {
                        component = induced_subgraph(working, comp);
                        gs = &component;
                    }
                    break;
                }
            }
        }
        if (gs != nullptr) {
            SearchState st = make_search_state(*gs, k, policy, opts.sink);
            st.next_step = step;
            cycle_search(st, *gs->find(start), 0);
            step = st.next_step;
            // back into g's id space
            std::vector<NodeId> remap(gs->node_count());
            for (NodeId v = 0; v < gs->node_count(); ++v)
                remap[v] = *g.find(gs->label(v));
            for (auto& c : st.found) {
                for (auto& v : c.nodes) v = remap[v];
                out.cycles.push_back(std::move(c));
            }
            out.counters.absorb(st.counters);
        }
        working = remove_node(working, sw);
    }
    emit_halt(opts.sink, step);
    return out;
}

}  // namespace kcycles
