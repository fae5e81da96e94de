#include "kcycles/trace.hpp"

#include <string>

#include "kcycles/graph.hpp"

namespace kcycles {

namespace {

std::string fmt_ext(int value) {
    return value == kInfinity ? "inf" : std::to_string(value);
}

bool any_multichar(const TraceEvent& e) {
    for (const auto& s : e.stack) {
        if (s.size() > 1) return true;
    }
    return e.node.size() > 1;
}

std::string join(const std::vector<std::string>& labels, bool multi) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (multi && i > 0) out += '-';
        out += labels[i];
    }
    return out;
}

}  // namespace

const char* to_string(TraceKind kind) {
    switch (kind) {
        case TraceKind::Push: return "push";
        case TraceKind::CycleFound: return "cycle_found";
        case TraceKind::RelaxCheck: return "relax_check";
        case TraceKind::RelaxWrite: return "relax_write";
        case TraceKind::Blocked: return "blocked";
        case TraceKind::BlistAdd: return "blist_add";
        case TraceKind::Pop: return "pop";
        case TraceKind::Halt: return "halt";
    }
    return "?";
}

std::string render_line(const TraceEvent& e) {
    const bool multi = any_multichar(e);
    const std::string stack = join(e.stack, multi);
    const std::string sep = multi && !e.stack.empty() ? "-" : "";
    std::string out = std::to_string(e.step) + ": ";
    switch (e.kind) {
        case TraceKind::Push:
            out += "cycle_search stack=" + stack + " v='" + e.node + "'" +
                   " k=" + fmt_ext(*e.k) + " flen=" + fmt_ext(*e.flen) +
                   ": push " + e.node + ", blen←inf, lock[" + e.node +
                   "]←" + fmt_ext(*e.lock_after);
            break;
        case TraceKind::CycleFound:
            out += "cycle_search stack=" + stack + " v='" + e.node + "'" +
                   " ##### cycle " + stack + sep + e.stack.front() +
                   " found, blen←" + fmt_ext(*e.blen) + " #####";
            break;
        case TraceKind::RelaxCheck:
            out += "relax_locks stack=" + stack + " v='" + e.node + "'" +
                   " k=" + fmt_ext(*e.k) + " blen=" + fmt_ext(*e.blen) +
                   " lock[" + e.node + "]=" + fmt_ext(*e.lock_before);
            break;
        case TraceKind::RelaxWrite: {
            out += "relax_locks stack=" + stack + " v='" + e.node + "'" +
                   " k=" + fmt_ext(*e.k) + " blen=" + fmt_ext(*e.blen) +
                   " lock[" + e.node + "]←" + fmt_ext(*e.lock_after);
            if (*e.lock_after != kInfinity && *e.blen != kInfinity &&
                *e.lock_after == *e.k - *e.blen + 1) {
                out += " (=k-blen+1)";
            }
            break;
        }
        case TraceKind::Blocked:
            out += "cycle_search stack=" + stack + " w='" + e.node + "'" +
                   " k=" + fmt_ext(*e.k) + ": blocked, lock[" + e.node +
                   "]=" + fmt_ext(*e.lock_before) + " flen+1=" +
                   fmt_ext(*e.flen + 1);
            break;
        case TraceKind::BlistAdd:
            out += "cycle_search stack=" + stack + " v='" + e.stack.back() +
                   "': Blist[" + e.node + "] += " + e.stack.back();
            break;
        case TraceKind::Pop:
            out += "cycle_search stack=" + stack + " v='" + e.node + "'" +
                   " flen=" + fmt_ext(*e.flen) + " lock[" + e.node + "]=" +
                   fmt_ext(*e.lock_before) + ": pop " + e.node +
                   ", return blen=" + fmt_ext(*e.blen);
            break;
        case TraceKind::Halt:
            out += "halt";
            break;
    }
    return out;
}

std::string render(const std::vector<TraceEvent>& events) {
    std::string out;
    for (const auto& e : events) {
        out += render_line(e);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> normalized_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    auto flush = [&] {
        // collapse whitespace runs, trim both ends
        std::string norm;
        bool pending = false;
        for (char ch : cur) {
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                pending = !norm.empty();
            } else {
                if (pending) norm += ' ';
                pending = false;
                norm += ch;
            }
        }
        lines.push_back(std::move(norm));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == '\n') {
            flush();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) flush();
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

}  // namespace

std::optional<int> diff_traces(const std::string& a, const std::string& b) {
    auto la = normalized_lines(a);
    auto lb = normalized_lines(b);
    const std::size_t common = std::min(la.size(), lb.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (la[i] != lb[i]) return static_cast<int>(i) + 1;
    }
    if (la.size() != lb.size()) return static_cast<int>(common) + 1;
    return std::nullopt;
}

}  // namespace kcycles
