#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kcycles {

enum class TraceKind {
    Push,        // frame entered: node pushed, lock set to flen
    CycleFound,  // successor closed the stack into a cycle
    RelaxCheck,  // relax entered a node, before any write
    RelaxWrite,  // relax raised the node's lock
    Blocked,     // successor not entered (lock or length bound)
    BlistAdd,    // frame failed, node recorded in a successor's blocked list
    Pop,         // frame left, carries the returned backward distance
    Halt,        // run complete
};

const char* to_string(TraceKind kind);

// One engine observation. stack is the search stack at the moment of the
// event; for Push that is the stack before the node goes on. node is the
// acting node: the frame node for Push/CycleFound/Pop, the relaxed node for
// RelaxCheck/RelaxWrite, the skipped successor for Blocked, and the list
// owner for BlistAdd. Unset values are absent; kInfinity renders as "inf".
// lock_after appears only on Push and RelaxWrite.
struct TraceEvent {
    int step = 0;
    TraceKind kind = TraceKind::Halt;
    std::vector<std::string> stack;
    std::string node;
    std::optional<int> k;
    std::optional<int> flen;
    std::optional<int> blen;
    std::optional<int> lock_before;
    std::optional<int> lock_after;

    bool operator==(const TraceEvent&) const = default;
};

class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void on_event(const TraceEvent& event) = 0;
};

class RecordingSink final : public TraceSink {
public:
    void on_event(const TraceEvent& event) override { events_.push_back(event); }
    const std::vector<TraceEvent>& events() const { return events_; }

private:
    std::vector<TraceEvent> events_;
};

std::string render_line(const TraceEvent& event);
std::string render(const std::vector<TraceEvent>& events);

// 1-based index of the first line where the renderings differ, after
// collapsing whitespace runs and dropping trailing blank lines; nullopt
// when equal.
std::optional<int> diff_traces(const std::string& a, const std::string& b);

}  // namespace kcycles
