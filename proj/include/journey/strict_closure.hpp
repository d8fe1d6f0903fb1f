#ifndef JOURNEY_STRICT_CLOSURE_HPP_
#define JOURNEY_STRICT_CLOSURE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "journey/bit_matrix.hpp"
#include "journey/closure.hpp"
#include "journey/execution.hpp"
#include "journey/graph.hpp"

namespace journey {

/**
 * Predecessor-set propagation over a stream of snapshots.
 *
 * pred(v) holds every u with a strict journey u -> v over the steps processed
 * so far (v itself included). Within a step, arc (u, v) offers pred(u) as it
 * stood at the end of the previous step; offers land in the buffer
 * pred_new(v) and are committed only once every arc of the step has been
 * seen, so a single step never chains two arcs.
 */
class PredecessorState {
 public:
    explicit PredecessorState(std::size_t n);

    // Throws std::invalid_argument if snap.step != current_step() + 1 and
    // std::out_of_range for an endpoint >= n. The state is unchanged on throw.
    void process_step(const Snapshot& snap, Execution exec = Execution::serial);

    std::size_t vertex_count() const noexcept { return pred_.rows(); }
    Step current_step() const noexcept { return current_step_; }
    std::size_t complete_count() const noexcept { return complete_count_; }
    bool is_complete() const noexcept { return complete_count_ == vertex_count(); }

    bool has_predecessor(VertexId v, VertexId u) const noexcept { return pred_.test(v, u); }
    std::size_t predecessor_count(VertexId v) const noexcept { return pred_size_[v]; }
    // max over v of |pred(v) \ {v}|.
    std::size_t max_foreign_predecessors() const noexcept;
    // Buffered, not yet committed predecessors; empty at every step boundary.
    std::size_t pending_count(VertexId v) const noexcept { return pred_new_.count(v); }

    // Sum over processed arcs (u, v) of |pred(u)|: elements offered for insertion.
    std::uint64_t offered_insertions() const noexcept { return offered_; }
    // Elements actually added to some pred(v).
    std::uint64_t committed_insertions() const noexcept { return committed_; }

    // Bytes held by the state: both bit matrices plus per-vertex bookkeeping.
    std::size_t state_bytes() const noexcept;

    Closure to_closure(Flavor flavor, std::optional<Step> stop_step) const;

 private:
    void check(const Snapshot& snap) const;
    void merge_serial(const Snapshot& snap);
    void merge_parallel(const Snapshot& snap);
    void commit(VertexId v);

    BitMatrix pred_;
    BitMatrix pred_new_;
    std::vector<std::uint32_t> pred_size_;
    std::vector<VertexId> touched_;
    std::vector<std::uint8_t> is_touched_;
    // Scratch for the parallel kernel.
    std::vector<std::uint32_t> slot_;
    std::vector<Arc> by_dst_;
    std::vector<std::uint32_t> group_begin_;
    std::vector<std::uint32_t> fill_;
    std::size_t complete_count_ = 0;
    Step current_step_ = 0;
    std::uint64_t offered_ = 0;
    std::uint64_t committed_ = 0;
};

struct RunStats {
    std::size_t steps_processed = 0;
    GraphParams params;  // over the processed prefix
    std::uint64_t offered_insertions = 0;
    std::uint64_t committed_insertions = 0;
    // Arc visits spent in per-step static closures (non-strict only).
    std::uint64_t traversal_arc_touches = 0;
    std::size_t peak_closed_arcs = 0;
    std::size_t state_bytes = 0;
};

struct RunOptions {
    bool early_stop = false;
    Execution execution = Execution::serial;
    // Called after each committed step.
    std::function<void(const PredecessorState&, const Snapshot&)> on_step;
    RunStats* stats = nullptr;
};

/// Strict journey closure of the stream. With early_stop, reading stops at
/// the first step after which every vertex has n predecessors.
Closure strict_closure(SnapshotSource& source, const RunOptions& options = {});
Closure strict_closure(const EvolvingGraph& g, const RunOptions& options = {});

}  // namespace journey

#endif  // JOURNEY_STRICT_CLOSURE_HPP_
