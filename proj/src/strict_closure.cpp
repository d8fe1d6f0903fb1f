#include "journey/strict_closure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace journey {

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

PredecessorState::PredecessorState(std::size_t n)
    : pred_(n, n),
      pred_new_(n, n),
      pred_size_(n, 1),
      is_touched_(n, 0),
      slot_(n, 0),
      complete_count_(n <= 1 ? n : 0) {
    for (std::size_t v = 0; v < n; ++v) {
        pred_.set(v, v);
    }
}

std::size_t PredecessorState::max_foreign_predecessors() const noexcept {
    std::size_t best = 0;
    for (auto size : pred_size_) {
        best = std::max<std::size_t>(best, size - 1);
    }
    return best;
}

std::size_t PredecessorState::state_bytes() const noexcept {
    return pred_.bytes() + pred_new_.bytes() + pred_size_.capacity() * sizeof(std::uint32_t) +
           touched_.capacity() * sizeof(VertexId) + is_touched_.capacity() +
           slot_.capacity() * sizeof(std::uint32_t) + by_dst_.capacity() * sizeof(Arc) +
           (group_begin_.capacity() + fill_.capacity()) * sizeof(std::uint32_t);
}

void PredecessorState::check(const Snapshot& snap) const {
    if (snap.step != current_step_ + 1) {
        throw std::invalid_argument("out-of-order snapshot: got step " + std::to_string(snap.step) +
                                    ", expected " + std::to_string(current_step_ + 1));
    }
    const auto n = vertex_count();
    for (const auto& arc : snap.arcs) {
        if (arc.src >= n || arc.dst >= n) {
            throw std::out_of_range("step " + std::to_string(snap.step) + ": arc (" +
                                    std::to_string(arc.src) + ", " + std::to_string(arc.dst) +
                                    ") out of range for n=" + std::to_string(n));
        }
    }
}

void PredecessorState::process_step(const Snapshot& snap, Execution exec) {
    check(snap);
    if (exec == Execution::parallel) {
        merge_parallel(snap);
    } else {
        merge_serial(snap);
    }
    current_step_ = snap.step;
}

void PredecessorState::commit(VertexId v) {
    const auto added = bits::or_count_new(pred_.row(v), pred_new_.row(v));
    pred_new_.clear_row(v);
    is_touched_[v] = 0;
    if (added == 0) {
        return;
    }
    pred_size_[v] += static_cast<std::uint32_t>(added);
    committed_ += added;
    if (pred_size_[v] == vertex_count()) {
        ++complete_count_;
    }
}

void PredecessorState::merge_serial(const Snapshot& snap) {
    touched_.clear();
    for (const auto& [u, v] : snap.arcs) {
        offered_ += pred_size_[u];
        bits::or_andnot(pred_new_.row(v), pred_.row(u), pred_.row(v));
        if (!is_touched_[v]) {
            is_touched_[v] = 1;
            touched_.push_back(v);
        }
    }
    for (auto v : touched_) {
        commit(v);
    }
}

// Arcs are grouped by destination so every pred_new(v) has a single writer.
// Sources are only read during the merge loop, and the implicit barrier at
// its end separates it from the commit loop that rewrites pred(v).
void PredecessorState::merge_parallel(const Snapshot& snap) {
    // Counting sort by destination; group_begin_[g] .. group_begin_[g+1]
    // indexes the arcs into touched_[g].
    touched_.clear();
    for (const auto& arc : snap.arcs) {
        if (!is_touched_[arc.dst]) {
            is_touched_[arc.dst] = 1;
            touched_.push_back(arc.dst);
        }
    }
    std::sort(touched_.begin(), touched_.end());
    group_begin_.assign(touched_.size() + 1, 0);
    for (std::size_t g = 0; g < touched_.size(); ++g) {
        slot_[touched_[g]] = static_cast<std::uint32_t>(g);
        is_touched_[touched_[g]] = 0;
    }
    for (const auto& arc : snap.arcs) {
        ++group_begin_[slot_[arc.dst] + 1];
    }
    for (std::size_t g = 0; g < touched_.size(); ++g) {
        group_begin_[g + 1] += group_begin_[g];
    }
    by_dst_.resize(snap.arcs.size());
    fill_.assign(group_begin_.begin(), group_begin_.end() - 1);
    for (const auto& arc : snap.arcs) {
        by_dst_[fill_[slot_[arc.dst]]++] = arc;
    }
    const auto& group_begin = group_begin_;
    const auto groups = static_cast<std::ptrdiff_t>(touched_.size());

    std::uint64_t offered = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : offered)
    for (std::ptrdiff_t g = 0; g < groups; ++g) {
        const auto v = touched_[static_cast<std::size_t>(g)];
        auto buffer = pred_new_.row(v);
        const auto own = pred_.row(v);
        for (auto i = group_begin[static_cast<std::size_t>(g)];
             i < group_begin[static_cast<std::size_t>(g) + 1]; ++i) {
            const auto u = by_dst_[i].src;
            offered += pred_size_[u];
            bits::or_andnot(buffer, pred_.row(u), own);
        }
    }

    std::uint64_t committed = 0;
    std::size_t completed = 0;
    const auto n = vertex_count();
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : committed, completed)
    for (std::ptrdiff_t g = 0; g < groups; ++g) {
        const auto v = touched_[static_cast<std::size_t>(g)];
        const auto added = bits::or_count_new(pred_.row(v), pred_new_.row(v));
        pred_new_.clear_row(v);
        if (added != 0) {
            pred_size_[v] += static_cast<std::uint32_t>(added);
            committed += added;
            if (pred_size_[v] == n) {
                ++completed;
            }
        }
    }
    offered_ += offered;
    committed_ += committed;
    complete_count_ += completed;
}

Closure PredecessorState::to_closure(Flavor flavor, std::optional<Step> stop_step) const {
    return Closure(pred_, flavor, stop_step);
}

Closure strict_closure(SnapshotSource& source, const RunOptions& options) {
    const auto n = source.vertex_count();
    PredecessorState state(n);
    std::optional<ParamsAccumulator> params;
    if (options.stats != nullptr) {
        params.emplace(n);
    }
    std::optional<Step> stop_step;
    if (state.is_complete()) {
        stop_step = 0;
    }
    if (!(options.early_stop && stop_step)) {
        while (const auto* snap = source.next()) {
            state.process_step(*snap, options.execution);
            if (params) {
                params->add(*snap);
            }
            if (options.on_step) {
                options.on_step(state, *snap);
            }
            if (!stop_step && state.is_complete()) {
                stop_step = snap->step;
                if (options.early_stop) {
                    break;
                }
            }
        }
    }
    if (options.stats != nullptr) {
        auto& stats = *options.stats;
        stats.steps_processed = state.current_step();
        stats.params = params->params();
        stats.offered_insertions = state.offered_insertions();
        stats.committed_insertions = state.committed_insertions();
        stats.state_bytes = state.state_bytes();
    }
    return state.to_closure(Flavor::strict, stop_step);
}

Closure strict_closure(const EvolvingGraph& g, const RunOptions& options) {
    GraphSource source(g);
    return strict_closure(source, options);
}

}  // namespace journey
