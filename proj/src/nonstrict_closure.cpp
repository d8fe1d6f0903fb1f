#include "journey/nonstrict_closure.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace journey {
namespace {

// Out-adjacency of one snapshot in compressed row form.
struct Adjacency {
    std::vector<std::uint32_t> offsets;
    std::vector<VertexId> targets;
    std::vector<VertexId> sources;  // vertices with at least one outgoing arc, ascending

    Adjacency(const Snapshot& snap, std::size_t n) : offsets(n + 1, 0), targets(snap.arcs.size()) {
        for (const auto& arc : snap.arcs) {
            if (arc.src >= n || arc.dst >= n) {
                throw std::out_of_range("step " + std::to_string(snap.step) +
                                        ": arc endpoint out of range for n=" + std::to_string(n));
            }
            ++offsets[arc.src + 1];
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (offsets[v + 1] != 0) {
                sources.push_back(static_cast<VertexId>(v));
            }
            offsets[v + 1] += offsets[v];
        }
        auto fill = offsets;
        for (const auto& arc : snap.arcs) {
            targets[fill[arc.src]++] = arc.dst;
        }
    }
};

// Visited marks are epoch-stamped so a traversal never pays O(n) to reset.
struct Traversal {
    std::vector<std::uint32_t> stamp;
    std::vector<VertexId> queue;
    std::uint32_t epoch = 0;

    explicit Traversal(std::size_t n) : stamp(n, 0) {}

    std::uint64_t run(const Adjacency& adj, VertexId source, std::vector<Arc>& out) {
        if (++epoch == 0) {
            std::fill(stamp.begin(), stamp.end(), 0);
            epoch = 1;
        }
        std::uint64_t touches = 0;
        const auto first = out.size();
        queue.clear();
        queue.push_back(source);
        stamp[source] = epoch;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto x = queue[head];
            for (auto i = adj.offsets[x]; i < adj.offsets[x + 1]; ++i) {
                ++touches;
                const auto w = adj.targets[i];
                if (stamp[w] != epoch) {
                    stamp[w] = epoch;
                    queue.push_back(w);
                    out.push_back({source, w});
                }
            }
        }
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
        return touches;
    }
};

}  // namespace

ClosedSnapshot static_closure(const Snapshot& snap, std::size_t n, Execution exec,
                              std::uint64_t* arc_touches) {
    const Adjacency adj(snap, n);
    ClosedSnapshot closed;
    closed.step = snap.step;
    std::uint64_t touches = 0;
    const auto sources = static_cast<std::ptrdiff_t>(adj.sources.size());

    if (exec == Execution::serial || sources < 2) {
        Traversal traversal(n);
        for (auto s : adj.sources) {
            touches += traversal.run(adj, s, closed.arcs);
        }
    } else {
        std::vector<std::vector<Arc>> per_source(adj.sources.size());
#pragma omp parallel reduction(+ : touches)
        {
            Traversal traversal(n);
#pragma omp for schedule(dynamic, 4)
            for (std::ptrdiff_t i = 0; i < sources; ++i) {
                const auto idx = static_cast<std::size_t>(i);
                touches += traversal.run(adj, adj.sources[idx], per_source[idx]);
            }
        }
        std::size_t total = 0;
        for (const auto& part : per_source) {
            total += part.size();
        }
        closed.arcs.reserve(total);
        for (const auto& part : per_source) {
            closed.arcs.insert(closed.arcs.end(), part.begin(), part.end());
        }
    }
    if (arc_touches != nullptr) {
        *arc_touches += touches;
    }
    return closed;
}

Closure nonstrict_closure(SnapshotSource& source, const RunOptions& options) {
    const auto n = source.vertex_count();
    PredecessorState state(n);
    std::optional<ParamsAccumulator> params;
    if (options.stats != nullptr) {
        params.emplace(n);
    }
    std::uint64_t touches = 0;
    std::size_t peak_closed = 0;
    std::optional<Step> stop_step;
    if (state.is_complete()) {
        stop_step = 0;
    }
    if (!(options.early_stop && stop_step)) {
        while (const auto* snap = source.next()) {
            if (snap->step != state.current_step() + 1) {
                throw std::invalid_argument("out-of-order snapshot: got step " +
                                            std::to_string(snap->step) + ", expected " +
                                            std::to_string(state.current_step() + 1));
            }
            const auto closed = static_closure(*snap, n, options.execution, &touches);
            peak_closed = std::max(peak_closed, closed.arcs.size());
            state.process_step(closed, options.execution);
            if (params) {
                params->add(*snap);
            }
            if (options.on_step) {
                options.on_step(state, closed);
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
        stats.traversal_arc_touches = touches;
        stats.peak_closed_arcs = peak_closed;
        stats.state_bytes = state.state_bytes();
    }
    return state.to_closure(Flavor::non_strict, stop_step);
}

Closure nonstrict_closure(const EvolvingGraph& g, const RunOptions& options) {
    GraphSource source(g);
    return nonstrict_closure(source, options);
}

Closure journey_closure(SnapshotSource& source, Flavor flavor, const RunOptions& options) {
    return flavor == Flavor::strict ? strict_closure(source, options)
                                    : nonstrict_closure(source, options);
}

Closure journey_closure(const EvolvingGraph& g, Flavor flavor, const RunOptions& options) {
    GraphSource source(g);
    return journey_closure(source, flavor, options);
}

}  // namespace journey
