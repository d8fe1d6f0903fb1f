#ifndef JOURNEY_GRAPH_HPP_
#define JOURNEY_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "journey/bit_matrix.hpp"

namespace journey {

// Dense zero-based vertex index in [0, n).
using VertexId = std::uint32_t;

// Step index of an evolving graph; steps are numbered from 1, 0 denotes
// "before the first step".
using Step = std::uint32_t;

struct Arc {
    VertexId src = 0;
    VertexId dst = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// One G_i = (V, E_i). Arcs are distinct and never self-loops.
struct Snapshot {
    Step step = 0;
    std::vector<Arc> arcs;

    friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

// Untimed directed evolving graph over a fixed vertex set. Snapshot steps
// run 1..k contiguously; empty snapshots are allowed and count toward k.
struct EvolvingGraph {
    std::size_t n = 0;
    std::vector<Snapshot> snapshots;

    std::size_t step_count() const noexcept { return snapshots.size(); }

    friend bool operator==(const EvolvingGraph&, const EvolvingGraph&) = default;
};

enum class Flavor { strict, non_strict };

const char* to_string(Flavor flavor) noexcept;

struct GraphParams {
    std::size_t k = 0;
    std::size_t mu = 0;  // max_i |E_i|
    std::size_t m = 0;   // |union of E_i|

    friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

GraphParams compute_params(const EvolvingGraph& g);

/// Incremental k / mu / m over a stream of snapshots. Holds n^2 bits for the
/// union of arcs seen so far.
class ParamsAccumulator {
 public:
    explicit ParamsAccumulator(std::size_t n);

    void add(const Snapshot& snap);
    const GraphParams& params() const noexcept { return params_; }

 private:
    BitMatrix seen_;
    GraphParams params_;
};

/// Throws std::invalid_argument if steps are not 1..k, an endpoint is out of
/// range, an arc is a self-loop, or a snapshot holds a duplicate arc.
void validate(const EvolvingGraph& g);

/**
 * Pull-based stream of snapshots in step order. The returned pointer stays
 * valid until the next call to next(); nullptr marks the end of the stream.
 */
class SnapshotSource {
 public:
    virtual ~SnapshotSource() = default;
    virtual std::size_t vertex_count() const = 0;
    virtual const Snapshot* next() = 0;
};

// Streams a materialized graph without copying it.
class GraphSource final : public SnapshotSource {
 public:
    explicit GraphSource(const EvolvingGraph& g) : graph_(&g) {}

    std::size_t vertex_count() const override { return graph_->n; }
    const Snapshot* next() override {
        return pos_ < graph_->snapshots.size() ? &graph_->snapshots[pos_++] : nullptr;
    }

 private:
    const EvolvingGraph* graph_;
    std::size_t pos_ = 0;
};

// Drains a source into a materialized graph.
EvolvingGraph collect(SnapshotSource& source);

// First `steps` snapshots of g.
EvolvingGraph prefix(const EvolvingGraph& g, std::size_t steps);

}  // namespace journey

#endif  // JOURNEY_GRAPH_HPP_
