#ifndef JOURNEY_BASELINE_HPP_
#define JOURNEY_BASELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <vector>

#include "journey/closure.hpp"
#include "journey/execution.hpp"
#include "journey/graph.hpp"

namespace journey {

// Larger than any valid step, so "reached no later than t" is a plain <=.
inline constexpr Step kUnreachable = std::numeric_limits<Step>::max();

struct ArrivalTable {
    VertexId source = 0;
    Flavor flavor = Flavor::strict;
    // arrival[source] == 0; otherwise the first step t such that a journey
    // from source reaches v within E_1..E_t, or kUnreachable.
    std::vector<Step> arrival;

    friend bool operator==(const ArrivalTable&, const ArrivalTable&) = default;
};

/**
 * Earliest-arrival sweep from single sources. The per-step adjacency of the
 * graph is built once on construction; run() then makes one forward pass over
 * the steps, so a full closure costs n passes over every arc occurrence.
 */
class ArrivalSweeper {
 public:
    explicit ArrivalSweeper(const EvolvingGraph& g);

    std::size_t vertex_count() const noexcept { return n_; }

    // Throws std::out_of_range if source >= n.
    ArrivalTable run(VertexId source, Flavor flavor) const;

 private:
    struct StepArcs {
        std::vector<Arc> arcs;
        std::vector<std::uint32_t> offsets;  // out-adjacency, only for non-strict
        std::vector<VertexId> targets;
    };

    std::size_t n_;
    std::vector<StepArcs> steps_;
};

ArrivalTable earliest_arrival(const EvolvingGraph& g, VertexId source, Flavor flavor);

/// Closure assembled from n earliest-arrival sweeps. stop_step is the largest
/// arrival step when every pair is reachable.
Closure baseline_closure(const EvolvingGraph& g, Flavor flavor,
                         Execution exec = Execution::serial);

// Brute-force instances are capped at this many vertices.
inline constexpr std::size_t kOracleMaxVertices = 12;

/// Step-indexed dynamic program over reach sets, written independently of the
/// engines for cross-checking. Throws std::invalid_argument above the cap.
Closure oracle_reach(const EvolvingGraph& g, Flavor flavor,
                     std::size_t max_vertices = kOracleMaxVertices);

// "source=<u>" then "v t" per vertex, t=-1 when unreachable.
void write_arrival_table(std::ostream& out, const ArrivalTable& table);
ArrivalTable read_arrival_table(std::istream& in);

}  // namespace journey

#endif  // JOURNEY_BASELINE_HPP_
