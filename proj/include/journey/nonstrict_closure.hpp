#ifndef JOURNEY_NONSTRICT_CLOSURE_HPP_
#define JOURNEY_NONSTRICT_CLOSURE_HPP_

#include <cstddef>
#include <cstdint>

#include "journey/closure.hpp"
#include "journey/execution.hpp"
#include "journey/graph.hpp"
#include "journey/strict_closure.hpp"

namespace journey {

// Snapshot whose arc set is transitively closed as a static relation, without
// self-arcs. Arcs are sorted.
struct ClosedSnapshot : Snapshot {};

/// Path reachability inside one snapshot: (u, v) is kept iff u != v and v is
/// reachable from u using snap.arcs alone. One BFS is run per vertex with an
/// outgoing arc. `arc_touches`, when given, accumulates the arcs scanned.
ClosedSnapshot static_closure(const Snapshot& snap, std::size_t n,
                              Execution exec = Execution::serial,
                              std::uint64_t* arc_touches = nullptr);

/// Non-strict journey closure: every snapshot is closed statically, then fed
/// to the strict predecessor engine. Early stop behaves as in strict_closure.
Closure nonstrict_closure(SnapshotSource& source, const RunOptions& options = {});
Closure nonstrict_closure(const EvolvingGraph& g, const RunOptions& options = {});

// Dispatches on flavor.
Closure journey_closure(SnapshotSource& source, Flavor flavor, const RunOptions& options = {});
Closure journey_closure(const EvolvingGraph& g, Flavor flavor, const RunOptions& options = {});

}  // namespace journey

#endif  // JOURNEY_NONSTRICT_CLOSURE_HPP_
