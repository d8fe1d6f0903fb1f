#include "journey/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace journey {

const char* to_string(Flavor flavor) noexcept {
    return flavor == Flavor::strict ? "strict" : "non-strict";
}

ParamsAccumulator::ParamsAccumulator(std::size_t n) : seen_(n, n) {}

void ParamsAccumulator::add(const Snapshot& snap) {
    ++params_.k;
    params_.mu = std::max(params_.mu, snap.arcs.size());
    for (const auto& arc : snap.arcs) {
        if (!seen_.test(arc.src, arc.dst)) {
            seen_.set(arc.src, arc.dst);
            ++params_.m;
        }
    }
}

GraphParams compute_params(const EvolvingGraph& g) {
    ParamsAccumulator acc(g.n);
    for (const auto& snap : g.snapshots) {
        acc.add(snap);
    }
    return acc.params();
}

void validate(const EvolvingGraph& g) {
    for (std::size_t i = 0; i < g.snapshots.size(); ++i) {
        const auto& snap = g.snapshots[i];
        if (snap.step != i + 1) {
            throw std::invalid_argument("snapshot " + std::to_string(i) + " has step " +
                                        std::to_string(snap.step) + ", expected " +
                                        std::to_string(i + 1));
        }
        auto arcs = snap.arcs;
        for (const auto& arc : arcs) {
            if (arc.src >= g.n || arc.dst >= g.n) {
                throw std::invalid_argument("step " + std::to_string(snap.step) +
                                            ": arc endpoint out of range");
            }
            if (arc.src == arc.dst) {
                throw std::invalid_argument("step " + std::to_string(snap.step) + ": self-loop");
            }
        }
        std::sort(arcs.begin(), arcs.end());
        if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
            throw std::invalid_argument("step " + std::to_string(snap.step) + ": duplicate arc");
        }
    }
}

EvolvingGraph collect(SnapshotSource& source) {
    EvolvingGraph g;
    g.n = source.vertex_count();
    while (const auto* snap = source.next()) {
        g.snapshots.push_back(*snap);
    }
    return g;
}

EvolvingGraph prefix(const EvolvingGraph& g, std::size_t steps) {
    EvolvingGraph out;
    out.n = g.n;
    steps = std::min(steps, g.snapshots.size());
    out.snapshots.assign(g.snapshots.begin(), g.snapshots.begin() + static_cast<std::ptrdiff_t>(steps));
    return out;
}

}  // namespace journey
