#ifndef JOURNEY_TESTS_TEST_SUPPORT_HPP_
#define JOURNEY_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "journey/graph.hpp"

namespace journey::testing {

inline EvolvingGraph make_graph(std::size_t n, std::vector<std::vector<Arc>> steps) {
    EvolvingGraph g;
    g.n = n;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        g.snapshots.push_back({static_cast<Step>(i + 1), std::move(steps[i])});
    }
    return g;
}

// Each ordered pair u != v present independently with probability p per step.
inline EvolvingGraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t k, double p) {
    std::bernoulli_distribution coin(p);
    EvolvingGraph g;
    g.n = n;
    for (std::size_t i = 0; i < k; ++i) {
        Snapshot snap{static_cast<Step>(i + 1), {}};
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) {
                if (u != v && coin(rng)) {
                    snap.arcs.push_back({u, v});
                }
            }
        }
        std::shuffle(snap.arcs.begin(), snap.arcs.end(), rng);
        g.snapshots.push_back(std::move(snap));
    }
    return g;
}

/**
 * Journey enumeration over (vertex, step of last arc) states. From (x, t)
 * any arc (x, w) present at step t' > t (strict) or t' >= t (non-strict)
 * leads to (w, t'). Returns reach[u][v], reflexive.
 */
inline std::vector<std::vector<bool>> enumerate_journeys(const EvolvingGraph& g, bool strict) {
    const auto n = g.n;
    const auto k = g.snapshots.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t u = 0; u < n; ++u) {
        std::set<std::pair<std::size_t, std::size_t>> seen;  // (vertex, t)
        std::vector<std::pair<std::size_t, std::size_t>> todo{{u, 0}};
        seen.insert({u, 0});
        reach[u][u] = true;
        while (!todo.empty()) {
            const auto [x, t] = todo.back();
            todo.pop_back();
            for (std::size_t s = (strict ? t + 1 : std::max<std::size_t>(t, 1)); s <= k; ++s) {
                for (const auto& arc : g.snapshots[s - 1].arcs) {
                    if (arc.src == x && seen.insert({arc.dst, s}).second) {
                        reach[u][arc.dst] = true;
                        todo.push_back({arc.dst, s});
                    }
                }
            }
        }
    }
    return reach;
}

// Static reachability by repeated boolean-matrix squaring of (I + A).
inline std::vector<std::vector<bool>> squaring_closure(const Snapshot& snap, std::size_t n) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) {
        m[v][v] = true;
    }
    for (const auto& arc : snap.arcs) {
        m[arc.src][arc.dst] = true;
    }
    for (std::size_t len = 1; len < n; len *= 2) {
        auto next = m;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t l = 0; l < n && !next[i][j]; ++l) {
                    next[i][j] = m[i][l] && m[l][j];
                }
            }
        }
        m = std::move(next);
    }
    return m;
}

}  // namespace journey::testing

#endif  // JOURNEY_TESTS_TEST_SUPPORT_HPP_
