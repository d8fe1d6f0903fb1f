#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "journey/baseline.hpp"
#include "journey/strict_closure.hpp"
#include "test_support.hpp"

using namespace journey;
using journey::testing::make_graph;

TEST_CASE("init_state") {
    PredecessorState empty(0);
    CHECK(empty.is_complete());
    CHECK(empty.complete_count() == 0);

    PredecessorState one(1);
    CHECK(one.has_predecessor(0, 0));
    CHECK(one.complete_count() == 1);

    PredecessorState four(4);
    CHECK(four.complete_count() == 0);
    CHECK(four.current_step() == 0);
    for (VertexId v = 0; v < 4; ++v) {
        CHECK(four.predecessor_count(v) == 1);
        CHECK(four.has_predecessor(v, v));
        CHECK(four.pending_count(v) == 0);
    }
}

TEST_CASE("process_step_strict: one arc per step") {
    PredecessorState s(3);
    s.process_step({1, {{0, 1}}});
    CHECK(s.has_predecessor(1, 0));
    CHECK(s.predecessor_count(1) == 2);

    PredecessorState chain(3);
    chain.process_step({1, {{0, 1}, {1, 2}}});
    CHECK(chain.has_predecessor(2, 1));
    CHECK_FALSE(chain.has_predecessor(2, 0));
    chain.process_step({2, {{1, 2}}});
    CHECK(chain.has_predecessor(2, 0));
    CHECK(chain.predecessor_count(2) == 3);
    CHECK(chain.current_step() == 2);
}

TEST_CASE("process_step_strict: arc order within a step does not matter") {
    PredecessorState a(3);
    PredecessorState b(3);
    a.process_step({1, {{0, 1}, {1, 2}}});
    b.process_step({1, {{1, 2}, {0, 1}}});
    CHECK(a.to_closure(Flavor::strict, {}).same_reach(b.to_closure(Flavor::strict, {})));
}

TEST_CASE("process_step_strict errors leave the state untouched") {
    PredecessorState s(3);
    CHECK_THROWS_AS(s.process_step({2, {{0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(s.process_step({1, {{0, 1}, {0, 3}}}), std::out_of_range);
    CHECK(s.current_step() == 0);
    CHECK(s.predecessor_count(1) == 1);
}

TEST_CASE("strict_closure examples") {
    const auto c = strict_closure(make_graph(3, {{{0, 1}}, {{1, 2}}}));
    CHECK(c.pair_count() == 3);
    CHECK(c.query(0, 1));
    CHECK(c.query(1, 2));
    CHECK(c.query(0, 2));
    CHECK_FALSE(c.query(1, 0));
    CHECK_FALSE(c.stop_step().has_value());
    CHECK(c.flavor() == Flavor::strict);

    const auto two = strict_closure(make_graph(2, {{{0, 1}}, {{1, 0}}}));
    CHECK(two.is_connected());
    CHECK(two.stop_step() == std::optional<Step>(2));

    const auto single = strict_closure(make_graph(3, {{{0, 1}}}));
    CHECK(single.query(0, 1));
    CHECK_FALSE(single.query(1, 0));
    CHECK(single.query(2, 2));
}

TEST_CASE("early stop halts the stream at the first complete step") {
    const auto g = make_graph(2, {{{0, 1}}, {{1, 0}}, {{0, 1}}, {}});
    RunStats stats;
    RunOptions options;
    options.early_stop = true;
    options.stats = &stats;
    const auto c = strict_closure(g, options);
    CHECK(c.stop_step() == std::optional<Step>(2));
    CHECK(stats.steps_processed == 2);

    options.early_stop = false;
    strict_closure(g, options);
    CHECK(stats.steps_processed == 4);

    RunOptions trivial;
    trivial.early_stop = true;
    trivial.stats = &stats;
    const auto c1 = strict_closure(make_graph(1, {{}, {}}), trivial);
    CHECK(c1.stop_step() == std::optional<Step>(0));
    CHECK(stats.steps_processed == 0);
}

TEST_CASE("strict closure matches journey enumeration on random instances") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = 1 + trial % 8;
        const auto g = journey::testing::random_graph(rng, n, trial % 7, 0.25);
        const auto expected = journey::testing::enumerate_journeys(g, true);
        const auto c = strict_closure(g);
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) {
                CHECK(c.query(u, v) == expected[u][v]);
            }
        }
    }
}

TEST_CASE("per-step invariants: buffer empty, monotone, bounded by k*mu") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = 2 + trial % 10;
        const auto g = journey::testing::random_graph(rng, n, 8, 0.15);
        PredecessorState s(n);
        std::size_t mu = 0;
        std::vector<std::size_t> previous(n, 1);
        for (const auto& snap : g.snapshots) {
            s.process_step(snap);
            mu = std::max(mu, snap.arcs.size());
            CHECK(s.max_foreign_predecessors() <= std::min<std::size_t>(snap.step * mu, n - 1));
            for (VertexId v = 0; v < n; ++v) {
                CHECK(s.pending_count(v) == 0);
                CHECK(s.has_predecessor(v, v));
                CHECK(s.predecessor_count(v) >= previous[v]);
                previous[v] = s.predecessor_count(v);
            }
        }
        CHECK(s.offered_insertions() <= g.snapshots.size() * std::max<std::size_t>(mu, 1) * n);
    }
}

TEST_CASE("parallel kernel agrees with the serial reference") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = journey::testing::random_graph(rng, 10 + trial, 6, 0.05);
        RunOptions serial;
        RunOptions parallel;
        parallel.execution = Execution::parallel;
        RunStats a;
        RunStats b;
        serial.stats = &a;
        parallel.stats = &b;
        const auto cs = strict_closure(g, serial);
        const auto cp = strict_closure(g, parallel);
        CHECK(cs.same_reach(cp));
        CHECK(cs.stop_step() == cp.stop_step());
        CHECK(a.offered_insertions == b.offered_insertions);
        CHECK(a.committed_insertions == b.committed_insertions);
    }
}
