#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "journey/generators.hpp"
#include "journey/graph_io.hpp"

using namespace journey;

TEST_CASE("PortableRng is the standard mt19937_64") {
    // The C++ standard fixes the 10000th output for the default seed 5489.
    PortableRng rng(5489);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) {
        x = rng.raw();
    }
    CHECK(x == 9981545732273789042ULL);
}

TEST_CASE("PortableRng derived draws stay in range") {
    PortableRng rng(1);
    for (int i = 0; i < 10000; ++i) {
        CHECK(rng.uniform(7) < 7);
        const auto u = rng.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(rng.uniform(1) == 0);
    CHECK_THROWS_AS(rng.uniform(0), std::invalid_argument);
    CHECK_FALSE(rng.bernoulli(0.0));
    CHECK(rng.bernoulli(1.0));
}

TEST_CASE("uniform generator controls mu exactly") {
    const auto g = gen_uniform(4, 3, 2, 17);
    CHECK(g.step_count() == 3);
    CHECK_NOTHROW(validate(g));
    for (const auto& snap : g.snapshots) {
        CHECK(snap.arcs.size() == 2);
    }
    CHECK(compute_params(g).mu == 2);

    const auto full = gen_uniform(4, 2, 12, 3);
    for (const auto& snap : full.snapshots) {
        CHECK(snap.arcs.size() == 12);
    }
    CHECK(gen_uniform(4, 2, 0, 3).snapshots[0].arcs.empty());
    CHECK_THROWS_AS(gen_uniform(4, 2, 13, 3), std::invalid_argument);
}

TEST_CASE("same spec and seed give byte-identical output") {
    const GenSpec a{20, 15, UniformModel{9}, 123};
    CHECK(to_text(generate(a)) == to_text(generate(a)));
    const GenSpec b{20, 15, MarkovianModel{0.2, 0.4}, 123};
    CHECK(to_text(generate(b)) == to_text(generate(b)));
    GenSpec c = a;
    c.seed = 124;
    CHECK(to_text(generate(a)) != to_text(generate(c)));
}

TEST_CASE("cumulative arc count far exceeds mu in sparse uniform streams") {
    // Each pair is absent from a step with probability 1 - r/N, independently
    // across steps, so E[m] = N (1 - (1 - r/N)^k).
    const std::size_t n = 64, k = 64, r = 6;
    const double pairs = n * (n - 1);
    const double expected = pairs * (1.0 - std::pow(1.0 - r / pairs, static_cast<double>(k)));
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto p = compute_params(gen_uniform(n, k, r, seed));
        CHECK(p.mu == r);
        total += static_cast<double>(p.m);
    }
    const auto mean = total / 30.0;
    MESSAGE("mean m over 30 seeds = " << mean << ", expected " << expected);
    CHECK(mean == doctest::Approx(expected).epsilon(0.03));
    CHECK(mean > 50.0 * r);
}

TEST_CASE("markovian absorbing and empty chains") {
    const auto full = gen_markovian(5, 4, 1.0, 0.0, 9);
    for (const auto& snap : full.snapshots) {
        CHECK(snap.arcs.size() == 20);
    }
    const auto none = gen_markovian(5, 4, 0.0, 0.7, 9);
    for (const auto& snap : none.snapshots) {
        CHECK(snap.arcs.empty());
    }
    const auto degenerate = gen_markovian(5, 4, 0.0, 0.0, 9);
    for (const auto& snap : degenerate.snapshots) {
        CHECK(snap.arcs.empty());
    }
    CHECK_THROWS_AS(gen_markovian(5, 4, 1.5, 0.0, 9), std::invalid_argument);
    CHECK_THROWS_AS(gen_markovian(5, 4, 0.5, -0.1, 9), std::invalid_argument);
}

TEST_CASE("markovian transition frequencies within 3 sigma") {
    const double p_birth = 0.3, p_death = 0.6;
    const auto g = gen_markovian(3, 20000, p_birth, p_death, 2);
    std::vector<bool> prev(9, false);
    const auto index = [](const Arc& a) { return a.src * 3 + a.dst; };
    double absent = 0, births = 0, present = 0, deaths = 0;
    for (std::size_t i = 0; i < g.snapshots.size(); ++i) {
        std::vector<bool> now(9, false);
        for (const auto& a : g.snapshots[i].arcs) {
            now[index(a)] = true;
        }
        if (i > 0) {
            for (std::size_t p = 0; p < 9; ++p) {
                if (p % 4 == 0) {
                    continue;  // diagonal
                }
                if (prev[p]) {
                    ++present;
                    deaths += now[p] ? 0 : 1;
                } else {
                    ++absent;
                    births += now[p] ? 1 : 0;
                }
            }
        }
        prev = now;
    }
    CHECK(std::abs(births / absent - p_birth) <= 3 * std::sqrt(p_birth * (1 - p_birth) / absent));
    CHECK(std::abs(deaths / present - p_death) <= 3 * std::sqrt(p_death * (1 - p_death) / present));
}

TEST_CASE("describe records the generator settings") {
    const auto lines = describe(GenSpec{8, 3, MarkovianModel{0.25, 0.5}, 42});
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "generator prng=mt19937_64 seed=42");
    CHECK(lines[1] == "model=markovian p_birth=0.25 p_death=0.5");
    CHECK(lines[2] == "n=8 k=3");
}
