#ifndef JOURNEY_GENERATORS_HPP_
#define JOURNEY_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "journey/bit_matrix.hpp"
#include "journey/graph.hpp"

namespace journey {

struct UniformModel {
    std::size_t arcs_per_step = 0;
};

// Each ordered pair is an independent two-state chain.
struct MarkovianModel {
    double p_birth = 0.0;  // absent -> present
    double p_death = 0.0;  // present -> absent
};

struct GenSpec {
    std::size_t n = 0;
    std::size_t k = 0;
    std::variant<UniformModel, MarkovianModel> model;
    std::uint64_t seed = 0;
};

// Throws std::invalid_argument for probabilities outside [0, 1] or
// arcs_per_step > n(n-1).
void validate(const GenSpec& spec);

// "key=value" lines recorded as header comments of generated files.
std::vector<std::string> describe(const GenSpec& spec);

/**
 * Portable random source: std::mt19937_64 seeded with the 64-bit seed.
 * Derived draws avoid the implementation-defined std distributions:
 *   uniform(b)  rejection-sampled modulo, rejecting raw values below 2^64 mod b
 *   unit()      top 53 bits scaled by 2^-53, in [0, 1)
 */
class PortableRng {
 public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }
    std::uint64_t uniform(std::uint64_t bound);
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return unit() < p; }

 private:
    std::mt19937_64 engine_;
};

inline constexpr const char* kPrngName = "mt19937_64";

/**
 * Snapshot stream for a GenSpec; only the current snapshot (and, for the
 * Markovian model, the n(n-1) chain states) is held in memory.
 *
 * Uniform: every step draws exactly arcs_per_step distinct ordered pairs
 * u != v with Floyd's sampling over pair indices idx = u*(n-1) + (v - [v>u]).
 * Markovian: step 1 draws each pair present with the stationary probability
 * p_birth/(p_birth+p_death) (absent when both are 0); each later step applies
 * one transition per pair. Arcs are emitted in pair-index order.
 */
class GeneratedStream final : public SnapshotSource {
 public:
    explicit GeneratedStream(const GenSpec& spec);

    std::size_t vertex_count() const override { return spec_.n; }
    const Snapshot* next() override;

 private:
    void next_uniform(std::size_t count);
    void next_markovian(const MarkovianModel& model);
    Arc pair_arc(std::uint64_t index) const;

    GenSpec spec_;
    PortableRng rng_;
    Snapshot current_;
    std::vector<std::uint64_t> sample_;
    std::vector<std::uint8_t> present_;
};

EvolvingGraph generate(const GenSpec& spec);
EvolvingGraph gen_uniform(std::size_t n, std::size_t k, std::size_t arcs_per_step, std::uint64_t seed);
EvolvingGraph gen_markovian(std::size_t n, std::size_t k, double p_birth, double p_death,
                            std::uint64_t seed);

}  // namespace journey

#endif  // JOURNEY_GENERATORS_HPP_
