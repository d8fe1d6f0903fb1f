#include "journey/generators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace journey {

std::uint64_t PortableRng::uniform(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform: empty range");
    }
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const auto x = engine_();
        if (x >= threshold) {
            return x % bound;
        }
    }
}

void validate(const GenSpec& spec) {
    const auto pairs = spec.n * (spec.n == 0 ? 0 : spec.n - 1);
    if (const auto* u = std::get_if<UniformModel>(&spec.model)) {
        if (u->arcs_per_step > pairs) {
            throw std::invalid_argument("arcs_per_step=" + std::to_string(u->arcs_per_step) +
                                        " exceeds n(n-1)=" + std::to_string(pairs));
        }
    } else {
        const auto& m = std::get<MarkovianModel>(spec.model);
        const auto ok = [](double p) { return p >= 0.0 && p <= 1.0; };
        if (!ok(m.p_birth) || !ok(m.p_death)) {
            throw std::invalid_argument("Markov probabilities must lie in [0, 1]");
        }
    }
}

std::vector<std::string> describe(const GenSpec& spec) {
    std::vector<std::string> lines;
    lines.push_back(std::string("generator prng=") + kPrngName + " seed=" + std::to_string(spec.seed));
    std::ostringstream model;
    model.precision(17);
    if (const auto* u = std::get_if<UniformModel>(&spec.model)) {
        model << "model=uniform arcs_per_step=" << u->arcs_per_step;
    } else {
        const auto& m = std::get<MarkovianModel>(spec.model);
        model << "model=markovian p_birth=" << m.p_birth << " p_death=" << m.p_death;
    }
    lines.push_back(model.str());
    lines.push_back("n=" + std::to_string(spec.n) + " k=" + std::to_string(spec.k));
    return lines;
}

GeneratedStream::GeneratedStream(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {
    validate(spec_);
    if (std::holds_alternative<MarkovianModel>(spec_.model)) {
        present_.assign(spec_.n * (spec_.n == 0 ? 0 : spec_.n - 1), 0);
    }
}

Arc GeneratedStream::pair_arc(std::uint64_t index) const {
    const auto row = spec_.n - 1;
    const auto u = static_cast<VertexId>(index / row);
    auto v = static_cast<VertexId>(index % row);
    if (v >= u) {
        ++v;
    }
    return {u, v};
}

const Snapshot* GeneratedStream::next() {
    if (current_.step >= spec_.k) {
        return nullptr;
    }
    ++current_.step;
    current_.arcs.clear();
    if (const auto* u = std::get_if<UniformModel>(&spec_.model)) {
        next_uniform(u->arcs_per_step);
    } else {
        next_markovian(std::get<MarkovianModel>(spec_.model));
    }
    return &current_;
}

void GeneratedStream::next_uniform(std::size_t count) {
    const std::uint64_t pairs = spec_.n * (spec_.n == 0 ? 0 : spec_.n - 1);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(count * 2);
    sample_.clear();
    // Floyd: for j in [pairs-count, pairs), take t in [0, j]; on collision take j.
    for (auto j = pairs - count; j < pairs; ++j) {
        const auto t = rng_.uniform(j + 1);
        const auto pick = chosen.insert(t).second ? t : j;
        if (pick == j) {
            chosen.insert(j);
        }
        sample_.push_back(pick);
    }
    std::sort(sample_.begin(), sample_.end());
    for (auto idx : sample_) {
        current_.arcs.push_back(pair_arc(idx));
    }
}

void GeneratedStream::next_markovian(const MarkovianModel& model) {
    const auto total = model.p_birth + model.p_death;
    const bool initial = current_.step == 1;
    const double stationary = total > 0.0 ? model.p_birth / total : 0.0;
    for (std::size_t idx = 0; idx < present_.size(); ++idx) {
        auto& state = present_[idx];
        if (initial) {
            state = rng_.bernoulli(stationary) ? 1 : 0;
        } else if (state) {
            state = rng_.bernoulli(model.p_death) ? 0 : 1;
        } else {
            state = rng_.bernoulli(model.p_birth) ? 1 : 0;
        }
        if (state) {
            current_.arcs.push_back(pair_arc(idx));
        }
    }
}

EvolvingGraph generate(const GenSpec& spec) {
    GeneratedStream stream(spec);
    return collect(stream);
}

EvolvingGraph gen_uniform(std::size_t n, std::size_t k, std::size_t arcs_per_step, std::uint64_t seed) {
    return generate(GenSpec{n, k, UniformModel{arcs_per_step}, seed});
}

EvolvingGraph gen_markovian(std::size_t n, std::size_t k, double p_birth, double p_death,
                            std::uint64_t seed) {
    return generate(GenSpec{n, k, MarkovianModel{p_birth, p_death}, seed});
}

}  // namespace journey
