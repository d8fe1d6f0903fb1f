#ifndef JOURNEY_CLOSURE_HPP_
#define JOURNEY_CLOSURE_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>

#include "journey/bit_matrix.hpp"
#include "journey/graph.hpp"

namespace journey {

/**
 * Static reachability relation produced by a journey closure. Stored
 * column-major: column v is the predecessor set of v, so the output of the
 * predecessor engine is adopted without a transposition pass. reach(v, v) is
 * always true.
 *
 * stop_step is the first step after which every ordered pair was reachable
 * (0 when n <= 1), or empty if that never happened in the processed prefix.
 */
class Closure {
 public:
    Closure() = default;
    Closure(std::size_t n, Flavor flavor);  // identity relation
    Closure(BitMatrix predecessors, Flavor flavor, std::optional<Step> stop_step);

    std::size_t vertex_count() const noexcept { return preds_.rows(); }
    Flavor flavor() const noexcept { return flavor_; }
    std::optional<Step> stop_step() const noexcept { return stop_step_; }
    void set_stop_step(std::optional<Step> step) noexcept { stop_step_ = step; }

    // Throws std::out_of_range for an index >= n.
    bool query(VertexId u, VertexId v) const;
    bool reaches(VertexId u, VertexId v) const noexcept { return preds_.test(v, u); }
    void add(VertexId u, VertexId v) noexcept { preds_.set(v, u); }

    bool is_connected() const noexcept;
    // Number of reachable ordered pairs u != v.
    std::size_t pair_count() const noexcept;

    // Same vertex count and reach relation; flavor and stop step ignored.
    bool same_reach(const Closure& other) const noexcept;
    bool is_subrelation_of(const Closure& other) const noexcept;

    const BitMatrix& predecessors() const noexcept { return preds_; }

 private:
    BitMatrix preds_;
    Flavor flavor_ = Flavor::strict;
    std::optional<Step> stop_step_;
};

inline bool is_connected(const Closure& c) noexcept { return c.is_connected(); }
inline bool query(const Closure& c, VertexId u, VertexId v) { return c.query(u, v); }

// "# flavor=<f> stop_step=<t|none>", "n=<N>", then "u v" per non-reflexive
// pair in lexicographic order.
void write_closure(std::ostream& out, const Closure& c);
Closure read_closure(std::istream& in);

}  // namespace journey

#endif  // JOURNEY_CLOSURE_HPP_
