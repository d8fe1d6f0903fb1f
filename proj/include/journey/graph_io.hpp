#ifndef JOURNEY_GRAPH_IO_HPP_
#define JOURNEY_GRAPH_IO_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "journey/graph.hpp"

namespace journey {

// Malformed input. what() is prefixed with "line <N>: ".
class ParseError : public std::runtime_error {
 public:
    ParseError(std::size_t line, const std::string& message);

    std::size_t line() const noexcept { return line_; }

 private:
    std::size_t line_;
};

struct ParseStats {
    std::size_t duplicates_dropped = 0;
    std::size_t self_loops_dropped = 0;
    // Largest number of arcs held in the snapshot buffer at any time.
    std::size_t peak_buffer_arcs = 0;
};

/**
 * Streaming reader for the line-based evolving graph format:
 *
 *     # comment
 *     n=<N>
 *     t=1
 *     <u> <v>
 *     t=2
 *     ...
 *
 * The header is read on construction. Each call to next() consumes one step
 * marker and its arcs; only that snapshot is held in memory. Duplicate arcs
 * within a step are dropped, as are self-loops, and both are counted in
 * stats(). Blank lines are ignored.
 */
class SnapshotReader final : public SnapshotSource {
 public:
    explicit SnapshotReader(std::istream& in);

    std::size_t vertex_count() const override { return n_; }
    const Snapshot* next() override;

    const ParseStats& stats() const noexcept { return stats_; }

 private:
    bool read_line(std::string_view& out);

    std::istream* in_;
    std::string buffer_;
    std::size_t line_no_ = 0;
    std::size_t n_ = 0;
    std::optional<Step> pending_step_;
    Step last_step_ = 0;
    Snapshot current_;
    std::unordered_set<std::uint64_t> seen_;
    ParseStats stats_;
};

EvolvingGraph parse_evolving_graph(std::istream& in, ParseStats* stats = nullptr);
EvolvingGraph parse_evolving_graph(std::string_view text, ParseStats* stats = nullptr);

// Each entry of `comments` becomes one "# ..." line ahead of the header.
void write_header(std::ostream& out, std::size_t n, const std::vector<std::string>& comments = {});
void write_snapshot(std::ostream& out, const Snapshot& snap);
void write_evolving_graph(std::ostream& out, const EvolvingGraph& g,
                          const std::vector<std::string>& comments = {});
std::string to_text(const EvolvingGraph& g);

}  // namespace journey

#endif  // JOURNEY_GRAPH_IO_HPP_
