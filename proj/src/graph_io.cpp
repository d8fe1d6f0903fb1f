#include "journey/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace journey {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename Int>
std::optional<Int> parse_uint(std::string_view token) {
    Int value{};
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || token.empty()) {
        return std::nullopt;
    }
    return value;
}

// "key=<unsigned>", returns nullopt if the key does not match.
template <typename Int>
std::optional<Int> parse_assignment(std::string_view line, std::string_view key, std::size_t line_no) {
    if (line.substr(0, key.size()) != key || line.size() <= key.size() || line[key.size()] != '=') {
        return std::nullopt;
    }
    const auto value = trim(line.substr(key.size() + 1));
    auto parsed = parse_uint<Int>(value);
    if (!parsed) {
        throw ParseError(line_no, "expected a non-negative integer after '" + std::string(key) +
                                      "=', got '" + std::string(value) + "'");
    }
    return parsed;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

SnapshotReader::SnapshotReader(std::istream& in) : in_(&in) {
    std::string_view line;
    if (!read_line(line)) {
        throw ParseError(line_no_, "missing header 'n=<N>'");
    }
    const auto n = parse_assignment<std::size_t>(line, "n", line_no_);
    if (!n) {
        throw ParseError(line_no_, "expected header 'n=<N>', got '" + std::string(line) + "'");
    }
    n_ = *n;
    if (!read_line(line)) {
        return;
    }
    const auto step = parse_assignment<Step>(line, "t", line_no_);
    if (!step) {
        throw ParseError(line_no_, "arc before the first step marker 't=1'");
    }
    if (*step != 1) {
        throw ParseError(line_no_, "first step marker must be t=1, got t=" + std::to_string(*step));
    }
    pending_step_ = *step;
}

bool SnapshotReader::read_line(std::string_view& out) {
    while (std::getline(*in_, buffer_)) {
        ++line_no_;
        const auto line = trim(buffer_);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        out = line;
        return true;
    }
    if (in_->bad()) {
        throw ParseError(line_no_, "read error");
    }
    return false;
}

const Snapshot* SnapshotReader::next() {
    if (!pending_step_) {
        return nullptr;
    }
    current_.step = *pending_step_;
    current_.arcs.clear();
    seen_.clear();
    last_step_ = *pending_step_;
    pending_step_.reset();

    std::string_view line;
    while (read_line(line)) {
        if (auto step = parse_assignment<Step>(line, "t", line_no_)) {
            if (*step != last_step_ + 1) {
                throw ParseError(line_no_, "step marker t=" + std::to_string(*step) +
                                               " does not follow t=" + std::to_string(last_step_));
            }
            pending_step_ = *step;
            break;
        }
        const auto space = line.find_first_of(" \t");
        if (space == std::string_view::npos) {
            throw ParseError(line_no_, "expected '<u> <v>', got '" + std::string(line) + "'");
        }
        const auto first = line.substr(0, space);
        const auto second = trim(line.substr(space));
        const auto u = parse_uint<std::uint64_t>(first);
        const auto v = parse_uint<std::uint64_t>(second);
        if (!u || !v) {
            throw ParseError(line_no_, "expected two non-negative integers, got '" + std::string(line) + "'");
        }
        if (*u >= n_ || *v >= n_) {
            throw ParseError(line_no_, "vertex index " + std::to_string(std::max(*u, *v)) +
                                           " out of range for n=" + std::to_string(n_));
        }
        if (*u == *v) {
            ++stats_.self_loops_dropped;
            continue;
        }
        if (!seen_.insert(*u * n_ + *v).second) {
            ++stats_.duplicates_dropped;
            continue;
        }
        current_.arcs.push_back({static_cast<VertexId>(*u), static_cast<VertexId>(*v)});
        stats_.peak_buffer_arcs = std::max(stats_.peak_buffer_arcs, current_.arcs.size());
    }
    return &current_;
}

EvolvingGraph parse_evolving_graph(std::istream& in, ParseStats* stats) {
    SnapshotReader reader(in);
    auto g = collect(reader);
    if (stats != nullptr) {
        *stats = reader.stats();
    }
    return g;
}

EvolvingGraph parse_evolving_graph(std::string_view text, ParseStats* stats) {
    std::istringstream in{std::string(text)};
    return parse_evolving_graph(in, stats);
}

void write_header(std::ostream& out, std::size_t n, const std::vector<std::string>& comments) {
    for (const auto& c : comments) {
        out << "# " << c << '\n';
    }
    out << "n=" << n << '\n';
}

void write_snapshot(std::ostream& out, const Snapshot& snap) {
    out << "t=" << snap.step << '\n';
    for (const auto& arc : snap.arcs) {
        out << arc.src << ' ' << arc.dst << '\n';
    }
}

void write_evolving_graph(std::ostream& out, const EvolvingGraph& g,
                          const std::vector<std::string>& comments) {
    write_header(out, g.n, comments);
    for (const auto& snap : g.snapshots) {
        write_snapshot(out, snap);
    }
}

std::string to_text(const EvolvingGraph& g) {
    std::ostringstream out;
    write_evolving_graph(out, g);
    return out.str();
}

}  // namespace journey
