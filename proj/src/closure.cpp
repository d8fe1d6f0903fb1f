#include "journey/closure.hpp"

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

#include "journey/graph_io.hpp"
#include <utility>

namespace journey {

Closure::Closure(std::size_t n, Flavor flavor) : preds_(n, n), flavor_(flavor) {
    for (std::size_t v = 0; v < n; ++v) {
        preds_.set(v, v);
    }
    if (n <= 1) {
        stop_step_ = 0;
    }
}

Closure::Closure(BitMatrix predecessors, Flavor flavor, std::optional<Step> stop_step)
    : preds_(std::move(predecessors)), flavor_(flavor), stop_step_(stop_step) {
    if (preds_.rows() != preds_.cols()) {
        throw std::invalid_argument("closure matrix must be square");
    }
}

bool Closure::query(VertexId u, VertexId v) const {
    if (u >= vertex_count() || v >= vertex_count()) {
        throw std::out_of_range("vertex index out of range for n=" + std::to_string(vertex_count()));
    }
    return reaches(u, v);
}

bool Closure::is_connected() const noexcept {
    const auto n = vertex_count();
    for (std::size_t v = 0; v < n; ++v) {
        if (preds_.count(v) != n) {
            return false;
        }
    }
    return true;
}

std::size_t Closure::pair_count() const noexcept {
    std::size_t total = 0;
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        total += preds_.count(v) - 1;
    }
    return total;
}

bool Closure::same_reach(const Closure& other) const noexcept {
    return preds_ == other.preds_;
}

bool Closure::is_subrelation_of(const Closure& other) const noexcept {
    if (vertex_count() != other.vertex_count()) {
        return false;
    }
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        const auto mine = preds_.row(v);
        const auto theirs = other.preds_.row(v);
        for (std::size_t i = 0; i < mine.size(); ++i) {
            if ((mine[i] & ~theirs[i]) != 0) {
                return false;
            }
        }
    }
    return true;
}

void write_closure(std::ostream& out, const Closure& c) {
    out << "# flavor=" << to_string(c.flavor()) << " stop_step=";
    if (c.stop_step()) {
        out << *c.stop_step();
    } else {
        out << "none";
    }
    out << '\n' << "n=" << c.vertex_count() << '\n';
    const auto n = static_cast<VertexId>(c.vertex_count());
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            if (u != v && c.reaches(u, v)) {
                out << u << ' ' << v << '\n';
            }
        }
    }
}

namespace {

std::optional<std::string_view> field(std::string_view line, std::string_view key) {
    const auto pos = line.find(key);
    if (pos == std::string_view::npos) {
        return std::nullopt;
    }
    auto rest = line.substr(pos + key.size());
    return rest.substr(0, rest.find_first_of(" \t\r"));
}

template <typename Int>
bool parse_uint(std::string_view token, Int& value) {
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    return ec == std::errc{} && ptr == end && !token.empty();
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

}  // namespace

Closure read_closure(std::istream& in) {
    Flavor flavor = Flavor::strict;
    std::optional<Step> stop_step;
    std::optional<Closure> c;
    std::string buffer;
    std::size_t line_no = 0;
    while (std::getline(in, buffer)) {
        ++line_no;
        const auto line = trim(buffer);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            if (const auto f = field(line, "flavor=")) {
                if (*f == "strict") {
                    flavor = Flavor::strict;
                } else if (*f == "non-strict") {
                    flavor = Flavor::non_strict;
                } else {
                    throw ParseError(line_no, "unknown flavor '" + std::string(*f) + "'");
                }
            }
            if (const auto s = field(line, "stop_step=")) {
                Step value = 0;
                if (*s == "none") {
                    stop_step.reset();
                } else if (parse_uint(*s, value)) {
                    stop_step = value;
                } else {
                    throw ParseError(line_no, "bad stop_step '" + std::string(*s) + "'");
                }
            }
            continue;
        }
        if (!c) {
            std::size_t n = 0;
            if (line.substr(0, 2) != "n=" || !parse_uint(trim(line.substr(2)), n)) {
                throw ParseError(line_no, "expected header 'n=<N>', got '" + std::string(line) + "'");
            }
            c.emplace(n, flavor);
            continue;
        }
        const auto space = line.find_first_of(" \t");
        VertexId u = 0;
        VertexId v = 0;
        if (space == std::string_view::npos || !parse_uint(line.substr(0, space), u) ||
            !parse_uint(trim(line.substr(space)), v)) {
            throw ParseError(line_no, "expected '<u> <v>', got '" + std::string(line) + "'");
        }
        if (u >= c->vertex_count() || v >= c->vertex_count()) {
            throw ParseError(line_no, "vertex index out of range for n=" + std::to_string(c->vertex_count()));
        }
        c->add(u, v);
    }
    if (!c) {
        throw ParseError(line_no, "missing header 'n=<N>'");
    }
    c->set_stop_step(stop_step);
    return std::move(*c);
}

}  // namespace journey
