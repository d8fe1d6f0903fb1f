#include "journey/baseline.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "journey/graph_io.hpp"

namespace journey {

ArrivalSweeper::ArrivalSweeper(const EvolvingGraph& g) : n_(g.n), steps_(g.snapshots.size()) {
    for (std::size_t i = 0; i < g.snapshots.size(); ++i) {
        const auto& snap = g.snapshots[i];
        auto& step = steps_[i];
        step.arcs = snap.arcs;
        step.offsets.assign(n_ + 1, 0);
        for (const auto& arc : snap.arcs) {
            if (arc.src >= n_ || arc.dst >= n_) {
                throw std::out_of_range("step " + std::to_string(snap.step) +
                                        ": arc endpoint out of range");
            }
            ++step.offsets[arc.src + 1];
        }
        for (std::size_t v = 0; v < n_; ++v) {
            step.offsets[v + 1] += step.offsets[v];
        }
        step.targets.resize(snap.arcs.size());
        auto fill = step.offsets;
        for (const auto& arc : snap.arcs) {
            step.targets[fill[arc.src]++] = arc.dst;
        }
    }
}

ArrivalTable ArrivalSweeper::run(VertexId source, Flavor flavor) const {
    if (source >= n_) {
        throw std::out_of_range("source " + std::to_string(source) + " out of range for n=" +
                                std::to_string(n_));
    }
    ArrivalTable table{source, flavor, std::vector<Step>(n_, kUnreachable)};
    auto& arrival = table.arrival;
    arrival[source] = 0;
    std::size_t reached = 1;
    std::vector<VertexId> frontier;

    for (std::size_t i = 0; i < steps_.size() && reached < n_; ++i) {
        const auto t = static_cast<Step>(i + 1);
        const auto& step = steps_[i];
        if (flavor == Flavor::strict) {
            // Only vertices reached before this step may extend a journey.
            for (const auto& [x, w] : step.arcs) {
                if (arrival[x] < t && arrival[w] == kUnreachable) {
                    arrival[w] = t;
                    ++reached;
                }
            }
            continue;
        }
        frontier.clear();
        for (const auto& [x, w] : step.arcs) {
            if (arrival[x] != kUnreachable && arrival[w] == kUnreachable) {
                arrival[w] = t;
                ++reached;
                frontier.push_back(w);
            }
        }
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const auto x = frontier[head];
            for (auto j = step.offsets[x]; j < step.offsets[x + 1]; ++j) {
                const auto w = step.targets[j];
                if (arrival[w] == kUnreachable) {
                    arrival[w] = t;
                    ++reached;
                    frontier.push_back(w);
                }
            }
        }
    }
    return table;
}

ArrivalTable earliest_arrival(const EvolvingGraph& g, VertexId source, Flavor flavor) {
    return ArrivalSweeper(g).run(source, flavor);
}

Closure baseline_closure(const EvolvingGraph& g, Flavor flavor, Execution exec) {
    const ArrivalSweeper sweeper(g);
    const auto n = g.n;
    std::vector<ArrivalTable> tables(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::ptrdiff_t u = 0; u < count; ++u) {
            tables[static_cast<std::size_t>(u)] = sweeper.run(static_cast<VertexId>(u), flavor);
        }
    } else {
        for (std::ptrdiff_t u = 0; u < count; ++u) {
            tables[static_cast<std::size_t>(u)] = sweeper.run(static_cast<VertexId>(u), flavor);
        }
    }

    Closure closure(n, flavor);
    bool connected = true;
    Step latest = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            const auto t = tables[u].arrival[v];
            if (t == kUnreachable) {
                connected = false;
            } else {
                closure.add(static_cast<VertexId>(u), static_cast<VertexId>(v));
                latest = std::max(latest, t);
            }
        }
    }
    closure.set_stop_step(connected ? std::optional<Step>(latest) : std::nullopt);
    return closure;
}

Closure oracle_reach(const EvolvingGraph& g, Flavor flavor, std::size_t max_vertices) {
    const auto n = g.n;
    if (n > max_vertices) {
        throw std::invalid_argument("oracle_reach: n=" + std::to_string(n) + " exceeds cap " +
                                    std::to_string(max_vertices));
    }
    // reach[u][v]: v reachable from u within the processed prefix.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t u = 0; u < n; ++u) {
        reach[u][u] = true;
    }
    const auto complete = [&] {
        for (const auto& row : reach) {
            if (std::find(row.begin(), row.end(), false) != row.end()) {
                return false;
            }
        }
        return true;
    };
    std::optional<Step> first_complete;
    if (complete()) {
        first_complete = 0;
    }
    for (const auto& snap : g.snapshots) {
        auto next = reach;
        if (flavor == Flavor::strict) {
            for (const auto& arc : snap.arcs) {
                for (std::size_t u = 0; u < n; ++u) {
                    if (reach[u][arc.src]) {
                        next[u][arc.dst] = true;
                    }
                }
            }
        } else {
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& arc : snap.arcs) {
                    for (std::size_t u = 0; u < n; ++u) {
                        if (next[u][arc.src] && !next[u][arc.dst]) {
                            next[u][arc.dst] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        reach = std::move(next);
        if (!first_complete && complete()) {
            first_complete = snap.step;
        }
    }

    Closure closure(n, flavor);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (reach[u][v]) {
                closure.add(static_cast<VertexId>(u), static_cast<VertexId>(v));
            }
        }
    }
    closure.set_stop_step(first_complete);
    return closure;
}

void write_arrival_table(std::ostream& out, const ArrivalTable& table) {
    out << "# flavor=" << to_string(table.flavor) << '\n';
    out << "source=" << table.source << '\n';
    for (std::size_t v = 0; v < table.arrival.size(); ++v) {
        out << v << ' ';
        if (table.arrival[v] == kUnreachable) {
            out << "-1";
        } else {
            out << table.arrival[v];
        }
        out << '\n';
    }
}

ArrivalTable read_arrival_table(std::istream& in) {
    ArrivalTable table;
    bool saw_source = false;
    std::string line;
    std::size_t line_no = 0;
    const auto to_uint = [&](std::string_view token, auto& value) {
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
            throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
        }
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            if (line.find("flavor=non-strict") != std::string::npos) {
                table.flavor = Flavor::non_strict;
            }
            continue;
        }
        if (!saw_source) {
            if (line.rfind("source=", 0) != 0) {
                throw ParseError(line_no, "expected 'source=<u>'");
            }
            to_uint(std::string_view(line).substr(7), table.source);
            saw_source = true;
            continue;
        }
        const auto space = line.find(' ');
        if (space == std::string::npos) {
            throw ParseError(line_no, "expected '<v> <t>'");
        }
        std::size_t v = 0;
        to_uint(std::string_view(line).substr(0, space), v);
        if (v != table.arrival.size()) {
            throw ParseError(line_no, "vertices must be listed in order 0..n-1");
        }
        const auto t = std::string_view(line).substr(space + 1);
        Step step = kUnreachable;
        if (t != "-1") {
            to_uint(t, step);
        }
        table.arrival.push_back(step);
    }
    if (!saw_source) {
        throw ParseError(line_no, "missing 'source=<u>'");
    }
    return table;
}

}  // namespace journey
