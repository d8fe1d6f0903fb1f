#include "journey/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "journey/baseline.hpp"
#include "journey/nonstrict_closure.hpp"
#include "journey/strict_closure.hpp"

namespace journey {

const char* to_string(Algorithm algorithm) noexcept {
    switch (algorithm) {
        case Algorithm::dedicated_strict:
            return "dedicated-strict";
        case Algorithm::dedicated_nonstrict:
            return "dedicated-nonstrict";
        case Algorithm::baseline:
            return "baseline";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    for (auto a : {Algorithm::dedicated_strict, Algorithm::dedicated_nonstrict, Algorithm::baseline}) {
        if (name == to_string(a)) {
            return a;
        }
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

void write_csv_row(std::ostream& out, const BenchRecord& r) {
    out << to_string(r.algorithm) << ',' << r.n << ',' << r.k << ',' << r.mu << ',' << r.m << ','
        << r.seed << ',';
    const auto old = out.precision(9);
    out << r.wall_time_s;
    out.precision(old);
    out << ',';
    if (r.stop_step) {
        out << *r.stop_step;
    }
    out << ',' << (r.connected ? "true" : "false") << '\n';
}

void write_skipped_row(std::ostream& out, std::size_t n, std::size_t k,
                       const std::string& arcs_per_step, std::uint64_t seed) {
    out << "skipped," << n << ',' << k << ',' << arcs_per_step << ",," << seed << ",,,\n";
}

std::size_t eval_size_expr(std::string_view expr, std::size_t n) {
    const auto log2n = n <= 1 ? std::size_t{0}
                              : static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
    if (expr == "log2n") {
        return log2n;
    }
    if (expr == "sqrtn") {
        return static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    }
    if (expr == "n") {
        return n;
    }
    if (expr == "nlog2n") {
        return n * log2n;
    }
    if (expr == "n2") {
        return n * n;
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(expr.data(), expr.data() + expr.size(), value);
    if (ec != std::errc{} || ptr != expr.data() + expr.size() || expr.empty()) {
        throw std::invalid_argument("bad size expression '" + std::string(expr) + "'");
    }
    return value;
}

namespace {

struct Outcome {
    std::optional<Step> stop_step;
    bool connected = false;
};

Outcome run_once(const EvolvingGraph& g, Algorithm algorithm, bool early_stop, Execution exec) {
    RunOptions options;
    options.early_stop = early_stop;
    options.execution = exec;
    Closure c;
    switch (algorithm) {
        case Algorithm::dedicated_strict:
            c = strict_closure(g, options);
            break;
        case Algorithm::dedicated_nonstrict:
            c = nonstrict_closure(g, options);
            break;
        case Algorithm::baseline:
            c = baseline_closure(g, Flavor::strict, exec);
            break;
    }
    return {c.stop_step(), c.is_connected()};
}

}  // namespace

double time_closure(const EvolvingGraph& g, Algorithm algorithm, bool early_stop, Execution exec,
                    double min_time_s, std::optional<Step>* stop_step, bool* connected) {
    using clock = std::chrono::steady_clock;
    std::size_t runs = 0;
    Outcome outcome;
    const auto start = clock::now();
    double elapsed = 0.0;
    do {
        outcome = run_once(g, algorithm, early_stop, exec);
        ++runs;
        elapsed = std::chrono::duration<double>(clock::now() - start).count();
    } while (elapsed < min_time_s);
    if (stop_step != nullptr) {
        *stop_step = outcome.stop_step;
    }
    if (connected != nullptr) {
        *connected = outcome.connected;
    }
    return elapsed / static_cast<double>(runs);
}

BenchRecord measure(const EvolvingGraph& g, const GraphParams& params, Algorithm algorithm,
                    std::uint64_t seed, bool early_stop, Execution exec, double min_time_s) {
    BenchRecord r;
    r.algorithm = algorithm;
    r.n = g.n;
    r.k = params.k;
    r.mu = params.mu;
    r.m = params.m;
    r.seed = seed;
    r.wall_time_s = time_closure(g, algorithm, early_stop, exec, min_time_s, &r.stop_step, &r.connected);
    return r;
}

std::vector<BenchRecord> run_bench(const BenchGrid& grid, std::ostream& csv, std::ostream* log) {
    std::vector<BenchRecord> records;
    csv << kCsvHeader << '\n';
    const bool uniform = !grid.arcs_per_step_exprs.empty();
    const std::vector<std::string> markov_only{""};
    const auto& aps_list = uniform ? grid.arcs_per_step_exprs : markov_only;
    std::size_t cell = 0;

    for (const auto n : grid.n_values) {
        for (const auto& k_expr : grid.k_exprs) {
            const auto k = eval_size_expr(k_expr, n);
            for (const auto& aps_expr : aps_list) {
                GenSpec spec;
                spec.n = n;
                spec.k = k;
                if (uniform) {
                    spec.model = UniformModel{eval_size_expr(aps_expr, n)};
                } else {
                    spec.model = MarkovianModel{grid.p_birth, grid.p_death};
                }
                try {
                    validate(spec);
                } catch (const std::invalid_argument& e) {
                    if (log != nullptr) {
                        *log << "warning: skipping cell n=" << n << " k=" << k << " arcs_per_step="
                             << aps_expr << ": " << e.what() << '\n';
                    }
                    write_skipped_row(csv, n, k, aps_expr, grid.seed);
                    continue;
                }
                bool warmed_up = false;
                for (std::size_t rep = 0; rep < grid.repetitions; ++rep) {
                    spec.seed = grid.seed + rep;
                    const auto g = generate(spec);
                    const auto params = compute_params(g);
                    if (!warmed_up) {
                        for (auto a : grid.algorithms) {
                            run_once(g, a, grid.early_stop, grid.execution);
                        }
                        warmed_up = true;
                    }
                    for (auto a : grid.algorithms) {
                        auto r = measure(g, params, a, spec.seed, grid.early_stop, grid.execution,
                                         grid.min_time_s);
                        r.cell = cell;
                        write_csv_row(csv, r);
                        records.push_back(r);
                    }
                }
                ++cell;
            }
        }
    }
    csv.flush();
    if (log != nullptr) {
        *log << "# baseline: per-source earliest-arrival step sweep (n single-source runs),"
                " not the priority-queue structure of the original earliest-journey algorithm\n";
        for (const auto& s : summarize(records)) {
            *log << "cell=" << s.cell << " algorithm=" << to_string(s.algorithm) << " n=" << s.n
                 << " k=" << s.k << " mu=" << s.max_mu << " mean_m=" << s.mean_m
                 << " median_wall_time_s=" << s.median_wall_time_s << '\n';
        }
    }
    return records;
}

std::vector<CellSummary> summarize(const std::vector<BenchRecord>& records) {
    std::map<std::tuple<std::size_t, int>, std::vector<const BenchRecord*>> groups;
    for (const auto& r : records) {
        groups[{r.cell, static_cast<int>(r.algorithm)}].push_back(&r);
    }
    std::vector<CellSummary> out;
    for (const auto& [key, rows] : groups) {
        std::vector<double> times;
        double m_sum = 0.0;
        std::size_t mu = 0;
        for (const auto* r : rows) {
            times.push_back(r->wall_time_s);
            m_sum += static_cast<double>(r->m);
            mu = std::max(mu, r->mu);
        }
        out.push_back({std::get<0>(key), rows.front()->algorithm, rows.front()->n, rows.front()->k, mu,
                       median(times), m_sum / static_cast<double>(rows.size())});
    }
    return out;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        return 0.0;
    }
    std::sort(values.begin(), values.end());
    const auto mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("loglog_slope needs two or more paired samples");
    }
    const auto count = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto lx = std::log(x[i]);
        const auto ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace journey
