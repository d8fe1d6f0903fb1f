#ifndef JOURNEY_BENCH_HPP_
#define JOURNEY_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "journey/execution.hpp"
#include "journey/generators.hpp"
#include "journey/graph.hpp"

namespace journey {

enum class Algorithm { dedicated_strict, dedicated_nonstrict, baseline };

const char* to_string(Algorithm algorithm) noexcept;
// Throws std::invalid_argument for an unknown name.
Algorithm parse_algorithm(std::string_view name);

struct BenchRecord {
    Algorithm algorithm = Algorithm::dedicated_strict;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t mu = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;
    std::optional<Step> stop_step;
    bool connected = false;
    std::size_t cell = 0;  // grid cell index, not serialized
};

inline constexpr const char* kCsvHeader = "algorithm,n,k,mu,m,seed,wall_time_s,stop_step,connected";

void write_csv_row(std::ostream& out, const BenchRecord& record);
// Row for a grid cell that cannot be generated. Timing fields stay empty.
void write_skipped_row(std::ostream& out, std::size_t n, std::size_t k,
                       const std::string& arcs_per_step, std::uint64_t seed);

/**
 * Parameter expression in terms of n: an integer, or one of
 * log2n = ceil(log2 n), sqrtn = ceil(sqrt n), n, nlog2n = n*ceil(log2 n), n2 = n*n.
 */
std::size_t eval_size_expr(std::string_view expr, std::size_t n);

struct BenchGrid {
    std::vector<std::size_t> n_values;
    std::vector<std::string> k_exprs;
    // Uniform model when non-empty, otherwise Markovian with the p's below.
    std::vector<std::string> arcs_per_step_exprs;
    double p_birth = 0.5;
    double p_death = 0.5;
    std::vector<Algorithm> algorithms{Algorithm::dedicated_strict, Algorithm::baseline};
    std::size_t repetitions = 3;
    std::uint64_t seed = 1;
    bool early_stop = false;
    Execution execution = Execution::serial;
    // Each measurement repeats the closure until at least this much time has
    // passed and reports the mean per run; 0 means a single run.
    double min_time_s = 0.0;
};

/// Seconds per closure computation on a materialized graph, using a
/// monotonic clock. Generation and parsing are never inside the timed region.
double time_closure(const EvolvingGraph& g, Algorithm algorithm, bool early_stop,
                    Execution exec, double min_time_s, std::optional<Step>* stop_step = nullptr,
                    bool* connected = nullptr);

BenchRecord measure(const EvolvingGraph& g, const GraphParams& params, Algorithm algorithm,
                    std::uint64_t seed, bool early_stop, Execution exec, double min_time_s);

struct CellSummary {
    std::size_t cell;
    Algorithm algorithm;
    std::size_t n;
    std::size_t k;
    std::size_t max_mu;
    double median_wall_time_s;
    double mean_m;
};

/**
 * Runs every grid cell x repetition x algorithm. Repetition r uses seed
 * grid.seed + r and all algorithms share that instance. A warm-up run per
 * cell is discarded. Rows go to `csv` (header first); per-cell medians and
 * warnings go to `log` when non-null.
 */
std::vector<BenchRecord> run_bench(const BenchGrid& grid, std::ostream& csv, std::ostream* log);

std::vector<CellSummary> summarize(const std::vector<BenchRecord>& records);

double median(std::vector<double> values);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace journey

#endif  // JOURNEY_BENCH_HPP_
