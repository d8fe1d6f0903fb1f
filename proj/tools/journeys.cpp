// Command-line front end: close, query, gen, params, arrival, bench.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "journey/journey.hpp"

namespace {

using namespace journey;

// Exit codes: 0 success (or query true), 1 query false, 2 error.
constexpr int kError = 2;

class Input {
 public:
    explicit Input(const std::string& path) {
        if (path.empty() || path == "-") {
            stream_ = &std::cin;
        } else {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot open '" + path + "'");
            }
            stream_ = &file_;
        }
    }
    std::istream& get() { return *stream_; }

 private:
    std::ifstream file_;
    std::istream* stream_ = nullptr;
};

class Output {
 public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") {
            stream_ = &std::cout;
        } else {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot write '" + path + "'");
            }
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

 private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

struct FlavorFlags {
    bool strict = false;
    bool non_strict = false;

    void add(CLI::App* cmd) {
        auto* s = cmd->add_flag("--strict", strict, "Strict journeys (one arc per step, default)");
        auto* ns = cmd->add_flag("--non-strict", non_strict, "Non-strict journeys (any number of arcs per step)");
        s->excludes(ns);
    }
    Flavor flavor() const { return non_strict ? Flavor::non_strict : Flavor::strict; }
};

void print_summary(std::ostream& out, std::size_t n, const GraphParams& p, const Closure& c) {
    out << "n=" << n << " k=" << p.k << " mu=" << p.mu << " m=" << p.m
        << " connected=" << (c.is_connected() ? "true" : "false") << " stop_step=";
    if (c.stop_step()) {
        out << *c.stop_step();
    } else {
        out << "none";
    }
    out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Journey closures of untimed directed evolving graphs"};
    app.require_subcommand(1);

    // close
    auto* close = app.add_subcommand("close", "Compute the strict or non-strict journey closure");
    std::string close_input = "-";
    std::string close_output = "-";
    std::string close_format = "closure";
    std::string close_algorithm = "dedicated";
    bool early_stop = false;
    bool close_parallel = false;
    FlavorFlags close_flavor;
    close->add_option("input", close_input, "Evolving graph file ('-' for stdin)");
    close_flavor.add(close);
    close->add_flag("--early-stop", early_stop, "Stop reading once the graph is temporally connected");
    close->add_option("--output,-o", close_output, "Output path ('-' for stdout)");
    close->add_option("--format", close_format, "closure: pair list; csv: one benchmark row")
        ->check(CLI::IsMember({"closure", "csv"}));
    close->add_option("--algorithm", close_algorithm, "dedicated or baseline")
        ->check(CLI::IsMember({"dedicated", "baseline"}));
    close->add_flag("--parallel", close_parallel, "Use the OpenMP kernels");

    // query
    auto* query_cmd = app.add_subcommand("query", "Answer u ~> v from a closure file");
    std::string closure_file;
    VertexId qu = 0;
    VertexId qv = 0;
    query_cmd->add_option("closure", closure_file, "Closure file written by 'close'")->required();
    query_cmd->add_option("u", qu, "Source vertex")->required();
    query_cmd->add_option("v", qv, "Target vertex")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a seeded synthetic evolving graph");
    GenSpec spec;
    std::string model = "uniform";
    std::size_t arcs_per_step = 1;
    double p_birth = 0.5;
    double p_death = 0.5;
    std::string gen_output = "-";
    gen->add_option("--n", spec.n, "Vertex count")->required();
    gen->add_option("--k", spec.k, "Step count")->required();
    gen->add_option("--model", model, "uniform or markovian")->check(CLI::IsMember({"uniform", "markovian"}));
    gen->add_option("--arcs-per-step", arcs_per_step, "Arcs per snapshot (uniform)");
    gen->add_option("--p-birth", p_birth, "Absent -> present probability (markovian)");
    gen->add_option("--p-death", p_death, "Present -> absent probability (markovian)");
    gen->add_option("--seed", spec.seed, "64-bit seed");
    gen->add_option("--output,-o", gen_output, "Output path ('-' for stdout)");

    // params
    auto* params_cmd = app.add_subcommand("params", "Print n, k, mu and m of an evolving graph");
    std::string params_input = "-";
    params_cmd->add_option("input", params_input, "Evolving graph file ('-' for stdin)");

    // arrival
    auto* arrival_cmd = app.add_subcommand("arrival", "Earliest-arrival table from one source");
    std::string arrival_input = "-";
    VertexId arrival_source = 0;
    FlavorFlags arrival_flavor;
    std::string arrival_output = "-";
    arrival_cmd->add_option("input", arrival_input, "Evolving graph file ('-' for stdin)");
    arrival_cmd->add_option("--source", arrival_source, "Source vertex")->required();
    arrival_flavor.add(arrival_cmd);
    arrival_cmd->add_option("--output,-o", arrival_output, "Output path ('-' for stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "Benchmark the dedicated engines against the baseline");
    BenchGrid grid;
    std::vector<std::string> algorithms{"dedicated-strict", "baseline"};
    std::string bench_output = "-";
    std::string bench_format = "csv";
    bool bench_parallel = false;
    bench->add_option("--n", grid.n_values, "Vertex counts")->delimiter(',')->required();
    bench->add_option("--k", grid.k_exprs, "Step counts or expressions of n (log2n, sqrtn, n, nlog2n, n2)")
        ->delimiter(',')
        ->required();
    bench->add_option("--arcs-per-step", grid.arcs_per_step_exprs,
                      "Uniform model arcs per step (integers or expressions); omit for markovian")
        ->delimiter(',');
    bench->add_option("--p-birth", grid.p_birth, "Markovian birth probability");
    bench->add_option("--p-death", grid.p_death, "Markovian death probability");
    bench->add_option("--algorithms", algorithms, "dedicated-strict, dedicated-nonstrict, baseline")
        ->delimiter(',');
    bench->add_option("--reps", grid.repetitions, "Repetitions (seeds) per cell");
    bench->add_option("--seed", grid.seed, "Seed of the first repetition");
    bench->add_flag("--early-stop", grid.early_stop, "Early stop for the dedicated engines");
    bench->add_option("--min-time", grid.min_time_s, "Repeat each measurement for at least this many seconds");
    bench->add_flag("--parallel", bench_parallel, "Use the OpenMP kernels");
    bench->add_option("--output,-o", bench_output, "CSV path ('-' for stdout)");
    bench->add_option("--format", bench_format, "Output format")->check(CLI::IsMember({"csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        if (*close) {
            Input in(close_input);
            const auto flavor = close_flavor.flavor();
            const auto exec = close_parallel ? Execution::parallel : Execution::serial;
            const auto start = std::chrono::steady_clock::now();
            Closure closure;
            std::size_t n = 0;
            GraphParams params;
            if (close_algorithm == "baseline") {
                ParseStats stats;
                const auto g = parse_evolving_graph(in.get(), &stats);
                n = g.n;
                params = compute_params(g);
                closure = baseline_closure(g, flavor, exec);
            } else {
                SnapshotReader reader(in.get());
                n = reader.vertex_count();
                RunStats stats;
                RunOptions options;
                options.early_stop = early_stop;
                options.execution = exec;
                options.stats = &stats;
                closure = journey_closure(reader, flavor, options);
                params = stats.params;
                if (reader.stats().duplicates_dropped + reader.stats().self_loops_dropped > 0) {
                    std::cerr << "warning: dropped " << reader.stats().duplicates_dropped
                              << " duplicate arcs and " << reader.stats().self_loops_dropped
                              << " self-loops\n";
                }
            }
            const auto elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            Output out(close_output);
            if (close_format == "csv") {
                BenchRecord r;
                r.algorithm = close_algorithm == "baseline"
                                  ? Algorithm::baseline
                                  : (flavor == Flavor::strict ? Algorithm::dedicated_strict
                                                              : Algorithm::dedicated_nonstrict);
                r.n = n;
                r.k = params.k;
                r.mu = params.mu;
                r.m = params.m;
                r.wall_time_s = elapsed;
                r.stop_step = closure.stop_step();
                r.connected = closure.is_connected();
                out.get() << kCsvHeader << '\n';
                write_csv_row(out.get(), r);
            } else {
                write_closure(out.get(), closure);
            }
            print_summary(std::cerr, n, params, closure);
            return 0;
        }
        if (*query_cmd) {
            Input in(closure_file);
            const auto closure = read_closure(in.get());
            const bool answer = closure.query(qu, qv);
            std::cout << (answer ? "true" : "false") << '\n';
            return answer ? 0 : 1;
        }
        if (*gen) {
            if (model == "uniform") {
                spec.model = UniformModel{arcs_per_step};
            } else {
                spec.model = MarkovianModel{p_birth, p_death};
            }
            GeneratedStream stream(spec);
            Output out(gen_output);
            write_header(out.get(), spec.n, describe(spec));
            while (const auto* snap = stream.next()) {
                write_snapshot(out.get(), *snap);
            }
            return 0;
        }
        if (*params_cmd) {
            Input in(params_input);
            SnapshotReader reader(in.get());
            ParamsAccumulator acc(reader.vertex_count());
            while (const auto* snap = reader.next()) {
                acc.add(*snap);
            }
            const auto& p = acc.params();
            std::cout << "n=" << reader.vertex_count() << " k=" << p.k << " mu=" << p.mu << " m=" << p.m
                      << '\n';
            return 0;
        }
        if (*arrival_cmd) {
            Input in(arrival_input);
            const auto g = parse_evolving_graph(in.get());
            const auto table = earliest_arrival(g, arrival_source, arrival_flavor.flavor());
            Output out(arrival_output);
            write_arrival_table(out.get(), table);
            return 0;
        }
        if (*bench) {
            grid.algorithms.clear();
            for (const auto& name : algorithms) {
                grid.algorithms.push_back(parse_algorithm(name));
            }
            grid.execution = bench_parallel ? Execution::parallel : Execution::serial;
            Output out(bench_output);
            run_bench(grid, out.get(), &std::cerr);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
