#pragma once

#include "core/diversity.hpp"
#include "core/problem.hpp"
#include "core/result.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace optbench {

using ParamMap = std::map<std::string, double>;

struct AlgorithmSpec {
    std::string name;
    ParamMap params;
};

struct ProblemSpec {
    std::string name;
    std::size_t dim = 0;
};

// Factorial experiment: algorithms x problems x seeds, one common evaluation
// budget. Seeds come either from an explicit list (one entry per run) or
// from (base_seed, run_count); per-cell seeds are derived from these, never
// used raw, so no two cells share a stream.
struct ExperimentSpec {
    std::vector<AlgorithmSpec> algorithms;
    std::vector<ProblemSpec> problems;
    std::vector<std::uint64_t> seeds;  // explicit run seeds; empty -> base_seed/run_count
    std::uint64_t base_seed = 42;
    int run_count = 25;
    long long evaluation_budget = 20000;
    int trace_stride = 10;  // keep every k-th generation plus the final one
    int workers = 1;
};

struct TracePoint {
    long long evaluations_so_far = 0;
    double best_fitness = 0.0;
    std::optional<double> diversity;

    bool operator==(const TracePoint&) const = default;
};

struct RunRecord {
    std::string algorithm;
    std::string problem;
    int dim = 0;
    std::uint64_t seed = 0;
    double final_best = 0.0;
    long long evaluations = 0;
    double wall_time_s = 0.0;
    std::vector<TracePoint> trace;

    bool operator==(const RunRecord&) const = default;
};

struct CellStats {
    std::string algorithm;
    std::string problem;
    int dim = 0;
    std::size_t runs = 0;
    double min = 0.0;
    double max = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
    std::optional<double> success_rate;  // only where a known optimum exists

    bool operator==(const CellStats&) const = default;
};

struct SummaryStats {
    std::vector<CellStats> cells;

    bool operator==(const SummaryStats&) const = default;
};

// Algorithms runnable by name ("gewa", "sa", "pso", "hs", "de", "random").
std::vector<std::string> algorithm_names();

// One run of a named algorithm under an exact evaluation budget. Throws
// UnknownNameError for unknown algorithms, ConfigError for unknown parameter
// keys or budgets the algorithm cannot hit exactly.
OptimizationResult run_algorithm(const AlgorithmSpec& algorithm, const ObjectiveProblem& problem,
                                 long long evaluation_budget, std::uint64_t seed);

// The generation count (improvisations, moves, ...) a budget maps onto;
// validates representability without running anything.
long long budget_generations(const AlgorithmSpec& algorithm, long long evaluation_budget);

// Deterministic per-cell seed, collision-free across (algorithm, problem,
// run index) triples for any fixed base.
std::uint64_t derive_cell_seed(std::uint64_t base_seed, std::string_view algorithm,
                               std::string_view problem, std::uint64_t run_index);

// Runs every cell of the experiment (in parallel up to spec.workers) and
// returns records sorted by (algorithm, problem, dim, seed). The whole spec
// is validated before the first run starts.
std::vector<RunRecord> run_experiment(const ExperimentSpec& spec);

// Order statistics of final_best per (algorithm, problem, dim) cell. The
// median of an even-sized sample is the mean of the two central values;
// stddev is the population standard deviation. success_rate counts runs
// with final_best within 1e-2 of the known optimum, where one exists.
SummaryStats summarize(const std::vector<RunRecord>& records);

// records.csv + trace.csv under the given directory (created if missing).
// Numbers are written with full round-trip precision; on failure the partial
// file is removed and IoError is thrown.
void export_csv(const std::vector<RunRecord>& records, const std::string& directory);

// Single JSON document with keys "records" and "summary".
void export_json(const std::vector<RunRecord>& records, const SummaryStats& summary,
                 const std::string& path);

std::vector<RunRecord> import_records_csv(const std::string& path);  // no traces
std::pair<std::vector<RunRecord>, SummaryStats> import_json(const std::string& path);

// Human-readable summary table (also what `optbench summarize` prints).
std::string format_summary(const SummaryStats& summary);

}  // namespace optbench
