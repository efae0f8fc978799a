#include "core/harness.hpp"

#include "core/baselines.hpp"
#include "core/gewa.hpp"
#include "core/random.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

namespace optbench {

namespace {

constexpr double kSuccessTolerance = 1e-2;

double param_or(const ParamMap& params, const std::string& key, double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

long long int_param(const ParamMap& params, const std::string& key, long long fallback) {
    const double v = param_or(params, key, static_cast<double>(fallback));
    if (!(std::floor(v) == v)) {
        throw ConfigError("parameter '" + key + "' must be an integer, got " + std::to_string(v));
    }
    return static_cast<long long>(v);
}

void check_keys(const std::string& algorithm, const ParamMap& params,
                std::initializer_list<const char*> accepted) {
    for (const auto& [key, value] : params) {
        bool known = false;
        for (const char* k : accepted) {
            if (key == k) { known = true; break; }
        }
        if (!known) {
            throw ConfigError("algorithm '" + algorithm + "' does not accept parameter '" + key + "'");
        }
    }
}

GewaConfig gewa_config(const ParamMap& params) {
    check_keys("gewa", params, {"pop", "alpha", "step_ratio", "sigma", "replace_count"});
    GewaConfig config;
    config.population = static_cast<int>(int_param(params, "pop", 20));
    config.alpha = param_or(params, "alpha", 0.5);
    config.step_ratio = param_or(params, "step_ratio", 0.01);
    config.sigma = param_or(params, "sigma", 1.0);
    config.replace_count = static_cast<int>(int_param(params, "replace_count", 1));
    validate(config);
    return config;
}

SaConfig sa_config(const ParamMap& params) {
    check_keys("sa", params, {"initial_temp", "cooling_rate", "moves_per_temp", "step_ratio"});
    SaConfig config;
    config.initial_temp = param_or(params, "initial_temp", 10.0);
    config.cooling_rate = param_or(params, "cooling_rate", 0.95);
    config.moves_per_temp = static_cast<int>(int_param(params, "moves_per_temp", 100));
    config.step_ratio = param_or(params, "step_ratio", 0.01);
    validate(config);
    return config;
}

PsoConfig pso_config(const ParamMap& params) {
    check_keys("pso", params, {"pop", "inertia", "cognitive", "social", "velocity_clamp_ratio"});
    PsoConfig config;
    config.swarm_size = static_cast<int>(int_param(params, "pop", 20));
    config.inertia = param_or(params, "inertia", 0.7);
    config.cognitive = param_or(params, "cognitive", 1.5);
    config.social = param_or(params, "social", 1.5);
    config.velocity_clamp_ratio = param_or(params, "velocity_clamp_ratio", 0.5);
    validate(config);
    return config;
}

HsConfig hs_config(const ParamMap& params) {
    check_keys("hs", params, {"pop", "memory_rate", "pitch_rate", "bandwidth_ratio"});
    HsConfig config;
    config.memory_size = static_cast<int>(int_param(params, "pop", 20));
    config.memory_rate = param_or(params, "memory_rate", 0.9);
    config.pitch_rate = param_or(params, "pitch_rate", 0.3);
    config.bandwidth_ratio = param_or(params, "bandwidth_ratio", 0.01);
    validate(config);
    return config;
}

DeConfig de_config(const ParamMap& params) {
    check_keys("de", params, {"pop", "differential_weight", "crossover_rate"});
    DeConfig config;
    config.pop_size = static_cast<int>(int_param(params, "pop", 20));
    config.differential_weight = param_or(params, "differential_weight", 0.8);
    config.crossover_rate = param_or(params, "crossover_rate", 0.9);
    validate(config);
    return config;
}

long long population_budget_generations(const std::string& algorithm, long long population,
                                        long long budget) {
    if (budget < population || budget % population != 0) {
        throw ConfigError(algorithm + ": budget " + std::to_string(budget) +
                          " is not a positive multiple of the population size " +
                          std::to_string(population));
    }
    return budget / population - 1;
}

}  // namespace

std::vector<std::string> algorithm_names() {
    return {"gewa", "sa", "pso", "hs", "de", "random"};
}

long long budget_generations(const AlgorithmSpec& algorithm, long long budget) {
    if (budget < 1) throw ConfigError("evaluation budget must be positive");
    if (algorithm.name == "gewa") {
        const GewaConfig config = gewa_config(algorithm.params);
        const long long remaining = budget - config.population;
        if (remaining < 0 || remaining % config.replace_count != 0) {
            throw ConfigError("gewa: budget " + std::to_string(budget) +
                              " is not population + k * replace_count");
        }
        return remaining / config.replace_count;
    }
    if (algorithm.name == "sa") {
        sa_config(algorithm.params);
        return budget - 1;  // one move per evaluation after the initial point
    }
    if (algorithm.name == "pso") {
        const PsoConfig config = pso_config(algorithm.params);
        return population_budget_generations("pso", config.swarm_size, budget);
    }
    if (algorithm.name == "hs") {
        const HsConfig config = hs_config(algorithm.params);
        if (budget < config.memory_size) {
            throw ConfigError("hs: budget " + std::to_string(budget) +
                              " is below the memory size " + std::to_string(config.memory_size));
        }
        return budget - config.memory_size;
    }
    if (algorithm.name == "de") {
        const DeConfig config = de_config(algorithm.params);
        return population_budget_generations("de", config.pop_size, budget);
    }
    if (algorithm.name == "random") {
        check_keys("random", algorithm.params, {});
        return budget;
    }
    throw UnknownNameError("unknown algorithm '" + algorithm.name + "'");
}

OptimizationResult run_algorithm(const AlgorithmSpec& algorithm, const ObjectiveProblem& problem,
                                 long long budget, std::uint64_t seed) {
    const long long generations = budget_generations(algorithm, budget);
    if (algorithm.name == "gewa") {
        GewaConfig config = gewa_config(algorithm.params);
        config.max_generations = generations;
        return gewa_run(config, problem, seed);
    }
    if (algorithm.name == "sa") {
        SaConfig config = sa_config(algorithm.params);
        config.max_evaluations = budget;
        return sa_run(config, problem, seed);
    }
    if (algorithm.name == "pso") {
        PsoConfig config = pso_config(algorithm.params);
        config.max_generations = generations;
        return pso_run(config, problem, seed);
    }
    if (algorithm.name == "hs") {
        HsConfig config = hs_config(algorithm.params);
        config.max_improvisations = generations;
        return hs_run(config, problem, seed);
    }
    if (algorithm.name == "de") {
        DeConfig config = de_config(algorithm.params);
        config.max_generations = generations;
        return de_run(config, problem, seed);
    }
    return random_search_run(budget, problem, seed);
}

std::uint64_t derive_cell_seed(std::uint64_t base_seed, std::string_view algorithm,
                               std::string_view problem, std::uint64_t run_index) {
    constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
    constexpr std::uint64_t kFnvPrime = 1099511628211ULL;
    const auto fnv1a = [](std::string_view text) {
        std::uint64_t h = kFnvOffset;
        for (unsigned char c : text) {
            h ^= c;
            h *= kFnvPrime;
        }
        return h;
    };
    const auto mix = [](std::uint64_t x) {
        std::uint64_t state = x;
        return splitmix64_next(state);
    };
    std::uint64_t h = mix(base_seed ^ fnv1a(algorithm));
    h = mix(h ^ fnv1a(problem));
    return mix(h ^ run_index);
}

namespace {

std::vector<TracePoint> thin_trace(const std::vector<GenerationTrace>& trace, int stride) {
    std::vector<TracePoint> out;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const bool last = i + 1 == trace.size();
        if (trace[i].generation % stride == 0 || last) {
            out.push_back(TracePoint{trace[i].evaluations_so_far, trace[i].best_fitness,
                                     trace[i].diversity});
        }
    }
    return out;
}

struct Cell {
    const AlgorithmSpec* algorithm;
    const ProblemSpec* problem;
    std::uint64_t seed;
};

void validate_spec(const ExperimentSpec& spec) {
    if (spec.algorithms.empty()) throw ConfigError("experiment: no algorithms given");
    if (spec.problems.empty()) throw ConfigError("experiment: no problems given");
    if (spec.seeds.empty() && spec.run_count < 1) {
        throw ConfigError("experiment: run_count must be positive");
    }
    if (spec.trace_stride < 1) throw ConfigError("experiment: trace_stride must be positive");
    if (spec.workers < 1) throw ConfigError("experiment: workers must be positive");
    for (const auto& problem : spec.problems) {
        make_problem(problem.name, problem.dim);  // resolves or throws
    }
    for (const auto& algorithm : spec.algorithms) {
        for (const auto& problem : spec.problems) {
            try {
                budget_generations(algorithm, spec.evaluation_budget);
            } catch (const UnknownNameError&) {
                throw;
            } catch (const ConfigError& e) {
                throw ConfigError("experiment cell (" + algorithm.name + ", " + problem.name + ":" +
                                  std::to_string(problem.dim) + "): " + e.what());
            }
        }
    }
}

}  // namespace

std::vector<RunRecord> run_experiment(const ExperimentSpec& spec) {
    validate_spec(spec);

    const std::size_t runs = spec.seeds.empty() ? static_cast<std::size_t>(spec.run_count)
                                                : spec.seeds.size();
    std::vector<Cell> cells;
    cells.reserve(spec.algorithms.size() * spec.problems.size() * runs);
    for (const auto& algorithm : spec.algorithms) {
        for (const auto& problem : spec.problems) {
            for (std::size_t k = 0; k < runs; ++k) {
                const std::uint64_t base = spec.seeds.empty() ? spec.base_seed : spec.seeds[k];
                cells.push_back(Cell{&algorithm, &problem,
                                     derive_cell_seed(base, algorithm.name, problem.name, k)});
            }
        }
    }

    std::vector<RunRecord> records(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            try {
                const Cell& cell = cells[i];
                const ObjectiveProblem problem = make_problem(cell.problem->name, cell.problem->dim);
                const auto start = std::chrono::steady_clock::now();
                const OptimizationResult result =
                    run_algorithm(*cell.algorithm, problem, spec.evaluation_budget, cell.seed);
                const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
                records[i] = RunRecord{cell.algorithm->name,
                                       cell.problem->name,
                                       static_cast<int>(cell.problem->dim),
                                       cell.seed,
                                       result.best_fitness,
                                       result.evaluations,
                                       elapsed.count(),
                                       thin_trace(result.trace, spec.trace_stride)};
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const std::size_t worker_count = std::min<std::size_t>(spec.workers, cells.size());
    if (worker_count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (std::size_t w = 0; w < worker_count; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
        return std::tie(a.algorithm, a.problem, a.dim, a.seed) <
               std::tie(b.algorithm, b.problem, b.dim, b.seed);
    });
    return records;
}

SummaryStats summarize(const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summarize: no records");

    std::map<std::tuple<std::string, std::string, int>, std::vector<double>> cells;
    for (const auto& record : records) {
        cells[{record.algorithm, record.problem, record.dim}].push_back(record.final_best);
    }

    SummaryStats summary;
    for (auto& [key, finals] : cells) {
        std::sort(finals.begin(), finals.end());
        const std::size_t n = finals.size();
        CellStats stats;
        stats.algorithm = std::get<0>(key);
        stats.problem = std::get<1>(key);
        stats.dim = std::get<2>(key);
        stats.runs = n;
        stats.min = finals.front();
        stats.max = finals.back();
        stats.median = n % 2 == 1 ? finals[n / 2] : 0.5 * (finals[n / 2 - 1] + finals[n / 2]);
        double sum = 0.0;
        for (double v : finals) sum += v;
        stats.mean = sum / static_cast<double>(n);
        double sq = 0.0;
        for (double v : finals) sq += (v - stats.mean) * (v - stats.mean);
        stats.stddev = std::sqrt(sq / static_cast<double>(n));
        try {
            const ObjectiveProblem problem = make_problem(stats.problem, static_cast<std::size_t>(stats.dim));
            if (problem.known_optimum) {
                const double tolerance = problem.known_optimum->value + kSuccessTolerance;
                std::size_t hits = 0;
                for (double v : finals) {
                    if (v <= tolerance) ++hits;
                }
                stats.success_rate = static_cast<double>(hits) / static_cast<double>(n);
            }
        } catch (const UnknownNameError&) {
            // foreign problem name in imported records: no success rate
        }
        summary.cells.push_back(std::move(stats));
    }
    return summary;
}

namespace {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void ensure_directory(const std::filesystem::path& directory) {
    if (directory.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec || !std::filesystem::is_directory(directory)) {
        throw IoError("cannot create directory " + directory.string());
    }
}

void write_or_remove(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (out) out << content;
    if (!out) {
        out.close();
        std::error_code ec;
        std::filesystem::remove(path, ec);
        throw IoError("failed to write " + path);
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

constexpr const char* kRecordsHeader = "algorithm,problem,dim,seed,evaluations,final_best,wall_time_s";
constexpr const char* kTraceHeader = "algorithm,problem,seed,evaluations_so_far,best_fitness,diversity";

}  // namespace

void export_csv(const std::vector<RunRecord>& records, const std::string& directory) {
    ensure_directory(directory);

    std::string body = kRecordsHeader;
    body += '\n';
    for (const auto& r : records) {
        body += r.algorithm + ',' + r.problem + ',' + std::to_string(r.dim) + ',' +
                std::to_string(r.seed) + ',' + std::to_string(r.evaluations) + ',' +
                format_double(r.final_best) + ',' + format_double(r.wall_time_s) + '\n';
    }
    write_or_remove((std::filesystem::path(directory) / "records.csv").string(), body);

    std::string trace = kTraceHeader;
    trace += '\n';
    for (const auto& r : records) {
        for (const auto& point : r.trace) {
            trace += r.algorithm + ',' + r.problem + ',' + std::to_string(r.seed) + ',' +
                     std::to_string(point.evaluations_so_far) + ',' +
                     format_double(point.best_fitness) + ',' +
                     (point.diversity ? format_double(*point.diversity) : std::string()) + '\n';
        }
    }
    write_or_remove((std::filesystem::path(directory) / "trace.csv").string(), trace);
}

namespace {

nlohmann::json record_to_json(const RunRecord& r) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& point : r.trace) {
        nlohmann::json entry = {
            {"evaluations_so_far", point.evaluations_so_far},
            {"best_fitness", point.best_fitness},
            {"diversity", nullptr},
        };
        if (point.diversity) entry["diversity"] = *point.diversity;
        trace.push_back(std::move(entry));
    }
    return nlohmann::json{
        {"algorithm", r.algorithm}, {"problem", r.problem},       {"dim", r.dim},
        {"seed", r.seed},           {"final_best", r.final_best}, {"evaluations", r.evaluations},
        {"wall_time_s", r.wall_time_s}, {"trace", std::move(trace)},
    };
}

nlohmann::json cell_to_json(const CellStats& c) {
    nlohmann::json cell = {
        {"algorithm", c.algorithm}, {"problem", c.problem}, {"dim", c.dim},
        {"runs", c.runs},           {"min", c.min},         {"max", c.max},
        {"median", c.median},       {"mean", c.mean},       {"stddev", c.stddev},
    };
    if (c.success_rate) cell["success_rate"] = *c.success_rate;
    return cell;
}

}  // namespace

void export_json(const std::vector<RunRecord>& records, const SummaryStats& summary,
                 const std::string& path) {
    nlohmann::json doc;
    doc["records"] = nlohmann::json::array();
    for (const auto& r : records) doc["records"].push_back(record_to_json(r));
    doc["summary"]["cells"] = nlohmann::json::array();
    for (const auto& c : summary.cells) doc["summary"]["cells"].push_back(cell_to_json(c));

    ensure_directory(std::filesystem::path(path).parent_path());
    write_or_remove(path, doc.dump(2) + "\n");
}

std::vector<RunRecord> import_records_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("failed to open " + path);
    std::string line;
    if (!std::getline(in, line) || line != kRecordsHeader) {
        throw std::invalid_argument(path + ": not a records.csv file (bad header)");
    }
    std::vector<RunRecord> records;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 7) {
            throw std::invalid_argument(path + ": malformed row " + std::to_string(row));
        }
        try {
            RunRecord r;
            r.algorithm = fields[0];
            r.problem = fields[1];
            r.dim = std::stoi(fields[2]);
            r.seed = std::stoull(fields[3]);
            r.evaluations = std::stoll(fields[4]);
            r.final_best = std::strtod(fields[5].c_str(), nullptr);
            r.wall_time_s = std::strtod(fields[6].c_str(), nullptr);
            records.push_back(std::move(r));
        } catch (const std::exception&) {
            throw std::invalid_argument(path + ": unparsable number in row " + std::to_string(row));
        }
    }
    return records;
}

std::pair<std::vector<RunRecord>, SummaryStats> import_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("failed to open " + path);
    nlohmann::json doc;
    in >> doc;

    std::vector<RunRecord> records;
    for (const auto& j : doc.at("records")) {
        RunRecord r;
        r.algorithm = j.at("algorithm").get<std::string>();
        r.problem = j.at("problem").get<std::string>();
        r.dim = j.at("dim").get<int>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.final_best = j.at("final_best").get<double>();
        r.evaluations = j.at("evaluations").get<long long>();
        r.wall_time_s = j.at("wall_time_s").get<double>();
        for (const auto& t : j.at("trace")) {
            TracePoint point;
            point.evaluations_so_far = t.at("evaluations_so_far").get<long long>();
            point.best_fitness = t.at("best_fitness").get<double>();
            if (!t.at("diversity").is_null()) point.diversity = t.at("diversity").get<double>();
            r.trace.push_back(point);
        }
        records.push_back(std::move(r));
    }

    SummaryStats summary;
    for (const auto& j : doc.at("summary").at("cells")) {
        CellStats c;
        c.algorithm = j.at("algorithm").get<std::string>();
        c.problem = j.at("problem").get<std::string>();
        c.dim = j.at("dim").get<int>();
        c.runs = j.at("runs").get<std::size_t>();
        c.min = j.at("min").get<double>();
        c.max = j.at("max").get<double>();
        c.median = j.at("median").get<double>();
        c.mean = j.at("mean").get<double>();
        c.stddev = j.at("stddev").get<double>();
        if (j.contains("success_rate")) c.success_rate = j.at("success_rate").get<double>();
        summary.cells.push_back(std::move(c));
    }
    return {std::move(records), summary};
}

std::string format_summary(const SummaryStats& summary) {
    std::ostringstream out;
    out << "algorithm     problem         dim  runs  min           median        mean          std           success\n";
    for (const auto& c : summary.cells) {
        char success[32] = "-";
        if (c.success_rate) std::snprintf(success, sizeof(success), "%.2f", *c.success_rate);
        char line[256];
        std::snprintf(line, sizeof(line), "%-12s  %-14s  %3d  %4zu  %-12.4g  %-12.4g  %-12.4g  %-12.4g  %s\n",
                      c.algorithm.c_str(), c.problem.c_str(), c.dim, c.runs, c.min, c.median,
                      c.mean, c.stddev, success);
        out << line;
    }
    return out.str();
}

}  // namespace optbench
