// optbench command-line front end. Talks to the shared library strictly
// through the public C API.

#include <optbench.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

struct RunOptions {
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;  // name:dim
    long long budget = 20000;
    int runs = 25;
    std::uint64_t seed = 42;
    std::vector<std::uint64_t> run_seeds;  // explicit per-run seeds
    std::vector<std::string> params;       // algo.key=value
    double alpha = 0.5;
    int pop = 20;
    double step_ratio = 0.01;
    std::string out_dir = "results";
    int workers = 1;
    int trace_stride = 10;
};

[[noreturn]] void die(const std::string& context) {
    std::fprintf(stderr, "error: %s: %s\n", context.c_str(), optbench_last_error());
    std::exit(1);
}

void check(optbench_status status, const std::string& context) {
    if (status != OPTBENCH_OK) die(context);
}

bool parse_problem(const std::string& text, std::string& name, size_t& dim) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) return false;
    name = text.substr(0, colon);
    try {
        const int value = std::stoi(text.substr(colon + 1));
        if (value < 1) return false;
        dim = static_cast<size_t>(value);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool parse_param(const std::string& text, std::string& algo, std::string& key, double& value) {
    const auto dot = text.find('.');
    const auto eq = text.find('=', dot == std::string::npos ? 0 : dot);
    if (dot == std::string::npos || eq == std::string::npos || dot == 0 || eq <= dot + 1) {
        return false;
    }
    algo = text.substr(0, dot);
    key = text.substr(dot + 1, eq - dot - 1);
    try {
        value = std::stod(text.substr(eq + 1));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool accepts_key(const std::string& algo, const std::string& key) {
    if (key == "pop") return algo == "gewa" || algo == "pso" || algo == "hs" || algo == "de";
    if (key == "alpha") return algo == "gewa";
    if (key == "step_ratio") return algo == "gewa" || algo == "sa";
    return false;
}

int command_list() {
    std::printf("algorithms:\n");
    for (size_t i = 0; i < optbench_algorithm_count(); ++i) {
        std::printf("  %s\n", optbench_algorithm_name(i));
    }
    std::printf("problems:\n");
    for (size_t i = 0; i < optbench_problem_count(); ++i) {
        std::printf("  %s\n", optbench_problem_name(i));
    }
    return 0;
}

bool has_duplicates(const std::vector<std::string>& values, const char* what) {
    for (size_t i = 0; i < values.size(); ++i) {
        for (size_t j = i + 1; j < values.size(); ++j) {
            if (values[i] == values[j]) {
                std::fprintf(stderr, "error: duplicate %s '%s'\n", what, values[i].c_str());
                return true;
            }
        }
    }
    return false;
}

int command_run(const RunOptions& options, bool seed_given, bool runs_given) {
    if (has_duplicates(options.algorithms, "--algo") ||
        has_duplicates(options.problems, "--problem")) {
        return 1;
    }

    optbench_experiment* raw = nullptr;
    check(optbench_experiment_create(&raw), "creating experiment");
    std::unique_ptr<optbench_experiment, decltype(&optbench_experiment_destroy)> experiment(
        raw, &optbench_experiment_destroy);

    for (const auto& algo : options.algorithms) {
        check(optbench_experiment_add_algorithm(experiment.get(), algo.c_str()),
              "adding algorithm '" + algo + "'");
        // blanket knobs apply wherever the algorithm takes them
        if (accepts_key(algo, "pop")) {
            check(optbench_experiment_set_algorithm_param(experiment.get(), algo.c_str(), "pop",
                                                          options.pop), "setting pop");
        }
        if (accepts_key(algo, "alpha")) {
            check(optbench_experiment_set_algorithm_param(experiment.get(), algo.c_str(), "alpha",
                                                          options.alpha), "setting alpha");
        }
        if (accepts_key(algo, "step_ratio")) {
            check(optbench_experiment_set_algorithm_param(experiment.get(), algo.c_str(),
                                                          "step_ratio", options.step_ratio),
                  "setting step_ratio");
        }
    }
    for (const auto& text : options.params) {
        std::string algo, key;
        double value = 0.0;
        if (!parse_param(text, algo, key, value)) {
            std::fprintf(stderr, "error: bad --param '%s' (expected algo.key=value)\n", text.c_str());
            return 1;
        }
        check(optbench_experiment_set_algorithm_param(experiment.get(), algo.c_str(), key.c_str(),
                                                      value), "setting --param " + text);
    }
    for (const auto& text : options.problems) {
        std::string name;
        size_t dim = 0;
        if (!parse_problem(text, name, dim)) {
            std::fprintf(stderr, "error: bad --problem '%s' (expected name:dim)\n", text.c_str());
            return 1;
        }
        check(optbench_experiment_add_problem(experiment.get(), name.c_str(), dim),
              "adding problem '" + text + "'");
    }

    if (!options.run_seeds.empty()) {
        if (seed_given || runs_given) {
            std::fprintf(stderr, "error: --run-seed cannot be combined with --seed/--runs\n");
            return 1;
        }
        for (std::uint64_t s : options.run_seeds) {
            check(optbench_experiment_add_seed(experiment.get(), s), "adding run seed");
        }
    } else {
        check(optbench_experiment_set_seeding(experiment.get(), options.seed, options.runs),
              "setting seeds");
    }
    check(optbench_experiment_set_budget(experiment.get(), options.budget), "setting budget");
    check(optbench_experiment_set_trace_stride(experiment.get(), options.trace_stride),
          "setting trace stride");
    check(optbench_experiment_set_workers(experiment.get(), options.workers), "setting workers");

    optbench_records* raw_records = nullptr;
    check(optbench_experiment_run(experiment.get(), &raw_records), "running experiment");
    std::unique_ptr<optbench_records, decltype(&optbench_records_destroy)> records(
        raw_records, &optbench_records_destroy);

    check(optbench_records_export_csv(records.get(), options.out_dir.c_str()), "writing csv");
    const std::string json_path = options.out_dir + "/results.json";
    check(optbench_records_export_json(records.get(), json_path.c_str()), "writing json");

    std::printf("wrote %zu records to %s (records.csv, trace.csv, results.json)\n",
                optbench_records_count(records.get()), options.out_dir.c_str());

    const std::string csv_path = options.out_dir + "/records.csv";
    char* table = optbench_summarize_csv(csv_path.c_str());
    if (!table) die("summarizing " + csv_path);
    std::printf("%s", table);
    optbench_string_free(table);
    return 0;
}

int command_summarize(const std::string& path) {
    char* table = optbench_summarize_csv(path.c_str());
    if (!table) die("summarizing " + path);
    std::printf("%s", table);
    optbench_string_free(table);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optbench: deterministic black-box optimization benchmarks"};
    app.set_version_flag("--version", optbench_version());
    app.require_subcommand(1);
    // run options live in a [run] section of the INI; flags override the file
    app.set_config("--config", "", "read options from an INI file (flags override it)");

    RunOptions options;
    auto* run = app.add_subcommand("run", "run an algorithms x problems x seeds experiment");
    run->add_option("--algo", options.algorithms, "algorithm name (repeatable)")->required();
    run->add_option("--problem", options.problems, "problem as name:dim (repeatable)")->required();
    run->add_option("--budget", options.budget, "objective evaluations per run");
    auto* runs_opt = run->add_option("--runs", options.runs, "runs per (algorithm, problem) cell");
    auto* seed_opt = run->add_option("--seed", options.seed, "base seed for run derivation");
    run->add_option("--run-seed", options.run_seeds, "explicit per-run seed (repeatable)");
    run->add_option("--alpha", options.alpha, "gewa local/global mix");
    run->add_option("--pop", options.pop, "population size where applicable");
    run->add_option("--step-ratio", options.step_ratio, "walk step as a fraction of range");
    run->add_option("--param", options.params, "extra parameter as algo.key=value (repeatable)");
    run->add_option("--out", options.out_dir, "output directory");
    run->add_option("--workers", options.workers, "parallel worker threads");
    run->add_option("--trace-stride", options.trace_stride, "record every k-th generation");

    std::string summarize_path;
    auto* summarize = app.add_subcommand("summarize", "print per-cell statistics of a records.csv");
    summarize->add_option("csv", summarize_path, "path to records.csv")->required();

    auto* list = app.add_subcommand("list", "list registered algorithms and problems");

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) return command_list();
    if (summarize->parsed()) return command_summarize(summarize_path);
    return command_run(options, seed_opt->count() > 0, runs_opt->count() > 0);
}
