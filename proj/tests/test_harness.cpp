#include "core/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

using namespace optbench;

namespace {

ExperimentSpec tiny_experiment() {
    ExperimentSpec spec;
    spec.algorithms = {{"gewa", {{"pop", 10.0}}}, {"random", {}}};
    spec.problems = {{"sphere", 2}, {"rastrigin", 2}};
    spec.base_seed = 7;
    spec.run_count = 5;
    spec.evaluation_budget = 200;
    spec.trace_stride = 50;
    return spec;
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name)
        : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("diversity") {
    CHECK(diversity({{1.0, 2.0}, {1.0, 2.0}}, {1.0, 2.0}) == 0.0);
    CHECK(diversity({{0.0, 0.0}, {0.0, 2.0}}, {0.0, 0.0}) == 1.0);
    CHECK(diversity({{3.0, 0.0}}, {0.0, 0.0}) == 3.0);
    CHECK_THROWS_AS(diversity({{1.0, 2.0}}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(diversity({}, {1.0}), std::invalid_argument);
}

TEST_CASE("budget translation per algorithm") {
    CHECK(budget_generations({"gewa", {{"pop", 20.0}}}, 520) == 500);
    CHECK(budget_generations({"gewa", {{"pop", 20.0}, {"replace_count", 3.0}}}, 80) == 20);
    CHECK_THROWS_AS(budget_generations({"gewa", {{"pop", 20.0}, {"replace_count", 3.0}}}, 81),
                    ConfigError);
    CHECK(budget_generations({"sa", {}}, 1000) == 999);
    CHECK(budget_generations({"pso", {{"pop", 20.0}}}, 10020) == 500);
    CHECK_THROWS_AS(budget_generations({"pso", {{"pop", 20.0}}}, 10019), ConfigError);
    CHECK(budget_generations({"hs", {{"pop", 20.0}}}, 520) == 500);
    CHECK_THROWS_AS(budget_generations({"hs", {{"pop", 20.0}}}, 19), ConfigError);
    CHECK(budget_generations({"de", {{"pop", 10.0}}}, 200) == 19);
    CHECK(budget_generations({"random", {}}, 77) == 77);
    CHECK_THROWS_AS(budget_generations({"voodoo", {}}, 100), UnknownNameError);
    CHECK_THROWS_AS(budget_generations({"gewa", {{"warp", 9.0}}}, 520), ConfigError);
    CHECK_THROWS_AS(budget_generations({"gewa", {{"pop", 20.5}}}, 520), ConfigError);
    // hostile parameter values are rejected before any arithmetic on them
    CHECK_THROWS_AS(budget_generations({"gewa", {{"replace_count", 0.0}}}, 520), ConfigError);
    CHECK_THROWS_AS(budget_generations({"pso", {{"pop", 0.0}}}, 520), ConfigError);
    CHECK_THROWS_AS(budget_generations({"de", {{"pop", -4.0}}}, 520), ConfigError);
    CHECK_THROWS_AS(budget_generations({"hs", {{"pop", 0.0}}}, 520), ConfigError);
    CHECK_THROWS_AS(budget_generations({"sa", {{"cooling_rate", 1.5}}}, 520), ConfigError);
}

TEST_CASE("run_algorithm enforces the exact budget") {
    const auto problem = make_problem("sphere", 3);
    for (const auto& name : algorithm_names()) {
        CAPTURE(name);
        const auto result = run_algorithm({name, {}}, problem, 400, 99);
        CHECK(result.evaluations == 400);
    }
}

TEST_CASE("experiment produces one record per cell, deterministically") {
    const auto spec = tiny_experiment();
    const auto records = run_experiment(spec);
    REQUIRE(records.size() == 20);

    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto key = std::tie(records[i].algorithm, records[i].problem, records[i].dim,
                                  records[i].seed);
        const auto prev = std::tie(records[i - 1].algorithm, records[i - 1].problem,
                                   records[i - 1].dim, records[i - 1].seed);
        CHECK(prev < key);
    }
    for (const auto& r : records) {
        CHECK(r.evaluations == 200);
        CHECK_FALSE(r.trace.empty());
        double previous = std::numeric_limits<double>::infinity();
        for (const auto& point : r.trace) {
            CHECK(point.best_fitness <= previous);
            previous = point.best_fitness;
        }
        CHECK(r.trace.back().best_fitness == r.final_best);
    }

    const auto rerun = run_experiment(spec);
    REQUIRE(rerun.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].algorithm == rerun[i].algorithm);
        CHECK(records[i].problem == rerun[i].problem);
        CHECK(records[i].seed == rerun[i].seed);
        CHECK(records[i].final_best == rerun[i].final_best);
        CHECK(records[i].evaluations == rerun[i].evaluations);
        CHECK(records[i].trace == rerun[i].trace);  // wall_time may differ
    }
}

TEST_CASE("worker threads do not change the outcome") {
    auto spec = tiny_experiment();
    const auto sequential = run_experiment(spec);
    spec.workers = 4;
    const auto parallel = run_experiment(spec);
    REQUIRE(sequential.size() == parallel.size());
    for (std::size_t i = 0; i < sequential.size(); ++i) {
        CHECK(sequential[i].final_best == parallel[i].final_best);
        CHECK(sequential[i].trace == parallel[i].trace);
    }
}

TEST_CASE("experiment validation fails before anything runs") {
    auto spec = tiny_experiment();
    spec.algorithms.push_back({"voodoo", {}});
    CHECK_THROWS_AS(run_experiment(spec), UnknownNameError);

    spec = tiny_experiment();
    spec.problems.push_back({"hexagon", 2});
    CHECK_THROWS_AS(run_experiment(spec), UnknownNameError);

    spec = tiny_experiment();
    spec.algorithms = {{"pso", {{"pop", 20.0}}}};
    spec.evaluation_budget = 199;  // not a multiple of the swarm size
    try {
        run_experiment(spec);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string message = e.what();
        CHECK(message.find("pso") != std::string::npos);
        CHECK(message.find("sphere") != std::string::npos);
    }

    spec = tiny_experiment();
    spec.algorithms.clear();
    CHECK_THROWS_AS(run_experiment(spec), ConfigError);
}

TEST_CASE("explicit seed lists drive one run per entry") {
    auto spec = tiny_experiment();
    spec.seeds = {101, 202, 303};
    const auto records = run_experiment(spec);
    CHECK(records.size() == 2 * 2 * 3);
    std::set<std::uint64_t> distinct;
    for (const auto& r : records) distinct.insert(r.seed);
    CHECK(distinct.size() == records.size());  // derived per cell, collision-free
}

TEST_CASE("derived cell seeds are collision-free on a 10x10x100 grid") {
    std::set<std::uint64_t> seen;
    for (int a = 0; a < 10; ++a) {
        for (int p = 0; p < 10; ++p) {
            for (std::uint64_t k = 0; k < 100; ++k) {
                seen.insert(derive_cell_seed(42, "algo" + std::to_string(a),
                                             "prob" + std::to_string(p), k));
            }
        }
    }
    CHECK(seen.size() == 10 * 10 * 100);
    CHECK(derive_cell_seed(1, "a", "b", 2) == derive_cell_seed(1, "a", "b", 2));
    CHECK(derive_cell_seed(1, "a", "b", 2) != derive_cell_seed(2, "a", "b", 2));
}

TEST_CASE("summarize") {
    const auto record = [](const std::string& algo, double final) {
        RunRecord r;
        r.algorithm = algo;
        r.problem = "sphere";
        r.dim = 2;
        r.final_best = final;
        return r;
    };

    SUBCASE("odd and even medians") {
        const auto stats = summarize({record("a", 3.0), record("a", 1.0), record("a", 2.0)});
        CHECK(stats.cells.at(0).median == 2.0);
        const auto even = summarize({record("a", 1.0), record("a", 3.0)});
        CHECK(even.cells.at(0).median == 2.0);
    }

    SUBCASE("single record degenerates cleanly") {
        const auto stats = summarize({record("a", 4.0)});
        const auto& cell = stats.cells.at(0);
        CHECK(cell.min == 4.0);
        CHECK(cell.max == 4.0);
        CHECK(cell.median == 4.0);
        CHECK(cell.mean == 4.0);
        CHECK(cell.stddev == 0.0);
    }

    SUBCASE("ordering invariant and success rate") {
        const auto stats = summarize({record("a", 0.5), record("a", 0.005), record("a", 2.0),
                                      record("b", 1.0)});
        REQUIRE(stats.cells.size() == 2);
        const auto& cell = stats.cells.at(0);
        CHECK(cell.algorithm == "a");
        CHECK(cell.runs == 3);
        CHECK(cell.min <= cell.median);
        CHECK(cell.median <= cell.max);
        REQUIRE(cell.success_rate.has_value());
        CHECK(*cell.success_rate == doctest::Approx(1.0 / 3.0));  // only 0.005 <= 1e-2
    }

    SUBCASE("unknown problem name: no success rate") {
        RunRecord r;
        r.algorithm = "a";
        r.problem = "external";
        r.dim = 3;
        r.final_best = 1.0;
        const auto stats = summarize({r});
        CHECK_FALSE(stats.cells.at(0).success_rate.has_value());
    }

    SUBCASE("empty input rejected") {
        CHECK_THROWS_AS(summarize({}), std::invalid_argument);
    }
}

TEST_CASE("csv export and import round-trips") {
    TempDir dir("optbench_csv_test");
    const auto records = run_experiment(tiny_experiment());
    export_csv(records, dir.path.string());

    std::ifstream in(dir.path / "records.csv");
    REQUIRE(in);
    std::size_t lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 21);  // header + 20 records

    const auto imported = import_records_csv((dir.path / "records.csv").string());
    REQUIRE(imported.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(imported[i].algorithm == records[i].algorithm);
        CHECK(imported[i].problem == records[i].problem);
        CHECK(imported[i].dim == records[i].dim);
        CHECK(imported[i].seed == records[i].seed);
        CHECK(imported[i].evaluations == records[i].evaluations);
        CHECK(imported[i].final_best == records[i].final_best);  // bit-exact
        CHECK(imported[i].wall_time_s == records[i].wall_time_s);
    }
}

TEST_CASE("trace csv for traceless records holds only the header") {
    TempDir dir("optbench_trace_test");
    RunRecord r;
    r.algorithm = "a";
    r.problem = "sphere";
    r.dim = 2;
    export_csv({r}, dir.path.string());
    std::ifstream in(dir.path / "trace.csv");
    REQUIRE(in);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 1);
}

TEST_CASE("json export round-trips records and summary bit-exactly") {
    TempDir dir("optbench_json_test");
    const auto records = run_experiment(tiny_experiment());
    const auto summary = summarize(records);
    const auto path = (dir.path / "results.json").string();
    export_json(records, summary, path);

    const auto [imported_records, imported_summary] = import_json(path);
    CHECK(imported_records == records);
    CHECK(imported_summary == summary);
    CHECK(summarize(imported_records) == summary);
}

TEST_CASE("export failures report the path and leave no partial file") {
    TempDir dir("optbench_io_test");
    std::filesystem::create_directories(dir.path);
    std::ofstream(dir.path / "blocker") << "x";
    // a regular file where a directory is needed
    const auto bad_dir = (dir.path / "blocker" / "sub").string();
    CHECK_THROWS_AS(export_csv({}, bad_dir), IoError);
    try {
        export_json({}, SummaryStats{}, (dir.path / "blocker" / "out.json").string());
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find("blocker") != std::string::npos);
    }
}

TEST_CASE("gewa budget identity holds through the harness") {
    ExperimentSpec spec;
    spec.algorithms = {{"gewa", {{"pop", 15.0}, {"replace_count", 5.0}}}};
    spec.problems = {{"sphere", 2}};
    spec.run_count = 2;
    spec.evaluation_budget = 15 + 5 * 40;
    const auto records = run_experiment(spec);
    for (const auto& r : records) {
        CHECK(r.evaluations == 15 + 5 * 40);
    }
}

TEST_CASE("trace stride keeps every k-th generation plus the final one") {
    ExperimentSpec spec;
    spec.algorithms = {{"gewa", {{"pop", 10.0}}}};
    spec.problems = {{"sphere", 2}};
    spec.run_count = 1;
    spec.evaluation_budget = 10 + 105;  // 105 generations
    spec.trace_stride = 10;
    const auto records = run_experiment(spec);
    REQUIRE(records.size() == 1);
    // generations 0,10,...,100 plus the final 105
    CHECK(records[0].trace.size() == 12);
    CHECK(records[0].trace.back().evaluations_so_far == 115);
}
