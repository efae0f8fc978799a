// Reference runs behind data/calibration.json. Run once, commit the output;
// the test suites then hold the implementation to the recorded thresholds
// (10x the observed medians, so platform drift does not flip them).
//
// Usage: calibrate [output.json]
// With --scan-alpha it instead prints the gewa alpha sweep used to pick the
// parameter-ordering check in the acceptance suite.

#include "core/harness.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace {

double median_final_best(const optbench::ExperimentSpec& spec) {
    const auto records = optbench::run_experiment(spec);
    const auto summary = optbench::summarize(records);
    return summary.cells.at(0).median;
}

optbench::ExperimentSpec single_cell(const std::string& algo, const optbench::ParamMap& params,
                                     long long budget, int runs, std::uint64_t base_seed) {
    optbench::ExperimentSpec spec;
    spec.algorithms = {{algo, params}};
    spec.problems = {{"sphere", 5}};
    spec.base_seed = base_seed;
    spec.run_count = runs;
    spec.evaluation_budget = budget;
    spec.trace_stride = 1000000;  // medians only, keep traces tiny
    spec.workers = 2;
    return spec;
}

void scan_alpha() {
    std::printf("gewa alpha sweep on sphere:5 (25 runs, base seed 42)\n");
    std::printf("%-5s %-12s %-8s %-12s %-12s %-12s\n", "pop", "step_ratio", "budget",
                "alpha=0", "alpha=0.5", "alpha=1");
    for (int pop : {20, 15}) {
        for (double step_ratio : {0.01, 0.005, 0.001}) {
            for (long long budget : {120, 220, 320, 470, 520, 1020}) {
                double medians[3];
                int i = 0;
                for (double alpha : {0.0, 0.5, 1.0}) {
                    optbench::ParamMap params{
                        {"pop", pop}, {"alpha", alpha}, {"step_ratio", step_ratio}};
                    medians[i++] = median_final_best(single_cell("gewa", params, budget, 25, 42));
                }
                std::printf("%-5d %-12g %-8lld %-12.4g %-12.4g %-12.4g\n", pop, step_ratio,
                            budget, medians[0], medians[1], medians[2]);
            }
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1 && std::string(argv[1]) == "--scan-alpha") {
        scan_alpha();
        return 0;
    }
    const std::string out_path = argc > 1 ? argv[1] : "data/calibration.json";

    nlohmann::json doc;

    {
        const optbench::ParamMap params{{"pop", 20}, {"alpha", 0.5}, {"step_ratio", 0.01}};
        const auto spec = single_cell("gewa", params, 520, 25, 42);  // 500 generations
        const double median = median_final_best(spec);
        doc["gewa_sphere5"] = {
            {"algorithm", "gewa"},  {"problem", "sphere"},  {"dim", 5},
            {"budget", 520},        {"generations", 500},   {"runs", 25},
            {"base_seed", 42},      {"params", {{"pop", 20}, {"alpha", 0.5}, {"step_ratio", 0.01}}},
            {"observed_median", median}, {"threshold", 10.0 * median},
        };
        std::printf("gewa  sphere:5  median %.6g  threshold %.6g\n", median, 10.0 * median);
    }
    {
        const optbench::ParamMap params{
            {"pop", 20}, {"inertia", 0.7}, {"cognitive", 1.5}, {"social", 1.5}};
        const auto spec = single_cell("pso", params, 10020, 25, 42);  // 500 generations
        const double median = median_final_best(spec);
        doc["pso_sphere5"] = {
            {"algorithm", "pso"},   {"problem", "sphere"},  {"dim", 5},
            {"budget", 10020},      {"generations", 500},   {"runs", 25},
            {"base_seed", 42},
            {"params", {{"pop", 20}, {"inertia", 0.7}, {"cognitive", 1.5}, {"social", 1.5}}},
            {"observed_median", median}, {"threshold", 10.0 * median},
        };
        std::printf("pso   sphere:5  median %.6g  threshold %.6g\n", median, 10.0 * median);
    }

    std::ofstream out(out_path);
    if (!out) {
        std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
        return 1;
    }
    out << doc.dump(2) << "\n";
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}
