#include "optbench.h"

#include "core/harness.hpp"
#include "core/problem.hpp"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>
#include <vector>

// extern-C layer: translates between opaque handles / status codes and the
// C++ core. All exceptions stop at this boundary.

namespace {

thread_local std::string g_last_error;

optbench_status fail(optbench_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
optbench_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const optbench::UnknownNameError& e) {
        return fail(OPTBENCH_ERR_UNKNOWN_NAME, e.what());
    } catch (const optbench::ConfigError& e) {
        return fail(OPTBENCH_ERR_CONFIG, e.what());
    } catch (const optbench::IoError& e) {
        return fail(OPTBENCH_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(OPTBENCH_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(OPTBENCH_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(OPTBENCH_ERR_INTERNAL, e.what());
    }
}

// cached registry names so the const char* views stay valid for the caller
const std::vector<std::string>& problem_name_list() {
    static const std::vector<std::string> names = optbench::problem_names();
    return names;
}

const std::vector<std::string>& algorithm_name_list() {
    static const std::vector<std::string> names = optbench::algorithm_names();
    return names;
}

}  // namespace

struct optbench_problem {
    optbench::ObjectiveProblem impl;
};

struct optbench_result {
    optbench::OptimizationResult impl;
};

struct optbench_experiment {
    optbench::ExperimentSpec spec;
};

struct optbench_records {
    std::vector<optbench::RunRecord> impl;
};

extern "C" {

const char* optbench_status_string(optbench_status status) {
    switch (status) {
        case OPTBENCH_OK: return "ok";
        case OPTBENCH_ERR_INVALID_ARGUMENT: return "invalid argument";
        case OPTBENCH_ERR_UNKNOWN_NAME: return "unknown name";
        case OPTBENCH_ERR_CONFIG: return "invalid configuration";
        case OPTBENCH_ERR_IO: return "i/o error";
        case OPTBENCH_ERR_INTERNAL: return "internal error";
    }
    return "unrecognized status";
}

const char* optbench_last_error(void) {
    return g_last_error.c_str();
}

const char* optbench_version(void) {
    return "1.0.0";
}

size_t optbench_problem_count(void) {
    return problem_name_list().size();
}

const char* optbench_problem_name(size_t index) {
    const auto& names = problem_name_list();
    return index < names.size() ? names[index].c_str() : nullptr;
}

size_t optbench_algorithm_count(void) {
    return algorithm_name_list().size();
}

const char* optbench_algorithm_name(size_t index) {
    const auto& names = algorithm_name_list();
    return index < names.size() ? names[index].c_str() : nullptr;
}

optbench_status optbench_problem_create(const char* name, size_t dim, optbench_problem** out) {
    if (!name || !out) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto* handle = new optbench_problem{optbench::make_problem(name, dim)};
        *out = handle;
        return OPTBENCH_OK;
    });
}

void optbench_problem_destroy(optbench_problem* problem) {
    delete problem;
}

size_t optbench_problem_dim(const optbench_problem* problem) {
    return problem ? problem->impl.space.dim() : 0;
}

optbench_status optbench_problem_bounds(const optbench_problem* problem, double* lower,
                                        double* upper) {
    if (!problem) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null problem");
    const auto& space = problem->impl.space;
    if (lower) std::memcpy(lower, space.lower().data(), space.dim() * sizeof(double));
    if (upper) std::memcpy(upper, space.upper().data(), space.dim() * sizeof(double));
    return OPTBENCH_OK;
}

optbench_status optbench_problem_evaluate(const optbench_problem* problem, const double* x,
                                          size_t len, double* value) {
    if (!problem || !x || !value) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const optbench::Vector point(x, x + len);
        *value = optbench::evaluate(problem->impl, point);
        return OPTBENCH_OK;
    });
}

int optbench_problem_has_known_optimum(const optbench_problem* problem) {
    return problem && problem->impl.known_optimum ? 1 : 0;
}

optbench_status optbench_problem_known_optimum(const optbench_problem* problem, double* point,
                                               double* value) {
    if (!problem) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null problem");
    if (!problem->impl.known_optimum) {
        return fail(OPTBENCH_ERR_INVALID_ARGUMENT,
                    "problem '" + problem->impl.name + "' has no known optimum");
    }
    const auto& optimum = *problem->impl.known_optimum;
    if (point) std::memcpy(point, optimum.point.data(), optimum.point.size() * sizeof(double));
    if (value) *value = optimum.value;
    return OPTBENCH_OK;
}

optbench_status optbench_run(const char* algorithm, const optbench_problem* problem,
                             const optbench_param* params, size_t param_count,
                             long long evaluation_budget, uint64_t seed, optbench_result** out) {
    if (!algorithm || !problem || !out || (param_count > 0 && !params)) {
        return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    return guarded([&] {
        optbench::AlgorithmSpec spec;
        spec.name = algorithm;
        for (size_t i = 0; i < param_count; ++i) {
            if (!params[i].key) throw std::invalid_argument("null parameter key");
            spec.params[params[i].key] = params[i].value;
        }
        auto result = optbench::run_algorithm(spec, problem->impl, evaluation_budget, seed);
        *out = new optbench_result{std::move(result)};
        return OPTBENCH_OK;
    });
}

void optbench_result_destroy(optbench_result* result) {
    delete result;
}

double optbench_result_best_fitness(const optbench_result* result) {
    return result ? result->impl.best_fitness : 0.0;
}

long long optbench_result_evaluations(const optbench_result* result) {
    return result ? result->impl.evaluations : 0;
}

size_t optbench_result_dim(const optbench_result* result) {
    return result ? result->impl.best_point.size() : 0;
}

optbench_status optbench_result_best_point(const optbench_result* result, double* out, size_t len) {
    if (!result || !out) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null argument");
    if (len < result->impl.best_point.size()) {
        return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "output buffer too small");
    }
    std::memcpy(out, result->impl.best_point.data(),
                result->impl.best_point.size() * sizeof(double));
    return OPTBENCH_OK;
}

size_t optbench_result_trace_size(const optbench_result* result) {
    return result ? result->impl.trace.size() : 0;
}

optbench_status optbench_result_trace_entry(const optbench_result* result, size_t index,
                                            long long* evaluations, double* best_fitness,
                                            double* diversity, int* has_diversity) {
    if (!result) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null result");
    if (index >= result->impl.trace.size()) {
        return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "trace index out of range");
    }
    const auto& entry = result->impl.trace[index];
    if (evaluations) *evaluations = entry.evaluations_so_far;
    if (best_fitness) *best_fitness = entry.best_fitness;
    if (has_diversity) *has_diversity = entry.diversity ? 1 : 0;
    if (diversity) *diversity = entry.diversity.value_or(0.0);
    return OPTBENCH_OK;
}

optbench_status optbench_experiment_create(optbench_experiment** out) {
    if (!out) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new optbench_experiment{};
        return OPTBENCH_OK;
    });
}

void optbench_experiment_destroy(optbench_experiment* experiment) {
    delete experiment;
}

optbench_status optbench_experiment_add_algorithm(optbench_experiment* experiment,
                                                  const char* name) {
    if (!experiment || !name) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const auto& names = algorithm_name_list();
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw optbench::UnknownNameError("unknown algorithm '" + std::string(name) + "'");
        }
        experiment->spec.algorithms.push_back({name, {}});
        return OPTBENCH_OK;
    });
}

optbench_status optbench_experiment_set_algorithm_param(optbench_experiment* experiment,
                                                        const char* algorithm, const char* key,
                                                        double value) {
    if (!experiment || !algorithm || !key) {
        return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null argument");
    }
    for (auto& spec : experiment->spec.algorithms) {
        if (spec.name == algorithm) {
            spec.params[key] = value;
            return OPTBENCH_OK;
        }
    }
    return fail(OPTBENCH_ERR_UNKNOWN_NAME,
                "algorithm '" + std::string(algorithm) + "' is not part of this experiment");
}

optbench_status optbench_experiment_add_problem(optbench_experiment* experiment, const char* name,
                                                size_t dim) {
    if (!experiment || !name) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        optbench::make_problem(name, dim);  // resolves or throws
        experiment->spec.problems.push_back({name, dim});
        return OPTBENCH_OK;
    });
}

optbench_status optbench_experiment_add_seed(optbench_experiment* experiment, uint64_t seed) {
    if (!experiment) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null experiment");
    experiment->spec.seeds.push_back(seed);
    return OPTBENCH_OK;
}

optbench_status optbench_experiment_set_seeding(optbench_experiment* experiment,
                                                uint64_t base_seed, int run_count) {
    if (!experiment) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null experiment");
    if (run_count < 1) return fail(OPTBENCH_ERR_CONFIG, "run_count must be positive");
    experiment->spec.base_seed = base_seed;
    experiment->spec.run_count = run_count;
    return OPTBENCH_OK;
}

optbench_status optbench_experiment_set_budget(optbench_experiment* experiment,
                                               long long evaluations) {
    if (!experiment) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null experiment");
    if (evaluations < 1) return fail(OPTBENCH_ERR_CONFIG, "budget must be positive");
    experiment->spec.evaluation_budget = evaluations;
    return OPTBENCH_OK;
}

optbench_status optbench_experiment_set_trace_stride(optbench_experiment* experiment, int stride) {
    if (!experiment) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null experiment");
    if (stride < 1) return fail(OPTBENCH_ERR_CONFIG, "trace_stride must be positive");
    experiment->spec.trace_stride = stride;
    return OPTBENCH_OK;
}

optbench_status optbench_experiment_set_workers(optbench_experiment* experiment, int workers) {
    if (!experiment) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null experiment");
    if (workers < 1) return fail(OPTBENCH_ERR_CONFIG, "workers must be positive");
    experiment->spec.workers = workers;
    return OPTBENCH_OK;
}

optbench_status optbench_experiment_run(const optbench_experiment* experiment,
                                        optbench_records** out) {
    if (!experiment || !out) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto records = optbench::run_experiment(experiment->spec);
        *out = new optbench_records{std::move(records)};
        return OPTBENCH_OK;
    });
}

void optbench_records_destroy(optbench_records* records) {
    delete records;
}

size_t optbench_records_count(const optbench_records* records) {
    return records ? records->impl.size() : 0;
}

optbench_status optbench_records_export_csv(const optbench_records* records,
                                            const char* directory) {
    if (!records || !directory) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        optbench::export_csv(records->impl, directory);
        return OPTBENCH_OK;
    });
}

optbench_status optbench_records_export_json(const optbench_records* records, const char* path) {
    if (!records || !path) return fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        optbench::export_json(records->impl, optbench::summarize(records->impl), path);
        return OPTBENCH_OK;
    });
}

char* optbench_summarize_csv(const char* records_csv_path) {
    if (!records_csv_path) {
        fail(OPTBENCH_ERR_INVALID_ARGUMENT, "null path");
        return nullptr;
    }
    char* out = nullptr;
    guarded([&] {
        const auto records = optbench::import_records_csv(records_csv_path);
        const std::string table = optbench::format_summary(optbench::summarize(records));
        out = new char[table.size() + 1];
        std::memcpy(out, table.c_str(), table.size() + 1);
        return OPTBENCH_OK;
    });
    return out;
}

void optbench_string_free(char* text) {
    delete[] text;
}

}  // extern "C"
