#pragma once

#include "core/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace optbench {

// One line of a run's convergence history. Diversity is the mean Euclidean
// distance of the population to the current best; trajectory algorithms
// leave it empty.
struct GenerationTrace {
    long long generation = 0;
    double best_fitness = 0.0;
    std::optional<double> diversity;
    long long evaluations_so_far = 0;
};

struct OptimizationResult {
    Vector best_point;
    double best_fitness = 0.0;
    std::vector<GenerationTrace> trace;
    long long evaluations = 0;
};

inline bool operator==(const GenerationTrace& a, const GenerationTrace& b) {
    return a.generation == b.generation && a.best_fitness == b.best_fitness &&
           a.diversity == b.diversity && a.evaluations_so_far == b.evaluations_so_far;
}

inline bool operator==(const OptimizationResult& a, const OptimizationResult& b) {
    return a.best_point == b.best_point && a.best_fitness == b.best_fitness &&
           a.trace == b.trace && a.evaluations == b.evaluations;
}

}  // namespace optbench
