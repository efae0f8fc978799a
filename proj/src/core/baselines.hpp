#pragma once

#include "core/problem.hpp"
#include "core/random.hpp"
#include "core/result.hpp"

#include <cstdint>

namespace optbench {

// Comparator algorithms in their standard textbook forms. All of them share
// the run contract of gewa_run: monotone best-so-far trace, points inside
// the box, exact evaluation accounting, seed determinism.

struct SaConfig {
    double initial_temp = 10.0;
    double cooling_rate = 0.95;   // geometric factor, in (0, 1)
    int moves_per_temp = 100;
    double step_ratio = 0.01;     // move scale relative to variable range
    long long max_evaluations = 1;
};

struct PsoConfig {
    int swarm_size = 20;
    double inertia = 0.7;
    double cognitive = 1.5;
    double social = 1.5;
    double velocity_clamp_ratio = 0.5;  // vmax = ratio * (U - L)
    long long max_generations = 0;
};

struct HsConfig {
    int memory_size = 20;         // HMS
    double memory_rate = 0.9;     // HMCR
    double pitch_rate = 0.3;      // PAR
    double bandwidth_ratio = 0.01;
    long long max_improvisations = 0;
};

struct DeConfig {
    int pop_size = 20;            // at least 4; rand/1 needs three distinct others
    double differential_weight = 0.8;  // F
    double crossover_rate = 0.9;       // CR
    long long max_generations = 0;
};

void validate(const SaConfig& config);
void validate(const PsoConfig& config);
void validate(const HsConfig& config);
void validate(const DeConfig& config);

// Metropolis rule: improvements always pass, a worse move passes with
// probability exp(-delta / temperature). Draws one uniform only when the
// move is worse.
bool sa_accept(double delta, double temperature, RandomSource& rng);

OptimizationResult sa_run(const SaConfig& config, const ObjectiveProblem& problem, std::uint64_t seed);
OptimizationResult pso_run(const PsoConfig& config, const ObjectiveProblem& problem, std::uint64_t seed);
OptimizationResult hs_run(const HsConfig& config, const ObjectiveProblem& problem, std::uint64_t seed);
OptimizationResult de_run(const DeConfig& config, const ObjectiveProblem& problem, std::uint64_t seed);
OptimizationResult random_search_run(long long budget, const ObjectiveProblem& problem, std::uint64_t seed);

// Same runs, caller-owned draw source.
OptimizationResult sa_run(const SaConfig& config, const ObjectiveProblem& problem, RandomSource& rng);
OptimizationResult pso_run(const PsoConfig& config, const ObjectiveProblem& problem, RandomSource& rng);
OptimizationResult hs_run(const HsConfig& config, const ObjectiveProblem& problem, RandomSource& rng);
OptimizationResult de_run(const DeConfig& config, const ObjectiveProblem& problem, RandomSource& rng);
OptimizationResult random_search_run(long long budget, const ObjectiveProblem& problem, RandomSource& rng);

}  // namespace optbench
