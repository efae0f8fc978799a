#pragma once

#include "core/problem.hpp"
#include "core/random.hpp"
#include "core/result.hpp"
#include "core/walks.hpp"

#include <cstdint>
#include <optional>

namespace optbench {

// Evolutionary-walk optimizer: a population of walkers where, each
// generation, the worst members are replaced by fresh proposals that are
// either Gaussian walks around the global best (probability alpha) or
// uniform redraws from the box.
struct GewaConfig {
    int population = 20;        // n, walkers
    double alpha = 0.5;         // local-vs-global mix, in [0, 1]
    double step_ratio = 0.01;   // d[i] = step_ratio * (U[i] - L[i])
    double sigma = 1.0;
    int replace_count = 1;      // m, worst walkers replaced per generation
    long long max_generations = 0;
    std::optional<double> target_fitness;  // early stop once best <= target
};

void validate(const GewaConfig& config);

struct WalkerPopulation {
    std::vector<Vector> positions;
    Vector fitnesses;
    std::size_t best_index = 0;
    Vector best_point;
    double best_fitness = 0.0;
};

// Per-dimension step lengths used by the local walk: step_ratio * (U - L).
Vector gewa_step_lengths(const GewaConfig& config, const SearchSpace& space);

// n uniform draws, all evaluated, best located (lowest index wins ties).
WalkerPopulation gewa_initialize(const SearchSpace& space, const GewaConfig& config,
                                 CountingEvaluator& evaluate, RandomSource& rng);

// One replacement proposal. When 0 < alpha < 1 a single uniform coin decides
// the branch; at the endpoints the branch is forced without consuming a
// draw, so alpha = 0 replays exactly as a uniform_sample stream. Local
// proposals are clamped to the box.
Vector gewa_propose(const WalkerPopulation& pop, const GewaConfig& config,
                    const SearchSpace& space, RandomSource& rng);

// One generation: the replace_count worst walkers (never the best one) are
// overwritten by independent proposals, proposals are evaluated, and the
// best-so-far is updated. Returns the generation's trace line.
GenerationTrace gewa_step(WalkerPopulation& pop, const GewaConfig& config,
                          const SearchSpace& space, CountingEvaluator& evaluate,
                          RandomSource& rng, long long generation);

OptimizationResult gewa_run(const GewaConfig& config, const ObjectiveProblem& problem,
                            std::uint64_t seed);
OptimizationResult gewa_run(const GewaConfig& config, const ObjectiveProblem& problem,
                            RandomSource& rng);

}  // namespace optbench
