#include "core/gewa.hpp"

#include "core/diversity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace optbench {

void validate(const GewaConfig& config) {
    if (config.population < 2) {
        throw ConfigError("gewa: population must be at least 2");
    }
    if (!(config.alpha >= 0.0 && config.alpha <= 1.0)) {
        throw ConfigError("gewa: alpha must lie in [0, 1]");
    }
    if (!(config.step_ratio > 0.0)) {
        throw ConfigError("gewa: step_ratio must be positive");
    }
    if (!(config.sigma > 0.0)) {
        throw ConfigError("gewa: sigma must be positive");
    }
    if (config.replace_count < 1 || config.replace_count > config.population - 1) {
        throw ConfigError("gewa: replace_count must lie in [1, population - 1]");
    }
    if (config.max_generations < 0) {
        throw ConfigError("gewa: max_generations must be nonnegative");
    }
}

Vector gewa_step_lengths(const GewaConfig& config, const SearchSpace& space) {
    Vector d(space.dim());
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = config.step_ratio * (space.upper()[i] - space.lower()[i]);
    }
    return d;
}

WalkerPopulation gewa_initialize(const SearchSpace& space, const GewaConfig& config,
                                 CountingEvaluator& evaluate, RandomSource& rng) {
    validate(config);
    WalkerPopulation pop;
    const std::size_t n = static_cast<std::size_t>(config.population);
    pop.positions.reserve(n);
    pop.fitnesses.reserve(n);
    pop.best_fitness = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        pop.positions.push_back(uniform_sample(space, rng));
        pop.fitnesses.push_back(evaluate(pop.positions.back()));
        if (pop.fitnesses.back() < pop.best_fitness) {
            pop.best_fitness = pop.fitnesses.back();
            pop.best_index = i;
        }
    }
    pop.best_point = pop.positions[pop.best_index];
    return pop;
}

Vector gewa_propose(const WalkerPopulation& pop, const GewaConfig& config,
                    const SearchSpace& space, RandomSource& rng) {
    bool local = config.alpha >= 1.0;
    if (config.alpha > 0.0 && config.alpha < 1.0) {
        local = rng.uniform() < config.alpha;
    }
    if (local) {
        StepConfig step{gewa_step_lengths(config, space), config.sigma};
        return space.clamp(best_walk(pop.best_point, step, rng));
    }
    return uniform_sample(space, rng);
}

GenerationTrace gewa_step(WalkerPopulation& pop, const GewaConfig& config,
                          const SearchSpace& space, CountingEvaluator& evaluate,
                          RandomSource& rng, long long generation) {
    const std::size_t n = pop.positions.size();
    std::vector<std::size_t> order;
    order.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i != pop.best_index) order.push_back(i);
    }
    // worst first; equal fitnesses resolve to the lower index
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pop.fitnesses[a] != pop.fitnesses[b]) return pop.fitnesses[a] > pop.fitnesses[b];
        return a < b;
    });
    order.resize(static_cast<std::size_t>(config.replace_count));

    // proposals all walk around the generation-start best; the best-so-far
    // is refreshed only after the new solutions are evaluated
    for (std::size_t slot : order) {
        pop.positions[slot] = gewa_propose(pop, config, space, rng);
    }
    for (std::size_t slot : order) {
        pop.fitnesses[slot] = evaluate(pop.positions[slot]);
    }
    for (std::size_t slot : order) {
        if (pop.fitnesses[slot] < pop.best_fitness) {
            pop.best_fitness = pop.fitnesses[slot];
            pop.best_index = slot;
            pop.best_point = pop.positions[slot];
        }
    }

    return GenerationTrace{generation, pop.best_fitness,
                           diversity(pop.positions, pop.best_point), evaluate.count()};
}

OptimizationResult gewa_run(const GewaConfig& config, const ObjectiveProblem& problem,
                            std::uint64_t seed) {
    Xoshiro256Source rng(seed);
    return gewa_run(config, problem, rng);
}

OptimizationResult gewa_run(const GewaConfig& config, const ObjectiveProblem& problem,
                            RandomSource& rng) {
    validate(config);
    CountingEvaluator evaluate(problem);
    WalkerPopulation pop = gewa_initialize(problem.space, config, evaluate, rng);

    OptimizationResult result;
    result.trace.push_back(GenerationTrace{0, pop.best_fitness,
                                           diversity(pop.positions, pop.best_point),
                                           evaluate.count()});
    for (long long t = 1; t <= config.max_generations; ++t) {
        if (config.target_fitness && pop.best_fitness <= *config.target_fitness) break;
        result.trace.push_back(gewa_step(pop, config, problem.space, evaluate, rng, t));
    }
    result.best_point = pop.best_point;
    result.best_fitness = pop.best_fitness;
    result.evaluations = evaluate.count();
    return result;
}

}  // namespace optbench
