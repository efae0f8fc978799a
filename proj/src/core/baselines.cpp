#include "core/baselines.hpp"

#include "core/diversity.hpp"
#include "core/walks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace optbench {

void validate(const SaConfig& config) {
    if (!(config.initial_temp > 0.0)) throw ConfigError("sa: initial_temp must be positive");
    if (!(config.cooling_rate > 0.0 && config.cooling_rate < 1.0)) {
        throw ConfigError("sa: cooling_rate must lie in (0, 1)");
    }
    if (config.moves_per_temp < 1) throw ConfigError("sa: moves_per_temp must be positive");
    if (!(config.step_ratio > 0.0)) throw ConfigError("sa: step_ratio must be positive");
    if (config.max_evaluations < 1) throw ConfigError("sa: max_evaluations must be positive");
}

void validate(const PsoConfig& config) {
    if (config.swarm_size < 2) throw ConfigError("pso: swarm_size must be at least 2");
    if (!(config.inertia >= 0.0)) throw ConfigError("pso: inertia must be nonnegative");
    if (!(config.cognitive >= 0.0)) throw ConfigError("pso: cognitive must be nonnegative");
    if (!(config.social >= 0.0)) throw ConfigError("pso: social must be nonnegative");
    if (!(config.velocity_clamp_ratio > 0.0)) throw ConfigError("pso: velocity_clamp_ratio must be positive");
    if (config.max_generations < 0) throw ConfigError("pso: max_generations must be nonnegative");
}

void validate(const HsConfig& config) {
    if (config.memory_size < 1) throw ConfigError("hs: memory_size must be positive");
    if (!(config.memory_rate >= 0.0 && config.memory_rate <= 1.0)) {
        throw ConfigError("hs: memory_rate must lie in [0, 1]");
    }
    if (!(config.pitch_rate >= 0.0 && config.pitch_rate <= 1.0)) {
        throw ConfigError("hs: pitch_rate must lie in [0, 1]");
    }
    if (!(config.bandwidth_ratio > 0.0)) throw ConfigError("hs: bandwidth_ratio must be positive");
    if (config.max_improvisations < 0) throw ConfigError("hs: max_improvisations must be nonnegative");
}

void validate(const DeConfig& config) {
    if (config.pop_size < 4) throw ConfigError("de: pop_size must be at least 4");
    if (!(config.crossover_rate >= 0.0 && config.crossover_rate <= 1.0)) {
        throw ConfigError("de: crossover_rate must lie in [0, 1]");
    }
    if (!std::isfinite(config.differential_weight)) {
        throw ConfigError("de: differential_weight must be finite");
    }
    if (config.max_generations < 0) throw ConfigError("de: max_generations must be nonnegative");
}

bool sa_accept(double delta, double temperature, RandomSource& rng) {
    if (delta <= 0.0) return true;
    return rng.uniform() < std::exp(-delta / temperature);
}

OptimizationResult sa_run(const SaConfig& config, const ObjectiveProblem& problem, std::uint64_t seed) {
    Xoshiro256Source rng(seed);
    return sa_run(config, problem, rng);
}

OptimizationResult sa_run(const SaConfig& config, const ObjectiveProblem& problem, RandomSource& rng) {
    validate(config);
    CountingEvaluator evaluate(problem);
    const SearchSpace& space = problem.space;
    StepConfig move{Vector(space.dim()), 1.0};
    for (std::size_t i = 0; i < space.dim(); ++i) {
        move.step_lengths[i] = config.step_ratio * (space.upper()[i] - space.lower()[i]);
    }

    Vector current = uniform_sample(space, rng);
    double current_fitness = evaluate(current);

    OptimizationResult result;
    result.best_point = current;
    result.best_fitness = current_fitness;
    result.trace.push_back(GenerationTrace{0, result.best_fitness, std::nullopt, evaluate.count()});

    double temperature = config.initial_temp;
    long long moves = 0;
    while (evaluate.count() < config.max_evaluations) {
        Vector candidate = space.clamp(local_walk(current, 1.0, move, rng));
        const double candidate_fitness = evaluate(candidate);
        if (sa_accept(candidate_fitness - current_fitness, temperature, rng)) {
            current = std::move(candidate);
            current_fitness = candidate_fitness;
        }
        if (candidate_fitness < result.best_fitness) {
            result.best_fitness = candidate_fitness;
            result.best_point = current;  // accepted: improvement always passes
        }
        ++moves;
        if (moves % config.moves_per_temp == 0) temperature *= config.cooling_rate;
        result.trace.push_back(GenerationTrace{moves, result.best_fitness, std::nullopt, evaluate.count()});
    }
    result.evaluations = evaluate.count();
    return result;
}

OptimizationResult pso_run(const PsoConfig& config, const ObjectiveProblem& problem, std::uint64_t seed) {
    Xoshiro256Source rng(seed);
    return pso_run(config, problem, rng);
}

OptimizationResult pso_run(const PsoConfig& config, const ObjectiveProblem& problem, RandomSource& rng) {
    validate(config);
    CountingEvaluator evaluate(problem);
    const SearchSpace& space = problem.space;
    const std::size_t n = static_cast<std::size_t>(config.swarm_size);
    const std::size_t dim = space.dim();

    Vector vmax(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        vmax[d] = config.velocity_clamp_ratio * (space.upper()[d] - space.lower()[d]);
    }

    std::vector<Vector> positions(n);
    std::vector<Vector> velocities(n, Vector(dim, 0.0));
    std::vector<Vector> personal_best(n);
    Vector personal_best_fitness(n);

    OptimizationResult result;
    result.best_fitness = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        positions[i] = uniform_sample(space, rng);
        personal_best[i] = positions[i];
        personal_best_fitness[i] = evaluate(positions[i]);
        if (personal_best_fitness[i] < result.best_fitness) {
            result.best_fitness = personal_best_fitness[i];
            result.best_point = positions[i];
        }
    }
    result.trace.push_back(GenerationTrace{0, result.best_fitness,
                                           diversity(positions, result.best_point), evaluate.count()});

    for (long long t = 1; t <= config.max_generations; ++t) {
        // synchronous sweep: all moves use the generation-start global best
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < dim; ++d) {
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                double v = config.inertia * velocities[i][d] +
                           config.cognitive * r1 * (personal_best[i][d] - positions[i][d]) +
                           config.social * r2 * (result.best_point[d] - positions[i][d]);
                v = std::clamp(v, -vmax[d], vmax[d]);
                velocities[i][d] = v;
                positions[i][d] = std::clamp(positions[i][d] + v, space.lower()[d], space.upper()[d]);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double fitness = evaluate(positions[i]);
            if (fitness < personal_best_fitness[i]) {
                personal_best_fitness[i] = fitness;
                personal_best[i] = positions[i];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (personal_best_fitness[i] < result.best_fitness) {
                result.best_fitness = personal_best_fitness[i];
                result.best_point = personal_best[i];
            }
        }
        result.trace.push_back(GenerationTrace{t, result.best_fitness,
                                               diversity(positions, result.best_point), evaluate.count()});
    }
    result.evaluations = evaluate.count();
    return result;
}

OptimizationResult hs_run(const HsConfig& config, const ObjectiveProblem& problem, std::uint64_t seed) {
    Xoshiro256Source rng(seed);
    return hs_run(config, problem, rng);
}

OptimizationResult hs_run(const HsConfig& config, const ObjectiveProblem& problem, RandomSource& rng) {
    validate(config);
    CountingEvaluator evaluate(problem);
    const SearchSpace& space = problem.space;
    const std::size_t hms = static_cast<std::size_t>(config.memory_size);
    const std::size_t dim = space.dim();

    Vector bandwidth(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        bandwidth[d] = config.bandwidth_ratio * (space.upper()[d] - space.lower()[d]);
    }

    std::vector<Vector> memory(hms);
    Vector memory_fitness(hms);
    OptimizationResult result;
    result.best_fitness = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hms; ++i) {
        memory[i] = uniform_sample(space, rng);
        memory_fitness[i] = evaluate(memory[i]);
        if (memory_fitness[i] < result.best_fitness) {
            result.best_fitness = memory_fitness[i];
            result.best_point = memory[i];
        }
    }
    result.trace.push_back(GenerationTrace{0, result.best_fitness,
                                           diversity(memory, result.best_point), evaluate.count()});

    for (long long t = 1; t <= config.max_improvisations; ++t) {
        Vector harmony(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            if (rng.uniform() < config.memory_rate) {
                double value = memory[rng.uniform_index(hms)][d];
                if (rng.uniform() < config.pitch_rate) {
                    value += rng.gaussian() * bandwidth[d];
                    value = std::clamp(value, space.lower()[d], space.upper()[d]);
                }
                harmony[d] = value;
            } else {
                harmony[d] = space.lower()[d] + (space.upper()[d] - space.lower()[d]) * rng.uniform();
            }
        }
        const double fitness = evaluate(harmony);

        std::size_t worst = 0;
        for (std::size_t i = 1; i < hms; ++i) {
            if (memory_fitness[i] > memory_fitness[worst]) worst = i;
        }
        if (fitness < memory_fitness[worst]) {
            memory[worst] = harmony;
            memory_fitness[worst] = fitness;
            if (fitness < result.best_fitness) {
                result.best_fitness = fitness;
                result.best_point = harmony;
            }
        }
        result.trace.push_back(GenerationTrace{t, result.best_fitness,
                                               diversity(memory, result.best_point), evaluate.count()});
    }
    result.evaluations = evaluate.count();
    return result;
}

OptimizationResult de_run(const DeConfig& config, const ObjectiveProblem& problem, std::uint64_t seed) {
    Xoshiro256Source rng(seed);
    return de_run(config, problem, rng);
}

OptimizationResult de_run(const DeConfig& config, const ObjectiveProblem& problem, RandomSource& rng) {
    validate(config);
    CountingEvaluator evaluate(problem);
    const SearchSpace& space = problem.space;
    const std::size_t n = static_cast<std::size_t>(config.pop_size);
    const std::size_t dim = space.dim();

    std::vector<Vector> population(n);
    Vector fitness(n);
    OptimizationResult result;
    result.best_fitness = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        population[i] = uniform_sample(space, rng);
        fitness[i] = evaluate(population[i]);
        if (fitness[i] < result.best_fitness) {
            result.best_fitness = fitness[i];
            result.best_point = population[i];
        }
    }
    result.trace.push_back(GenerationTrace{0, result.best_fitness,
                                           diversity(population, result.best_point), evaluate.count()});

    for (long long t = 1; t <= config.max_generations; ++t) {
        // rand/1/bin, generation-synchronous
        std::vector<Vector> trials(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t a = rng.uniform_index(n);
            while (a == i) a = rng.uniform_index(n);
            std::size_t b = rng.uniform_index(n);
            while (b == i || b == a) b = rng.uniform_index(n);
            std::size_t c = rng.uniform_index(n);
            while (c == i || c == a || c == b) c = rng.uniform_index(n);

            Vector mutant(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                const double v = population[a][d] +
                                 config.differential_weight * (population[b][d] - population[c][d]);
                mutant[d] = std::clamp(v, space.lower()[d], space.upper()[d]);
            }
            const std::size_t forced = rng.uniform_index(dim);
            Vector trial = population[i];
            for (std::size_t d = 0; d < dim; ++d) {
                if (rng.uniform() < config.crossover_rate || d == forced) trial[d] = mutant[d];
            }
            trials[i] = std::move(trial);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double trial_fitness = evaluate(trials[i]);
            if (trial_fitness <= fitness[i]) {
                population[i] = std::move(trials[i]);
                fitness[i] = trial_fitness;
                if (trial_fitness < result.best_fitness) {
                    result.best_fitness = trial_fitness;
                    result.best_point = population[i];
                }
            }
        }
        result.trace.push_back(GenerationTrace{t, result.best_fitness,
                                               diversity(population, result.best_point), evaluate.count()});
    }
    result.evaluations = evaluate.count();
    return result;
}

OptimizationResult random_search_run(long long budget, const ObjectiveProblem& problem, std::uint64_t seed) {
    Xoshiro256Source rng(seed);
    return random_search_run(budget, problem, rng);
}

OptimizationResult random_search_run(long long budget, const ObjectiveProblem& problem, RandomSource& rng) {
    if (budget < 1) throw ConfigError("random search: budget must be positive");
    CountingEvaluator evaluate(problem);

    OptimizationResult result;
    result.best_fitness = std::numeric_limits<double>::infinity();
    for (long long i = 1; i <= budget; ++i) {
        Vector x = uniform_sample(problem.space, rng);
        const double fitness = evaluate(x);
        if (fitness < result.best_fitness) {
            result.best_fitness = fitness;
            result.best_point = std::move(x);
        }
        result.trace.push_back(GenerationTrace{i, result.best_fitness, std::nullopt, evaluate.count()});
    }
    result.evaluations = evaluate.count();
    return result;
}

}  // namespace optbench
