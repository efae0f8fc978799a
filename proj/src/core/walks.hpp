#pragma once

#include "core/random.hpp"
#include "core/types.hpp"

namespace optbench {

// Scales for the random-walk kernels: per-dimension step lengths, the
// Gaussian standard deviation, and the heavy-tail index for Levy steps.
struct StepConfig {
    Vector step_lengths;     // d, one nonnegative entry per dimension
    double sigma = 1.0;      // std of the Gaussian factor
    double levy_beta = 1.5;  // tail index, in (1, 2]
};

void validate(const StepConfig& config);

// One point drawn uniformly from the box: L + (U - L) * eps, eps ~ Unif[0,1)
// independently per dimension.
Vector uniform_sample(const SearchSpace& space, RandomSource& rng);

// w with w[i] = eps_i * d[i], eps_i ~ N(0, sigma^2) independent per dimension.
Vector gaussian_step(const StepConfig& config, RandomSource& rng);

// x_old + step_size * gaussian_step(config). No bound handling here; the
// algorithm layer clamps.
Vector local_walk(const Vector& x_old, double step_size, const StepConfig& config, RandomSource& rng);

// g_best + gaussian_step(config).
Vector best_walk(const Vector& g_best, const StepConfig& config, RandomSource& rng);

// Heavy-tailed step per dimension via Mantegna's recipe
// (u / |v|^(1/beta), u ~ N(0, sigma_u^2), v ~ N(0,1)), scaled by d[i].
Vector levy_step(const StepConfig& config, RandomSource& rng);

// Mantegna's sigma_u for a given tail index; exposed for verification.
double mantegna_scale(double beta);

}  // namespace optbench
