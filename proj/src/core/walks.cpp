#include "core/walks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace optbench {

void validate(const StepConfig& config) {
    for (double d : config.step_lengths) {
        if (!(d >= 0.0)) {
            throw std::invalid_argument("step config: step lengths must be nonnegative");
        }
    }
    if (!(config.sigma > 0.0)) {
        throw std::invalid_argument("step config: sigma must be positive");
    }
    if (!(config.levy_beta > 1.0 && config.levy_beta <= 2.0)) {
        throw std::invalid_argument("step config: levy_beta must lie in (1, 2]");
    }
}

Vector uniform_sample(const SearchSpace& space, RandomSource& rng) {
    Vector x(space.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double eps = rng.uniform();
        x[i] = space.lower()[i] + (space.upper()[i] - space.lower()[i]) * eps;
    }
    return x;
}

Vector gaussian_step(const StepConfig& config, RandomSource& rng) {
    validate(config);
    Vector w(config.step_lengths.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = config.sigma * rng.gaussian() * config.step_lengths[i];
    }
    return w;
}

Vector local_walk(const Vector& x_old, double step_size, const StepConfig& config, RandomSource& rng) {
    if (x_old.size() != config.step_lengths.size()) {
        throw std::invalid_argument("local_walk: point and step-length dimensions differ");
    }
    Vector x = x_old;
    const Vector w = gaussian_step(config, rng);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += step_size * w[i];
    }
    return x;
}

Vector best_walk(const Vector& g_best, const StepConfig& config, RandomSource& rng) {
    if (g_best.size() != config.step_lengths.size()) {
        throw std::invalid_argument("best_walk: point and step-length dimensions differ");
    }
    Vector x = g_best;
    const Vector w = gaussian_step(config, rng);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += w[i];
    }
    return x;
}

double mantegna_scale(double beta) {
    const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

Vector levy_step(const StepConfig& config, RandomSource& rng) {
    validate(config);
    const double sigma_u = mantegna_scale(config.levy_beta);
    Vector w(config.step_lengths.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double u = sigma_u * rng.gaussian();
        double v = std::abs(rng.gaussian());
        if (v < 1e-10) v = 1e-10;  // keep the ratio finite
        w[i] = config.step_lengths[i] * u / std::pow(v, 1.0 / config.levy_beta);
    }
    return w;
}

}  // namespace optbench
