#include "core/walks.hpp"

#include "core/random.hpp"
#include "core/types.hpp"
#include "support/scripted_source.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace optbench;
using optbench::testing::ScriptedSource;

namespace {

struct Moments {
    double mean;
    double variance;
    double excess_kurtosis;
};

Moments sample_moments(const std::vector<double>& values) {
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / n;
    double m2 = 0.0;
    double m4 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m4 /= n;
    return {mean, m2, m4 / (m2 * m2) - 3.0};
}

}  // namespace

TEST_CASE("uniform_sample hits the box corners under forced draws") {
    const SearchSpace space(Vector{-2.0, 0.5}, Vector{3.0, 1.5});

    ScriptedSource zeros;
    zeros.uniform_fallback = 0.0;
    CHECK(uniform_sample(space, zeros) == Vector{-2.0, 0.5});

    ScriptedSource ones;
    ones.uniform_fallback = 1.0;
    CHECK(uniform_sample(space, ones) == Vector{3.0, 1.5});
}

TEST_CASE("uniform_sample stays inside the box") {
    const SearchSpace space(-5.12, 5.12, 3);
    Xoshiro256Source rng(11);
    for (int i = 0; i < 100000; ++i) {
        CHECK(space.contains(uniform_sample(space, rng)));
    }
}

TEST_CASE("uniform_sample per-dimension mean matches the analytic 0.5") {
    const SearchSpace space(0.0, 1.0, 2);
    Xoshiro256Source rng(3);
    const int n = 1000000;
    double sum0 = 0.0;
    double sum1 = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vector x = uniform_sample(space, rng);
        sum0 += x[0];
        sum1 += x[1];
    }
    CHECK(std::abs(sum0 / n - 0.5) < 0.01);
    CHECK(std::abs(sum1 / n - 0.5) < 0.01);
}

TEST_CASE("gaussian_step forced cases") {
    ScriptedSource zeros;
    zeros.gaussian_fallback = 0.0;
    CHECK(gaussian_step(StepConfig{Vector{1.0, 2.0}}, zeros) == Vector{0.0, 0.0});

    ScriptedSource anything;
    anything.gaussian_fallback = 5.0;
    CHECK(gaussian_step(StepConfig{Vector{0.0, 0.0}}, anything) == Vector{0.0, 0.0});
}

TEST_CASE("gaussian_step moments match N(0, sigma^2 d^2)") {
    StepConfig config{Vector{1.0}, 1.0};
    Xoshiro256Source rng(17);
    std::vector<double> draws;
    draws.reserve(1000000);
    for (int i = 0; i < 1000000; ++i) {
        draws.push_back(gaussian_step(config, rng)[0]);
    }
    const Moments m = sample_moments(draws);
    CHECK(std::abs(m.mean) < 0.005);
    CHECK(std::abs(m.variance - 1.0) < 0.02);
}

TEST_CASE("gaussian_step scales linearly in the step length") {
    StepConfig single{Vector{1.0, 1.0}};
    StepConfig doubled{Vector{2.0, 2.0}};
    Xoshiro256Source rng_a(21);
    Xoshiro256Source rng_b(21);
    for (int i = 0; i < 100; ++i) {
        const Vector w1 = gaussian_step(single, rng_a);
        const Vector w2 = gaussian_step(doubled, rng_b);
        CHECK(w2[0] == 2.0 * w1[0]);
        CHECK(w2[1] == 2.0 * w1[1]);
    }
}

TEST_CASE("local_walk") {
    StepConfig config{Vector{1.0, 1.0}};

    ScriptedSource any;
    any.gaussian_fallback = 7.0;
    CHECK(local_walk(Vector{2.0, 3.0}, 0.0, config, any) == Vector{2.0, 3.0});

    ScriptedSource zeros;
    zeros.gaussian_fallback = 0.0;
    CHECK(local_walk(Vector{2.0, 3.0}, 1.0, config, zeros) == Vector{2.0, 3.0});

    ScriptedSource steps;
    steps.gaussians = {0.5, -0.5};
    CHECK(local_walk(Vector{1.0, 1.0}, 1.0, config, steps) == Vector{1.5, 0.5});

    ScriptedSource unused;
    CHECK_THROWS_AS(local_walk(Vector{1.0}, 1.0, config, unused), std::invalid_argument);
}

TEST_CASE("best_walk") {
    ScriptedSource zeros;
    zeros.gaussian_fallback = 0.0;
    StepConfig config{Vector{0.01, 0.01}};
    CHECK(best_walk(Vector{4.0, -4.0}, config, zeros) == Vector{4.0, -4.0});

    ScriptedSource ones;
    ones.gaussians = {1.0, 1.0};
    CHECK(best_walk(Vector{0.0, 0.0}, config, ones) == Vector{0.01, 0.01});

    ScriptedSource unused;
    CHECK_THROWS_AS(best_walk(Vector{1.0, 2.0, 3.0}, config, unused), std::invalid_argument);
}

TEST_CASE("best_walk draws are zero-mean around the best point") {
    StepConfig config{Vector{1.0}};
    Xoshiro256Source rng(4);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += best_walk(Vector{0.0}, config, rng)[0];
    }
    CHECK(std::abs(sum / n) < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("levy_step forced and tail behaviour") {
    ScriptedSource any;
    any.gaussian_fallback = 3.0;
    StepConfig zero_d{Vector{0.0, 0.0}};
    CHECK(levy_step(zero_d, any) == Vector{0.0, 0.0});

    StepConfig levy{Vector{1.0}, 1.0, 1.5};
    StepConfig gauss{Vector{1.0}, 1.0};
    Xoshiro256Source rng_levy(8);
    Xoshiro256Source rng_gauss(8);
    const int n = 1000000;
    std::vector<double> levy_draws;
    std::vector<double> gauss_draws;
    levy_draws.reserve(n);
    gauss_draws.reserve(n);
    int levy_tail = 0;
    int gauss_tail = 0;
    for (int i = 0; i < n; ++i) {
        const double l = levy_step(levy, rng_levy)[0];
        const double g = gaussian_step(gauss, rng_gauss)[0];
        levy_draws.push_back(l);
        gauss_draws.push_back(g);
        if (std::abs(l) > 10.0) ++levy_tail;
        if (std::abs(g) > 10.0) ++gauss_tail;
    }
    CHECK(sample_moments(levy_draws).excess_kurtosis > sample_moments(gauss_draws).excess_kurtosis);
    CHECK(levy_tail > gauss_tail);
}

TEST_CASE("levy_step tails thin out as beta rises") {
    const int n = 1000000;
    double previous = std::numeric_limits<double>::infinity();
    for (double beta : {1.2, 1.5, 1.9}) {
        StepConfig config{Vector{1.0}, 1.0, beta};
        Xoshiro256Source rng(15);
        std::vector<double> draws;
        draws.reserve(n);
        for (int i = 0; i < n; ++i) draws.push_back(levy_step(config, rng)[0]);
        const double kurtosis = sample_moments(draws).excess_kurtosis;
        CHECK(kurtosis < previous);
        previous = kurtosis;
    }
}

TEST_CASE("all kernels replay bit-identically under one seed") {
    const SearchSpace space(-1.0, 2.0, 3);
    StepConfig config{Vector{0.5, 0.5, 0.5}, 1.0, 1.5};
    for (int round = 0; round < 2; ++round) {
        Xoshiro256Source a(31);
        Xoshiro256Source b(31);
        CHECK(uniform_sample(space, a) == uniform_sample(space, b));
        CHECK(gaussian_step(config, a) == gaussian_step(config, b));
        CHECK(local_walk(Vector{0.0, 0.0, 0.0}, 2.0, config, a) ==
              local_walk(Vector{0.0, 0.0, 0.0}, 2.0, config, b));
        CHECK(best_walk(Vector{1.0, 1.0, 1.0}, config, a) ==
              best_walk(Vector{1.0, 1.0, 1.0}, config, b));
        CHECK(levy_step(config, a) == levy_step(config, b));
    }
}

TEST_CASE("step config validation") {
    ScriptedSource unused;
    CHECK_THROWS_AS(gaussian_step(StepConfig{Vector{-1.0}}, unused), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_step(StepConfig{Vector{1.0}, 0.0}, unused), std::invalid_argument);
    CHECK_THROWS_AS(levy_step(StepConfig{Vector{1.0}, 1.0, 1.0}, unused), std::invalid_argument);
    CHECK_THROWS_AS(levy_step(StepConfig{Vector{1.0}, 1.0, 2.5}, unused), std::invalid_argument);
    ScriptedSource stub;
    stub.gaussian_fallback = 1.0;
    CHECK_NOTHROW(levy_step(StepConfig{Vector{0.0}, 1.0, 2.0}, stub));  // beta = 2 allowed
}
