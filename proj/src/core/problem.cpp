#include "core/problem.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace optbench {

double evaluate(const ObjectiveProblem& problem, const Vector& x) {
    if (x.size() != problem.space.dim()) {
        throw std::invalid_argument("evaluate: point has dimension " + std::to_string(x.size()) +
                                    ", problem '" + problem.name + "' expects " +
                                    std::to_string(problem.space.dim()));
    }
    return problem.objective(x);
}

double penalized_evaluate(const ObjectiveProblem& problem, const Vector& x, const PenaltyConfig& penalty) {
    if (!(penalty.eq_weight >= 0.0) || !(penalty.ineq_weight >= 0.0)) {
        throw std::invalid_argument("penalized_evaluate: penalty weights must be nonnegative");
    }
    double value = evaluate(problem, x);
    for (const auto& h : problem.equality_constraints) {
        const double v = h(x);
        value += penalty.eq_weight * v * v;
    }
    for (const auto& g : problem.inequality_constraints) {
        const double v = g(x);
        if (v > 0.0) value += penalty.ineq_weight * v * v;
    }
    return value;
}

double CountingEvaluator::operator()(const Vector& x) {
    ++count_;
    const double f = evaluate(*problem_, x);
    return std::isfinite(f) ? f : std::numeric_limits<double>::infinity();
}

namespace {

double sphere_fn(const Vector& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double rosenbrock_fn(const Vector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double rastrigin_fn(const Vector& x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double v : x) {
        s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
    }
    return s;
}

double ackley_fn(const Vector& x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * std::numbers::pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double griewank_fn(const Vector& x) {
    double s = 0.0;
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i] / 4000.0;
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s - p + 1.0;
}

struct SuiteEntry {
    const char* name;
    double lower;
    double upper;
    double (*fn)(const Vector&);
    double optimum_coord;  // optimum is this value in every dimension
};

constexpr SuiteEntry kSuite[] = {
    {"sphere", -5.12, 5.12, sphere_fn, 0.0},
    {"rosenbrock", -5.0, 10.0, rosenbrock_fn, 1.0},
    {"rastrigin", -5.12, 5.12, rastrigin_fn, 0.0},
    {"ackley", -32.768, 32.768, ackley_fn, 0.0},
    {"griewank", -600.0, 600.0, griewank_fn, 0.0},
};

ObjectiveProblem instantiate(const SuiteEntry& entry, std::size_t dim) {
    return ObjectiveProblem{
        .name = entry.name,
        .objective = entry.fn,
        .space = SearchSpace(entry.lower, entry.upper, dim),
        .known_optimum = KnownOptimum{Vector(dim, entry.optimum_coord), 0.0},
        .equality_constraints = {},
        .inequality_constraints = {},
    };
}

}  // namespace

std::vector<ObjectiveProblem> benchmark_suite(std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("benchmark_suite: dimension must be at least 1");
    }
    std::vector<ObjectiveProblem> suite;
    suite.reserve(std::size(kSuite));
    for (const auto& entry : kSuite) {
        suite.push_back(instantiate(entry, dim));
    }
    return suite;
}

ObjectiveProblem make_problem(const std::string& name, std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("make_problem: dimension must be at least 1");
    }
    for (const auto& entry : kSuite) {
        if (name == entry.name) return instantiate(entry, dim);
    }
    throw UnknownNameError("unknown problem '" + name + "'");
}

std::vector<std::string> problem_names() {
    std::vector<std::string> names;
    for (const auto& entry : kSuite) names.emplace_back(entry.name);
    return names;
}

}  // namespace optbench
