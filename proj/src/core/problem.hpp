#pragma once

#include "core/types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace optbench {

struct KnownOptimum {
    Vector point;
    double value = 0.0;
};

using ConstraintFn = std::function<double(const Vector&)>;

// A box-constrained minimization problem. The objective must be a pure
// function of its input; optional equality/inequality constraint functions
// are handled through the quadratic penalty in penalized_evaluate.
struct ObjectiveProblem {
    std::string name;
    std::function<double(const Vector&)> objective;
    SearchSpace space;
    std::optional<KnownOptimum> known_optimum;
    std::vector<ConstraintFn> equality_constraints;    // h_j(x) = 0
    std::vector<ConstraintFn> inequality_constraints;  // g_k(x) <= 0
};

// Static quadratic penalty weights.
struct PenaltyConfig {
    double eq_weight = 0.0;
    double ineq_weight = 0.0;
};

// Raw objective value f(x). Throws std::invalid_argument on dimension
// mismatch. Does not count evaluations; callers that need budget accounting
// wrap the problem in a CountingEvaluator.
double evaluate(const ObjectiveProblem& problem, const Vector& x);

// f(x) + eq_weight * sum h_j(x)^2 + ineq_weight * sum max(0, g_k(x))^2.
// Equals evaluate(problem, x) exactly when both constraint lists are empty.
double penalized_evaluate(const ObjectiveProblem& problem, const Vector& x, const PenaltyConfig& penalty);

// The standard five-function suite at the given dimension, canonical bounds,
// known optima populated. Formulas are written out in docs/benchmarks.md.
std::vector<ObjectiveProblem> benchmark_suite(std::size_t dim);

// Registry: problem by name at a given dimension. Throws UnknownNameError.
ObjectiveProblem make_problem(const std::string& name, std::size_t dim);
std::vector<std::string> problem_names();

// Counts objective calls and maps non-finite objective values to +infinity
// so such points always lose selection. One instance per run.
class CountingEvaluator {
public:
    explicit CountingEvaluator(const ObjectiveProblem& problem) : problem_(&problem) {}

    double operator()(const Vector& x);
    long long count() const { return count_; }

private:
    const ObjectiveProblem* problem_;
    long long count_ = 0;
};

}  // namespace optbench
