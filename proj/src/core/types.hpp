#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace optbench {

using Vector = std::vector<double>;

// Invalid algorithm/experiment configuration (bad parameter values, budgets
// that cannot be mapped onto generation counts, ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A name string that does not resolve against a registry.
class UnknownNameError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Axis-aligned feasible box. Bounds are validated once at construction;
// every dimension must have strictly positive extent.
class SearchSpace {
public:
    SearchSpace(Vector lower, Vector upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {
        if (lower_.empty() || lower_.size() != upper_.size()) {
            throw std::invalid_argument("search space: bound vectors must be non-empty and equal length");
        }
        for (std::size_t i = 0; i < lower_.size(); ++i) {
            if (!(lower_[i] < upper_[i])) {
                throw std::invalid_argument("search space: lower bound must be strictly below upper bound in dimension " + std::to_string(i));
            }
        }
    }

    // Uniform box [lo, hi]^dim.
    SearchSpace(double lo, double hi, std::size_t dim)
        : SearchSpace(Vector(dim, lo), Vector(dim, hi)) {}

    std::size_t dim() const { return lower_.size(); }
    const Vector& lower() const { return lower_; }
    const Vector& upper() const { return upper_; }

    bool contains(const Vector& x) const {
        if (x.size() != dim()) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
        }
        return true;
    }

    Vector clamp(Vector x) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < lower_[i]) x[i] = lower_[i];
            if (x[i] > upper_[i]) x[i] = upper_[i];
        }
        return x;
    }

private:
    Vector lower_;
    Vector upper_;
};

}  // namespace optbench
