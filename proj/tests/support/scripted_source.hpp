#pragma once

#include "core/random.hpp"

#include <deque>
#include <optional>
#include <stdexcept>

namespace optbench::testing {

// Test-only draw source with scripted queues per draw kind. When a queue
// runs dry the optional fallback value repeats forever; with no fallback the
// test has consumed more draws than it scripted, which is an error worth
// failing loudly on.
class ScriptedSource final : public RandomSource {
public:
    std::deque<double> uniforms;
    std::deque<double> gaussians;
    std::deque<std::size_t> indices;
    std::optional<double> uniform_fallback;
    std::optional<double> gaussian_fallback;

    std::uint64_t next_u64() override {
        throw std::logic_error("scripted source: raw bits requested");
    }

    double uniform() override { return pop(uniforms, uniform_fallback, "uniform"); }
    double gaussian() override { return pop(gaussians, gaussian_fallback, "gaussian"); }

    std::size_t uniform_index(std::size_t bound) override {
        if (indices.empty()) throw std::logic_error("scripted source: index queue exhausted");
        const std::size_t value = indices.front();
        indices.pop_front();
        if (value >= bound) throw std::logic_error("scripted source: index out of bound");
        return value;
    }

private:
    static double pop(std::deque<double>& queue, const std::optional<double>& fallback,
                      const char* kind) {
        if (!queue.empty()) {
            const double value = queue.front();
            queue.pop_front();
            return value;
        }
        if (fallback) return *fallback;
        throw std::logic_error(std::string("scripted source: ") + kind + " queue exhausted");
    }
};

}  // namespace optbench::testing
