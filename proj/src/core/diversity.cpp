#include "core/diversity.hpp"

#include <cmath>
#include <stdexcept>

namespace optbench {

double diversity(const std::vector<Vector>& positions, const Vector& g_best) {
    if (positions.empty()) {
        throw std::invalid_argument("diversity: positions must be non-empty");
    }
    double total = 0.0;
    for (const auto& row : positions) {
        if (row.size() != g_best.size()) {
            throw std::invalid_argument("diversity: position and best-point dimensions differ");
        }
        double sq = 0.0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const double delta = row[i] - g_best[i];
            sq += delta * delta;
        }
        total += std::sqrt(sq);
    }
    return total / static_cast<double>(positions.size());
}

}  // namespace optbench
