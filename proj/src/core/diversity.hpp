#pragma once

#include "core/types.hpp"

namespace optbench {

// Mean Euclidean distance from each position to the current best point.
// Shrinks toward zero as a population concentrates around the best.
double diversity(const std::vector<Vector>& positions, const Vector& g_best);

}  // namespace optbench
