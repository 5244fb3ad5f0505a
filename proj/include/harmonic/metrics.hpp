#pragma once

#include <vector>

#include "harmonic/model.hpp"

namespace harmonic {

// Cost of a candidate period vector against the floored original bounds.
//   TPE: sum (T - T') / T
//   TSU: sum C / T'
//   FOE: sum (T - T')
//   MPE: max (T - T') / T
// Lower is better for all four. Values are in natural units; the CLI scales
// percentage metrics by 100 for display.
double evaluate(Metric metric, const TaskSet& taskset,
                const std::vector<long long>& periods);

// True iff every task fits its candidate period (C_i <= T'_i).
bool is_feasible(const TaskSet& taskset, const std::vector<long long>& periods);

} // namespace harmonic
