#pragma once

#include <optional>
#include <vector>

#include "harmonic/model.hpp"

namespace harmonic {

struct ResponseTimeReport {
    // One entry per task in TaskSet order; nullopt means the fixed point
    // exceeded the task's period (diverged for schedulability purposes).
    std::vector<std::optional<double>> per_task_response;
    bool schedulable = false;
};

// Worst-case response time of one task under RM priorities induced by the
// given period vector (ties keep the original order). Returns nullopt as
// soon as the iterate exceeds the task's period.
std::optional<double> response_time(const TaskSet& taskset, std::size_t index,
                                    const std::vector<long long>& periods);

ResponseTimeReport is_rm_schedulable(const TaskSet& taskset,
                                     const std::vector<long long>& periods);

// Harmonic sets are schedulable exactly when total utilization <= 1.
// Throws NotHarmonic if the divisibility chain is violated.
bool harmonic_utilization_test(const TaskSet& taskset,
                               const HarmonicAssignment& assignment);

} // namespace harmonic
