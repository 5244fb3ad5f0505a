#include "harmonic/schedulability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "harmonic/errors.hpp"

namespace harmonic {

namespace {

constexpr long long kIterationCap = 1'000'000;

// Priority order: ascending period, ties by position (tasks are already
// sorted by original bound with input-order ties).
std::vector<std::size_t> priority_order(const std::vector<long long>& periods) {
    std::vector<std::size_t> order(periods.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return periods[a] < periods[b];
                     });
    return order;
}

} // namespace

std::optional<double> response_time(const TaskSet& taskset, std::size_t index,
                                    const std::vector<long long>& periods) {
    if (periods.size() != taskset.size())
        throw LengthMismatch("period vector length does not match task set");
    if (index >= taskset.size())
        throw IndexOutOfRange("task index " + std::to_string(index));

    const auto order = priority_order(periods);
    std::vector<std::size_t> higher;
    for (const std::size_t j : order) {
        if (j == index) break;
        higher.push_back(j);
    }

    const double c = taskset.tasks[index].wcet;
    const double deadline = static_cast<double>(periods[index]);

    double a = c;
    for (const std::size_t j : higher) a += taskset.tasks[j].wcet;

    for (long long iter = 0; iter < kIterationCap; ++iter) {
        if (a > deadline) return std::nullopt;
        double next = c;
        for (const std::size_t j : higher)
            next += std::ceil(a / static_cast<double>(periods[j])) *
                    taskset.tasks[j].wcet;
        if (next == a) return a;
        a = next;
    }
    throw IterationLimit("response-time iteration did not settle");
}

ResponseTimeReport is_rm_schedulable(const TaskSet& taskset,
                                     const std::vector<long long>& periods) {
    ResponseTimeReport report;
    report.schedulable = true;
    report.per_task_response.reserve(taskset.size());
    for (std::size_t i = 0; i < taskset.size(); ++i) {
        auto r = response_time(taskset, i, periods);
        if (!r) report.schedulable = false;
        report.per_task_response.push_back(r);
    }
    return report;
}

bool harmonic_utilization_test(const TaskSet& taskset,
                               const HarmonicAssignment& assignment) {
    const auto& p = assignment.periods;
    if (p.size() != taskset.size())
        throw LengthMismatch("assignment length does not match task set");
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i + 1] < p[i] || p[i + 1] % p[i] != 0)
            throw NotHarmonic("periods do not form a divisibility chain");
    }
    double u = 0.0;
    for (std::size_t i = 0; i < taskset.size(); ++i)
        u += taskset.tasks[i].wcet / static_cast<double>(p[i]);
    return u <= 1.0 + 1e-9;
}

} // namespace harmonic
