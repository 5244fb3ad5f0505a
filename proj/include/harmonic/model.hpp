#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace harmonic {

// Cost metric selector. All four are "lower is better".
enum class Metric { TPE, TSU, FOE, MPE };

enum class Algorithm { BruteForce, DPHS };

const char* metric_name(Metric m);
Metric parse_metric(const std::string& s);
const char* algorithm_name(Algorithm a);

// One periodic task: worst-case execution time and the application-given
// period upper bound. Deadline is implicit (D = T).
struct Task {
    std::string name;
    double wcet = 0.0;
    double period_bound = 0.0;

    bool operator==(const Task&) const = default;
};

// Tasks sorted by non-decreasing period bound (ties keep input order),
// with the floored integer bounds the search works on.
// Immutable after build_taskset.
struct TaskSet {
    std::vector<Task> tasks;
    std::vector<long long> effective_bounds;

    std::size_t size() const { return tasks.size(); }

    bool operator==(const TaskSet&) const = default;
};

// A harmonic solution: periods[i] = multiplier * base^exponents[i].
// For base 1 the exponents are canonically all zero.
struct HarmonicAssignment {
    long long multiplier = 0;
    long long base = 0;
    std::vector<long long> exponents;
    std::vector<long long> periods;
    double cost = 0.0;
    Metric metric = Metric::TPE;
};

struct SearchStats {
    long long pairs_evaluated = 0;
    std::chrono::nanoseconds elapsed{0};
    Algorithm algorithm = Algorithm::BruteForce;
};

// Validates, sorts by period bound and floors the bounds.
// Tasks with wcet > period_bound are accepted (the search will just find
// them infeasible); a warning line is appended per such task if the caller
// passes a sink.
TaskSet build_taskset(const std::vector<Task>& raw_tasks,
                      std::vector<std::string>* warnings = nullptr);

// True iff sorting by (new period, original bound) reproduces the original
// rate-monotonic order.
bool priority_order_preserved(const TaskSet& original,
                              const std::vector<long long>& periods);

} // namespace harmonic
