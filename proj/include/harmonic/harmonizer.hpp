#pragma once

#include <optional>
#include <vector>

#include "harmonic/metrics.hpp"
#include "harmonic/model.hpp"

namespace harmonic {

struct SearchResult {
    // Absent iff no (m, b) pair in the search space yields a feasible vector.
    std::optional<HarmonicAssignment> assignment;
    SearchStats stats;
};

// Largest x with base^x <= value. Exact integer arithmetic.
long long floor_log(long long base, long long value);

// Largest r with r^degree <= value. Exact integer arithmetic.
long long integer_root(long long degree, long long value);

// Periods m * b^x_i with each x_i maximal under the task's floored bound.
// For b = 1 every period is m.
std::vector<long long> closest_harmonic_series(const TaskSet& taskset,
                                               long long multiplier,
                                               long long base);

// Exponent vector backing closest_harmonic_series (all zero for b = 1).
std::vector<long long> exponent_vector(const TaskSet& taskset,
                                       long long multiplier, long long base);

// Ascending deduplicated bases at which some task's exponent is about to
// change, plus b = 1. Only these can be local optima for a fixed multiplier.
std::vector<long long> local_minima_bases(const TaskSet& taskset,
                                          long long multiplier);

// Full scan over m in [1, T_1] and b in [1, T_n/m].
SearchResult brute_force_search(const TaskSet& taskset, Metric metric);

// Same best-cost contract as brute force, scanning only local-minima bases.
SearchResult dphs_search(const TaskSet& taskset, Metric metric);

} // namespace harmonic
