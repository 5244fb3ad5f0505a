#include "harmonic/harmonizer.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <limits>

#include "harmonic/errors.hpp"

namespace harmonic {

namespace {

// r^degree <= value, without overflow.
bool pow_leq(long long r, long long degree, long long value) {
    long long acc = 1;
    for (long long i = 0; i < degree; ++i) {
        if (acc > value / r) return false;
        acc *= r;
    }
    return acc <= value;
}

void check_multiplier(const TaskSet& ts, long long m) {
    if (m < 1 || m > ts.effective_bounds.front())
        throw MultiplierOutOfRange("multiplier " + std::to_string(m) +
                                   " outside [1, " +
                                   std::to_string(ts.effective_bounds.front()) + "]");
}

} // namespace

long long floor_log(long long base, long long value) {
    assert(base >= 2 && value >= 1);
    long long x = 0;
    long long p = 1;
    while (p <= value / base) {
        p *= base;
        ++x;
    }
    return x;
}

long long integer_root(long long degree, long long value) {
    assert(degree >= 1 && value >= 1);
    if (degree == 1) return value;
    long long lo = 1, hi = 2;
    while (pow_leq(hi, degree, value)) hi *= 2;
    // invariant: lo^degree <= value < hi^degree
    while (hi - lo > 1) {
        const long long mid = lo + (hi - lo) / 2;
        if (pow_leq(mid, degree, value))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::vector<long long> exponent_vector(const TaskSet& taskset,
                                       long long multiplier, long long base) {
    check_multiplier(taskset, multiplier);
    std::vector<long long> xs(taskset.size(), 0);
    if (base == 1) return xs;
    for (std::size_t i = 0; i < taskset.size(); ++i)
        xs[i] = floor_log(base, taskset.effective_bounds[i] / multiplier);
    return xs;
}

std::vector<long long> closest_harmonic_series(const TaskSet& taskset,
                                               long long multiplier,
                                               long long base) {
    check_multiplier(taskset, multiplier);
    std::vector<long long> periods(taskset.size(), multiplier);
    if (base == 1) return periods;
    for (std::size_t i = 0; i < taskset.size(); ++i) {
        const long long quota = taskset.effective_bounds[i] / multiplier;
        long long p = 1;
        // largest power of base not exceeding quota
        while (p <= quota / base) p *= base;
        periods[i] = multiplier * p;
    }
    return periods;
}

std::vector<long long> local_minima_bases(const TaskSet& taskset,
                                          long long multiplier) {
    check_multiplier(taskset, multiplier);
    std::vector<long long> bases{1};
    for (const long long bound : taskset.effective_bounds) {
        const long long quota = bound / multiplier;
        if (quota < 2) continue;
        const long long x_max = floor_log(2, quota);
        for (long long x = 1; x <= x_max; ++x)
            bases.push_back(integer_root(x, quota));
    }
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    return bases;
}

namespace {

struct Best {
    double cost = std::numeric_limits<double>::infinity();
    bool found = false;
    long long m = 0, b = 0;
    std::vector<long long> periods;
};

void consider(Best& best, const TaskSet& ts, Metric metric, long long m,
              long long b, const std::vector<long long>& periods) {
    const double cost = evaluate(metric, ts, periods);
    // strict `<`: first candidate in scan order wins ties
    if (cost < best.cost && is_feasible(ts, periods)) {
        best.cost = cost;
        best.found = true;
        best.m = m;
        best.b = b;
        best.periods = periods;
    }
}

SearchResult finish(Best& best, const TaskSet& ts, Metric metric,
                    Algorithm algo, long long pairs,
                    std::chrono::steady_clock::time_point start) {
    SearchResult result;
    result.stats.pairs_evaluated = pairs;
    result.stats.algorithm = algo;
    result.stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    if (best.found) {
        HarmonicAssignment a;
        a.multiplier = best.m;
        a.base = best.b;
        a.exponents = exponent_vector(ts, best.m, best.b);
        a.periods = std::move(best.periods);
        a.cost = best.cost;
        a.metric = metric;
        result.assignment = std::move(a);
    }
    return result;
}

} // namespace

SearchResult brute_force_search(const TaskSet& taskset, Metric metric) {
    const auto start = std::chrono::steady_clock::now();
    const long long m_max = taskset.effective_bounds.front();
    const long long t_n = taskset.effective_bounds.back();
    Best best;
    long long pairs = 0;
    for (long long m = 1; m <= m_max; ++m) {
        const long long b_max = t_n / m;
        for (long long b = 1; b <= b_max; ++b) {
            const auto periods = closest_harmonic_series(taskset, m, b);
            ++pairs;
            consider(best, taskset, metric, m, b, periods);
        }
    }
    return finish(best, taskset, metric, Algorithm::BruteForce, pairs, start);
}

SearchResult dphs_search(const TaskSet& taskset, Metric metric) {
    const auto start = std::chrono::steady_clock::now();
    const long long m_max = taskset.effective_bounds.front();
    Best best;
    long long pairs = 0;
    for (long long m = 1; m <= m_max; ++m) {
        for (const long long b : local_minima_bases(taskset, m)) {
            const auto periods = closest_harmonic_series(taskset, m, b);
            ++pairs;
            consider(best, taskset, metric, m, b, periods);
        }
    }
    return finish(best, taskset, metric, Algorithm::DPHS, pairs, start);
}

} // namespace harmonic
