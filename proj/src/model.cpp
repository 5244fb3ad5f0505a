#include "harmonic/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "harmonic/errors.hpp"

namespace harmonic {

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::TPE: return "tpe";
        case Metric::TSU: return "tsu";
        case Metric::FOE: return "foe";
        case Metric::MPE: return "mpe";
    }
    return "?";
}

Metric parse_metric(const std::string& s) {
    if (s == "tpe") return Metric::TPE;
    if (s == "tsu") return Metric::TSU;
    if (s == "foe") return Metric::FOE;
    if (s == "mpe") return Metric::MPE;
    throw InvalidTask("unknown metric: " + s);
}

const char* algorithm_name(Algorithm a) {
    return a == Algorithm::BruteForce ? "brute-force" : "dphs";
}

TaskSet build_taskset(const std::vector<Task>& raw_tasks,
                      std::vector<std::string>* warnings) {
    if (raw_tasks.empty()) throw EmptyTaskSet{};
    for (const Task& t : raw_tasks) {
        if (!(t.wcet > 0.0))
            throw InvalidTask("task '" + t.name + "': wcet must be > 0");
        if (!(t.period_bound >= 1.0))
            throw InvalidTask("task '" + t.name + "': period bound must be >= 1");
    }

    TaskSet ts;
    ts.tasks = raw_tasks;
    std::stable_sort(ts.tasks.begin(), ts.tasks.end(),
                     [](const Task& a, const Task& b) {
                         return a.period_bound < b.period_bound;
                     });

    ts.effective_bounds.reserve(ts.tasks.size());
    for (const Task& t : ts.tasks) {
        ts.effective_bounds.push_back(static_cast<long long>(std::floor(t.period_bound)));
        if (warnings && t.wcet > t.period_bound)
            warnings->push_back("task '" + t.name +
                                "' has wcet greater than its period bound; "
                                "no feasible harmonic assignment can include it");
    }
    return ts;
}

bool priority_order_preserved(const TaskSet& original,
                              const std::vector<long long>& periods) {
    const std::size_t n = original.size();
    if (periods.size() != n)
        throw LengthMismatch("period vector length does not match task set");

    // Original order is already sorted by bound with input-order ties, so the
    // RM order after reassignment matches iff sorting indices by
    // (new period, original bound, position) is the identity.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (periods[a] != periods[b]) return periods[a] < periods[b];
        if (original.tasks[a].period_bound != original.tasks[b].period_bound)
            return original.tasks[a].period_bound < original.tasks[b].period_bound;
        return a < b;
    });
    for (std::size_t i = 0; i < n; ++i)
        if (order[i] != i) return false;
    return true;
}

} // namespace harmonic
