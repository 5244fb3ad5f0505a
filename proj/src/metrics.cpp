#include "harmonic/metrics.hpp"

#include <algorithm>

#include "harmonic/errors.hpp"

namespace harmonic {

double evaluate(Metric metric, const TaskSet& taskset,
                const std::vector<long long>& periods) {
    const std::size_t n = taskset.size();
    if (periods.size() != n)
        throw LengthMismatch("period vector length does not match task set");

    switch (metric) {
        case Metric::TPE: {
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(taskset.effective_bounds[i]);
                sum += (t - static_cast<double>(periods[i])) / t;
            }
            return sum;
        }
        case Metric::TSU: {
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                sum += taskset.tasks[i].wcet / static_cast<double>(periods[i]);
            return sum;
        }
        case Metric::FOE: {
            long long sum = 0;
            for (std::size_t i = 0; i < n; ++i)
                sum += taskset.effective_bounds[i] - periods[i];
            return static_cast<double>(sum);
        }
        case Metric::MPE: {
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(taskset.effective_bounds[i]);
                worst = std::max(worst, (t - static_cast<double>(periods[i])) / t);
            }
            return worst;
        }
    }
    return 0.0;
}

bool is_feasible(const TaskSet& taskset, const std::vector<long long>& periods) {
    if (periods.size() != taskset.size())
        throw LengthMismatch("period vector length does not match task set");
    for (std::size_t i = 0; i < taskset.size(); ++i)
        if (taskset.tasks[i].wcet > static_cast<double>(periods[i])) return false;
    return true;
}

} // namespace harmonic
