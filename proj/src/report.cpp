#include "harmonic/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace harmonic {

Report make_report(const TaskSet& taskset, const SearchResult& result) {
    Report rep;
    rep.original = taskset;
    rep.assignment = result.assignment;
    rep.stats = result.stats;
    if (!result.assignment) return rep;

    const auto& a = *result.assignment;
    rep.cost = a.cost;
    for (std::size_t i = 0; i < taskset.size(); ++i) {
        ReportRow row;
        row.name = taskset.tasks[i].name;
        row.wcet = taskset.tasks[i].wcet;
        row.bound = taskset.effective_bounds[i];
        row.period = a.periods[i];
        row.utilization = row.wcet / static_cast<double>(row.period);
        row.first_order_error = row.bound - row.period;
        row.percentage_error =
            static_cast<double>(row.first_order_error) / static_cast<double>(row.bound);
        rep.total_utilization += row.utilization;
        rep.total_first_order_error += row.first_order_error;
        rep.max_percentage_error = std::max(rep.max_percentage_error, row.percentage_error);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string render_table(const Report& rep, bool with_stats) {
    std::ostringstream out;
    out << std::fixed;
    if (!rep.assignment) {
        out << "no feasible harmonic assignment\n";
    } else {
        out << std::left << std::setw(12) << "task" << std::right
            << std::setw(10) << "C" << std::setw(10) << "T" << std::setw(10)
            << "T'" << std::setw(12) << "U" << std::setw(12) << "PE(%)"
            << std::setw(10) << "FOE" << '\n';
        for (const auto& r : rep.rows) {
            out << std::left << std::setw(12) << r.name << std::right
                << std::setw(10) << std::setprecision(3) << r.wcet
                << std::setw(10) << r.bound << std::setw(10) << r.period
                << std::setw(12) << std::setprecision(5) << r.utilization
                << std::setw(12) << std::setprecision(3)
                << r.percentage_error * 100.0 << std::setw(10)
                << r.first_order_error << '\n';
        }
        const auto& a = *rep.assignment;
        out << "m = " << a.multiplier << ", b = " << a.base << '\n';
        const bool pct = a.metric == Metric::TPE || a.metric == Metric::MPE;
        out << metric_name(a.metric) << " cost = " << std::setprecision(6)
            << (pct ? a.cost * 100.0 : a.cost) << (pct ? " %" : "") << '\n';
        out << "total U = " << std::setprecision(6) << rep.total_utilization
            << ", max PE = " << rep.max_percentage_error * 100.0
            << " %, total FOE = " << rep.total_first_order_error << '\n';
    }
    if (with_stats)
        out << "pairs evaluated = " << rep.stats.pairs_evaluated
            << ", elapsed = " << rep.stats.elapsed.count() << " ns ("
            << algorithm_name(rep.stats.algorithm) << ")\n";
    return out.str();
}

std::string render_json(const Report& rep, bool with_stats) {
    nlohmann::json j;
    nlohmann::json tasks = nlohmann::json::array();
    for (const Task& t : rep.original.tasks)
        tasks.push_back({{"name", t.name}, {"wcet", t.wcet}, {"period", t.period_bound}});
    j["taskset"] = tasks;
    j["feasible"] = rep.assignment.has_value();
    if (rep.assignment) {
        const auto& a = *rep.assignment;
        j["assignment"] = {
            {"multiplier", a.multiplier}, {"base", a.base},
            {"exponents", a.exponents},   {"periods", a.periods},
            {"cost", a.cost},             {"metric", metric_name(a.metric)},
        };
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"name", r.name},
                            {"wcet", r.wcet},
                            {"bound", r.bound},
                            {"period", r.period},
                            {"utilization", r.utilization},
                            {"percentage_error", r.percentage_error},
                            {"first_order_error", r.first_order_error}});
        j["rows"] = rows;
        j["totals"] = {{"cost", rep.cost},
                       {"total_utilization", rep.total_utilization},
                       {"max_percentage_error", rep.max_percentage_error},
                       {"total_first_order_error", rep.total_first_order_error}};
    }
    if (with_stats)
        j["stats"] = {{"pairs_evaluated", rep.stats.pairs_evaluated},
                      {"elapsed_ns", rep.stats.elapsed.count()},
                      {"algorithm", algorithm_name(rep.stats.algorithm)}};
    return j.dump(2) + "\n";
}

} // namespace harmonic
