#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harmonic/harmonizer.hpp"
#include "harmonic/model.hpp"

namespace harmonic {

struct ReportRow {
    std::string name;
    double wcet = 0.0;
    long long bound = 0;
    long long period = 0;
    double utilization = 0.0;
    double percentage_error = 0.0;
    long long first_order_error = 0;
};

// Per-task breakdown of one search result, in the shape of the paper-style
// comparison tables.
struct Report {
    TaskSet original;
    std::optional<HarmonicAssignment> assignment;
    std::vector<ReportRow> rows;
    double cost = 0.0;
    double total_utilization = 0.0;
    double max_percentage_error = 0.0;
    long long total_first_order_error = 0;
    SearchStats stats;
};

Report make_report(const TaskSet& taskset, const SearchResult& result);

// Percentage metrics are scaled by 100 in the table; JSON carries raw values.
std::string render_table(const Report& report, bool with_stats);
std::string render_json(const Report& report, bool with_stats);

} // namespace harmonic
