#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "harmonic/errors.hpp"
#include "harmonic/experiments.hpp"
#include "harmonic/harmonizer.hpp"
#include "harmonic/io.hpp"
#include "harmonic/metrics.hpp"
#include "harmonic/report.hpp"
#include "harmonic/schedulability.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

using namespace harmonic;

TaskSet load(const std::string& path, const std::string& format) {
    FileFormat f = FileFormat::Auto;
    if (format == "csv") f = FileFormat::Csv;
    else if (format == "json") f = FileFormat::Json;
    std::vector<std::string> warnings;
    TaskSet ts = parse_taskset_file(path, f, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return ts;
}

std::vector<long long> parse_period_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(std::stoll(field));
    return out;
}

int cmd_harmonize(const std::string& input, const std::string& input_format,
                  const std::string& metric, const std::string& algorithm,
                  const std::string& output_format, bool stats) {
    const TaskSet ts = load(input, input_format);
    const Metric m = parse_metric(metric);
    const SearchResult result = algorithm == "brute-force"
                                    ? brute_force_search(ts, m)
                                    : dphs_search(ts, m);
    const Report rep = make_report(ts, result);
    std::cout << (output_format == "json" ? render_json(rep, stats)
                                          : render_table(rep, stats));
    return result.assignment ? kExitOk : kExitInfeasible;
}

int cmd_check(const std::string& input, const std::string& input_format,
              const std::string& periods_arg, const std::string& output_format) {
    const TaskSet ts = load(input, input_format);
    std::vector<long long> periods = periods_arg.empty()
                                         ? ts.effective_bounds
                                         : parse_period_list(periods_arg);
    const ResponseTimeReport report = is_rm_schedulable(ts, periods);

    if (output_format == "json") {
        nlohmann::json j;
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            nlohmann::json row{{"name", ts.tasks[i].name},
                               {"period", periods[i]}};
            if (report.per_task_response[i])
                row["response"] = *report.per_task_response[i];
            else
                row["response"] = nullptr;
            rows.push_back(row);
        }
        j["tasks"] = rows;
        j["schedulable"] = report.schedulable;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << std::left << std::setw(12) << "task" << std::right
                  << std::setw(10) << "T" << std::setw(14) << "response"
                  << '\n';
        for (std::size_t i = 0; i < ts.size(); ++i) {
            std::cout << std::left << std::setw(12) << ts.tasks[i].name
                      << std::right << std::setw(10) << periods[i];
            if (report.per_task_response[i])
                std::cout << std::setw(14) << *report.per_task_response[i];
            else
                std::cout << std::setw(14) << "exceeds T";
            std::cout << '\n';
        }
        std::cout << (report.schedulable ? "schedulable" : "not schedulable")
                  << '\n';
    }
    return kExitOk;
}

int cmd_compare(const std::string& input, const std::string& input_format) {
    const TaskSet ts = load(input, input_format);
    std::cout << std::left << std::setw(8) << "metric" << std::right
              << std::setw(14) << "cost" << std::setw(12) << "bf pairs"
              << std::setw(12) << "dphs pairs" << std::setw(12) << "saved"
              << std::setw(14) << "bf ns" << std::setw(14) << "dphs ns"
              << '\n';
    for (const Metric m :
         {Metric::TPE, Metric::TSU, Metric::FOE, Metric::MPE}) {
        const SearchResult bf = brute_force_search(ts, m);
        const SearchResult dp = dphs_search(ts, m);
        const bool both_feasible = bf.assignment && dp.assignment;
        if (bf.assignment.has_value() != dp.assignment.has_value())
            throw MismatchError(std::string("feasibility mismatch on ") +
                                metric_name(m));
        if (both_feasible && bf.assignment->cost != dp.assignment->cost)
            throw MismatchError(std::string("cost mismatch on ") +
                                metric_name(m));
        const double saved =
            100.0 * (1.0 - static_cast<double>(dp.stats.pairs_evaluated) /
                               static_cast<double>(bf.stats.pairs_evaluated));
        std::ostringstream cost;
        if (both_feasible) cost << std::setprecision(6) << bf.assignment->cost;
        else cost << "infeasible";
        std::cout << std::left << std::setw(8) << metric_name(m) << std::right
                  << std::setw(14) << cost.str() << std::setw(12)
                  << bf.stats.pairs_evaluated << std::setw(12)
                  << dp.stats.pairs_evaluated << std::setw(11) << std::fixed
                  << std::setprecision(1) << saved << "%" << std::setw(14)
                  << bf.stats.elapsed.count() << std::setw(14)
                  << dp.stats.elapsed.count() << '\n';
        std::cout.unsetf(std::ios::fixed);
    }
    return kExitOk;
}

int cmd_experiment(const ExperimentConfig& config, const std::string& out_dir) {
    const auto records = run_experiment(config);
    std::filesystem::create_directories(out_dir);
    const auto csv_path = std::filesystem::path(out_dir) / "results.csv";
    const auto meta_path = std::filesystem::path(out_dir) / "metadata.json";
    std::ofstream(csv_path) << records_to_csv(records);
    std::ofstream(meta_path) << config_metadata_json(config);
    std::cout << "wrote " << csv_path.string() << " and " << meta_path.string()
              << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integer harmonic period assignment toolkit"};
    app.require_subcommand(1);

    std::string input, input_format = "auto", output_format = "table";
    std::string metric = "tpe", algorithm = "dphs", periods_arg;
    bool stats = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input, "task set file (CSV or JSON)")
            ->required();
        sub->add_option("--input-format", input_format, "csv|json|auto")
            ->check(CLI::IsMember({"csv", "json", "auto"}));
        sub->add_option("--format", output_format, "table|json")
            ->check(CLI::IsMember({"table", "json"}));
    };

    CLI::App* harmonize = app.add_subcommand(
        "harmonize", "find the optimal harmonic period assignment");
    add_common(harmonize);
    harmonize->add_option("--metric", metric, "tpe|tsu|foe|mpe")
        ->check(CLI::IsMember({"tpe", "tsu", "foe", "mpe"}));
    harmonize->add_option("--algorithm", algorithm, "dphs|brute-force")
        ->check(CLI::IsMember({"dphs", "brute-force"}));
    harmonize->add_flag("--stats", stats, "print search statistics");

    CLI::App* check = app.add_subcommand(
        "check", "rate-monotonic response-time schedulability check");
    add_common(check);
    check->add_option("--periods", periods_arg,
                      "comma-separated period overrides");

    CLI::App* compare = app.add_subcommand(
        "compare", "run both algorithms on all four metrics");
    add_common(compare);

    ExperimentConfig config;
    std::string sweep = "vary-tn", points_arg, out_dir = ".";
    CLI::App* experiment =
        app.add_subcommand("experiment", "search-count / runtime sweeps");
    experiment->add_option("--sweep", sweep, "vary-tn|vary-t1|vary-n|random-runtime")
        ->check(CLI::IsMember({"vary-tn", "vary-t1", "vary-n", "random-runtime"}));
    experiment->add_option("--t1", config.t1, "smallest-period anchor");
    experiment->add_option("--tn", config.tn, "largest-period anchor");
    experiment->add_option("--n", config.cardinality, "task set cardinality");
    experiment->add_option("--points", points_arg, "comma-separated sweep points")
        ->required();
    experiment->add_option("--trials", config.trials, "trials per sweep point");
    experiment->add_option("--seed", config.seed, "RNG seed");
    experiment->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*harmonize)
            return cmd_harmonize(input, input_format, metric, algorithm,
                                 output_format, stats);
        if (*check)
            return cmd_check(input, input_format, periods_arg, output_format);
        if (*compare) return cmd_compare(input, input_format);
        if (*experiment) {
            config.sweep = parse_sweep(sweep);
            config.sweep_points = parse_period_list(points_arg);
            return cmd_experiment(config, out_dir);
        }
    } catch (const MismatchError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}
