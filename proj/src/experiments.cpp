#include "harmonic/experiments.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "harmonic/errors.hpp"
#include "harmonic/harmonizer.hpp"

namespace harmonic {

const char* sweep_name(Sweep s) {
    switch (s) {
        case Sweep::VaryTn: return "vary-tn";
        case Sweep::VaryT1: return "vary-t1";
        case Sweep::VaryCardinality: return "vary-n";
        case Sweep::RandomRuntime: return "random-runtime";
    }
    return "?";
}

Sweep parse_sweep(const std::string& s) {
    if (s == "vary-tn") return Sweep::VaryTn;
    if (s == "vary-t1") return Sweep::VaryT1;
    if (s == "vary-n") return Sweep::VaryCardinality;
    if (s == "random-runtime") return Sweep::RandomRuntime;
    throw InvalidRange("unknown sweep: " + s);
}

TaskSet generate_taskset(int n, long long t1, long long tn,
                         std::mt19937_64& rng) {
    if (t1 > tn) throw InvalidRange("t1 > tn");
    if (n < 1) throw InvalidRange("cardinality must be >= 1");

    std::uniform_int_distribution<long long> dist(t1, tn);
    std::vector<long long> periods(n);
    for (auto& p : periods) p = dist(rng);

    *std::min_element(periods.begin(), periods.end()) = t1;
    if (n >= 2) *std::max_element(periods.begin(), periods.end()) = tn;

    std::vector<Task> tasks;
    tasks.reserve(n);
    for (int i = 0; i < n; ++i)
        tasks.push_back({"t" + std::to_string(i), 1.0,
                         static_cast<double>(periods[i])});
    return build_taskset(tasks);
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
    if (config.trials < 1) throw InvalidRange("trials must be >= 1");
    if (config.sweep_points.empty()) throw InvalidRange("no sweep points");

    std::vector<ExperimentRecord> records;
    std::mt19937_64 rng(config.seed);

    for (const long long point : config.sweep_points) {
        int n = config.cardinality;
        long long t1 = config.t1;
        long long tn = config.tn;
        switch (config.sweep) {
            case Sweep::VaryTn: tn = point; break;
            case Sweep::VaryT1: t1 = point; break;
            case Sweep::VaryCardinality:
            case Sweep::RandomRuntime: n = static_cast<int>(point); break;
        }
        if (t1 > tn) throw InvalidRange("sweep point makes t1 > tn");

        double bf_pairs = 0, bf_ns = 0, dphs_pairs = 0, dphs_ns = 0;
        for (long long trial = 0; trial < config.trials; ++trial) {
            const TaskSet ts = generate_taskset(n, t1, tn, rng);
            const SearchResult bf = brute_force_search(ts, Metric::TPE);
            const SearchResult dp = dphs_search(ts, Metric::TPE);
            bf_pairs += static_cast<double>(bf.stats.pairs_evaluated);
            bf_ns += static_cast<double>(bf.stats.elapsed.count());
            dphs_pairs += static_cast<double>(dp.stats.pairs_evaluated);
            dphs_ns += static_cast<double>(dp.stats.elapsed.count());
        }
        const double trials = static_cast<double>(config.trials);
        records.push_back({point, Algorithm::BruteForce, bf_pairs / trials,
                           bf_ns / trials});
        records.push_back({point, Algorithm::DPHS, dphs_pairs / trials,
                           dphs_ns / trials});
    }
    return records;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
    std::ostringstream out;
    out << "sweep_value,algorithm,mean_pairs,mean_elapsed_ns\n";
    for (const auto& r : records)
        out << r.sweep_value << ',' << algorithm_name(r.algorithm) << ','
            << r.mean_pairs << ',' << r.mean_elapsed_ns << '\n';
    return out.str();
}

std::string config_metadata_json(const ExperimentConfig& config) {
    nlohmann::json j{
        {"trials", config.trials},
        {"cardinality", config.cardinality},
        {"t1", config.t1},
        {"tn", config.tn},
        {"seed", config.seed},
        {"sweep", sweep_name(config.sweep)},
        {"sweep_points", config.sweep_points},
        {"generator", "mt19937_64"},
    };
    return j.dump(2) + "\n";
}

} // namespace harmonic
