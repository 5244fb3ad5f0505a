#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "harmonic/model.hpp"

namespace harmonic {

enum class Sweep { VaryTn, VaryT1, VaryCardinality, RandomRuntime };

const char* sweep_name(Sweep s);
Sweep parse_sweep(const std::string& s);

struct ExperimentConfig {
    long long trials = 1000;
    int cardinality = 8;
    long long t1 = 15;
    long long tn = 5000;
    std::uint64_t seed = 0;
    Sweep sweep = Sweep::VaryTn;
    std::vector<long long> sweep_points;
};

struct ExperimentRecord {
    long long sweep_value = 0;
    Algorithm algorithm = Algorithm::BruteForce;
    double mean_pairs = 0.0;
    double mean_elapsed_ns = 0.0;
};

// n periods drawn uniformly from [t1, tn]; the smallest draw is replaced by
// t1 and (when n >= 2) the largest by tn, so the Lemma 1/2 ranges are pinned
// exactly. Every task gets wcet = 1.
TaskSet generate_taskset(int n, long long t1, long long tn, std::mt19937_64& rng);

// Runs both search algorithms (TPE; the pair counts are metric-independent)
// on `trials` generated sets per sweep point. Deterministic for a fixed seed.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

std::string records_to_csv(const std::vector<ExperimentRecord>& records);
std::string config_metadata_json(const ExperimentConfig& config);

} // namespace harmonic
