#include <doctest.h>

#include <random>

#include "harmonic/errors.hpp"
#include "harmonic/experiments.hpp"
#include "harmonic/harmonizer.hpp"

using namespace harmonic;

TEST_CASE("generate_taskset contracts") {
    std::mt19937_64 rng(1);
    const TaskSet degenerate = generate_taskset(5, 15, 15, rng);
    for (const long long b : degenerate.effective_bounds) CHECK(b == 15);

    std::mt19937_64 a(42), b(42);
    CHECK(generate_taskset(8, 15, 5000, a) == generate_taskset(8, 15, 5000, b));

    std::mt19937_64 c(42);
    const TaskSet ts = generate_taskset(8, 15, 5000, c);
    for (const long long bound : ts.effective_bounds) {
        CHECK(bound >= 15);
        CHECK(bound <= 5000);
    }
    CHECK(ts.effective_bounds.front() == 15);
    CHECK(ts.effective_bounds.back() == 5000);

    std::mt19937_64 d(0);
    CHECK_THROWS_AS(generate_taskset(3, 10, 5, d), InvalidRange);
}

TEST_CASE("brute-force pair count matches the closed form on generated sets") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const TaskSet ts = generate_taskset(6, 10, 800, rng);
        const auto bf = brute_force_search(ts, Metric::TPE);
        long long expected = 0;
        for (long long m = 1; m <= ts.effective_bounds.front(); ++m)
            expected += ts.effective_bounds.back() / m;
        CHECK(bf.stats.pairs_evaluated == expected);
    }
}

TEST_CASE("run_experiment shape and determinism") {
    ExperimentConfig config;
    config.trials = 5;
    config.cardinality = 4;
    config.t1 = 10;
    config.tn = 200;
    config.seed = 7;
    config.sweep = Sweep::VaryTn;
    config.sweep_points = {100, 200, 400};

    const auto records = run_experiment(config);
    REQUIRE(records.size() == 6);
    for (std::size_t i = 0; i < records.size(); i += 2) {
        CHECK(records[i].algorithm == Algorithm::BruteForce);
        CHECK(records[i + 1].algorithm == Algorithm::DPHS);
        CHECK(records[i].sweep_value == records[i + 1].sweep_value);
        CHECK(records[i + 1].mean_pairs <= records[i].mean_pairs);
    }

    // everything except wall-clock timing is bit-reproducible
    const auto again = run_experiment(config);
    REQUIRE(again.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].sweep_value == again[i].sweep_value);
        CHECK(records[i].algorithm == again[i].algorithm);
        CHECK(records[i].mean_pairs == again[i].mean_pairs);
    }
}

TEST_CASE("vary-cardinality keeps brute force constant") {
    ExperimentConfig config;
    config.trials = 10;
    config.t1 = 10;
    config.tn = 300;
    config.seed = 3;
    config.sweep = Sweep::VaryCardinality;
    config.sweep_points = {2, 4, 6};

    const auto records = run_experiment(config);
    REQUIRE(records.size() == 6);
    CHECK(records[0].mean_pairs == records[2].mean_pairs);
    CHECK(records[2].mean_pairs == records[4].mean_pairs);
    // dphs picks up new bases with every extra task
    CHECK(records[1].mean_pairs <= records[3].mean_pairs);
    CHECK(records[3].mean_pairs <= records[5].mean_pairs);
}

TEST_CASE("metadata names the generator") {
    ExperimentConfig config;
    config.sweep_points = {10};
    CHECK(config_metadata_json(config).find("mt19937_64") != std::string::npos);
}
