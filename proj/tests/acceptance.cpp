// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "harmonic/experiments.hpp"
#include "harmonic/harmonizer.hpp"
#include "harmonic/metrics.hpp"
#include "harmonic/model.hpp"
#include "harmonic/schedulability.hpp"

using namespace harmonic;

namespace {

struct Tally {
    long long checked = 0;
    long long failed = 0;
};

// priority-order checks accumulated from criteria 1-7, reported as criterion 12
Tally g_priority;

void note_assignment(const TaskSet& ts, const HarmonicAssignment& a) {
    ++g_priority.checked;
    if (!priority_order_preserved(ts, a.periods)) ++g_priority.failed;
}

bool close(double got, double want, double tol) {
    return std::abs(got - want) <= tol;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<Task> random_tasks(std::mt19937_64& rng, int n, long long t_lo,
                               long long t_hi, bool random_wcet) {
    std::uniform_int_distribution<long long> t_dist(t_lo, t_hi);
    std::vector<Task> raw;
    for (int i = 0; i < n; ++i) {
        const long long t = t_dist(rng);
        double c = 1.0;
        if (random_wcet) {
            std::uniform_real_distribution<double> c_dist(0.1, static_cast<double>(t));
            c = c_dist(rng);
        }
        raw.push_back({"t" + std::to_string(i), c, static_cast<double>(t)});
    }
    return raw;
}

bool criterion1() {
    const TaskSet gap = fixtures::gap();
    const auto t0 = std::chrono::steady_clock::now();
    const auto result = dphs_search(gap, Metric::TSU);
    const double elapsed = seconds_since(t0);
    if (!result.assignment) return false;
    note_assignment(gap, *result.assignment);
    return result.assignment->periods == fixtures::gap_tsu_periods &&
           close(evaluate(Metric::TSU, gap, result.assignment->periods),
                 0.9725, 1e-6) &&
           elapsed < 1.0;
}

bool criterion2() {
    const TaskSet gap = fixtures::gap();
    const auto result = dphs_search(gap, Metric::MPE);
    if (!result.assignment) return false;
    note_assignment(gap, *result.assignment);
    return result.assignment->periods == fixtures::gap_mpe_periods &&
           result.assignment->cost == 0.36;
}

bool criterion3() {
    const TaskSet gap = fixtures::gap();
    const auto result = dphs_search(gap, Metric::FOE);
    if (!result.assignment) return false;
    note_assignment(gap, *result.assignment);
    return result.assignment->periods == fixtures::gap_foe_periods &&
           result.assignment->cost == 213.0;
}

bool criterion4() {
    const TaskSet gap = fixtures::gap();
    const auto bf = brute_force_search(gap, Metric::TSU);
    const auto dp = dphs_search(gap, Metric::TSU);
    const double reduction =
        1.0 - static_cast<double>(dp.stats.pairs_evaluated) /
                  static_cast<double>(bf.stats.pairs_evaluated);
    std::printf("    brute force pairs = %lld, dphs pairs = %lld, reduction = %.1f%%\n",
                bf.stats.pairs_evaluated, dp.stats.pairs_evaluated,
                reduction * 100.0);
    return bf.stats.pairs_evaluated == 3806 &&
           std::llabs(dp.stats.pairs_evaluated - 244) <= 10 &&
           reduction >= 0.90;
}

bool criterion5() {
    const TaskSet small = build_taskset(
        {{"a", 2, 12}, {"b", 3, 35}, {"c", 2, 112}});
    const auto s22 = closest_harmonic_series(small, 5, 22);
    const auto s7 = closest_harmonic_series(small, 5, 7);
    return s22 == std::vector<long long>{5, 5, 110} &&
           close(evaluate(Metric::TPE, small, s22) * 100.0, 145.833, 0.001) &&
           s7 == std::vector<long long>{5, 35, 35} &&
           close(evaluate(Metric::TPE, small, s7) * 100.0, 127.083, 0.001);
}

bool criterion6() {
    const TaskSet hs = fixtures::hartstone();
    bool ok = true;

    const auto tsu = dphs_search(hs, Metric::TSU);
    if (!tsu.assignment) return false;
    note_assignment(hs, *tsu.assignment);
    ok &= tsu.assignment->periods == std::vector<long long>{29, 58, 116, 116, 232};
    ok &= close(evaluate(Metric::TSU, hs, tsu.assignment->periods), 0.2371, 0.0005);

    const auto foe = dphs_search(hs, Metric::FOE);
    if (!foe.assignment) return false;
    note_assignment(hs, *foe.assignment);
    ok &= foe.assignment->periods == std::vector<long long>{20, 40, 80, 160, 320};
    ok &= foe.assignment->cost == 145.0;

    const auto mpe = dphs_search(hs, Metric::MPE);
    const auto mpe_bf = brute_force_search(hs, Metric::MPE);
    if (!mpe.assignment || !mpe_bf.assignment) return false;
    note_assignment(hs, *mpe.assignment);
    ok &= mpe.assignment->cost == mpe_bf.assignment->cost;
    ok &= mpe.assignment->cost >= 0.39 && mpe.assignment->cost <= 0.40;
    return ok;
}

bool criterion7() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> n_dist(1, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        const TaskSet ts =
            build_taskset(random_tasks(rng, n_dist(rng), 5, 500, false));
        for (const Metric m :
             {Metric::TPE, Metric::TSU, Metric::FOE, Metric::MPE}) {
            const auto bf = brute_force_search(ts, m);
            const auto dp = dphs_search(ts, m);
            if (bf.assignment.has_value() != dp.assignment.has_value())
                return false;
            if (bf.assignment) {
                if (bf.assignment->cost != dp.assignment->cost) return false;
                note_assignment(ts, *dp.assignment);
            }
        }
    }
    const double elapsed = seconds_since(t0);
    std::printf("    1000 task sets x 4 metrics in %.1f s\n", elapsed);
    return elapsed < 30.0;
}

bool criterion8() {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> n_dist(2, 6);
    int found = 0;
    while (found < 200) {
        const TaskSet ts =
            build_taskset(random_tasks(rng, n_dist(rng), 5, 100, true));
        if (is_rm_schedulable(ts, ts.effective_bounds).schedulable) continue;
        ++found;
        for (const Metric m :
             {Metric::TPE, Metric::TSU, Metric::FOE, Metric::MPE}) {
            for (const auto& result :
                 {brute_force_search(ts, m), dphs_search(ts, m)}) {
                if (!result.assignment) continue;
                if (is_rm_schedulable(ts, result.assignment->periods).schedulable)
                    return false;
            }
        }
    }
    return true;
}

bool criterion9() {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> n_dist(1, 6);
    int checked = 0;
    while (checked < 500) {
        std::vector<Task> raw = random_tasks(rng, n_dist(rng), 4, 200, true);
        for (auto& t : raw) t.wcet *= 0.5; // keep a healthy share feasible
        const TaskSet ts = build_taskset(raw);
        const auto result = dphs_search(ts, Metric::TSU);
        if (!result.assignment) continue;
        ++checked;
        if (is_rm_schedulable(ts, result.assignment->periods).schedulable !=
            harmonic_utilization_test(ts, *result.assignment))
            return false;
    }
    return true;
}

bool criterion10() {
    ExperimentConfig vary_tn;
    vary_tn.trials = 200;
    vary_tn.cardinality = 8;
    vary_tn.t1 = 15;
    vary_tn.seed = 12;
    vary_tn.sweep = Sweep::VaryTn;
    vary_tn.sweep_points = {1000, 10000};
    const auto tn_records = run_experiment(vary_tn);
    const double bf_ratio = tn_records[2].mean_pairs / tn_records[0].mean_pairs;
    const double dphs_ratio = tn_records[3].mean_pairs / tn_records[1].mean_pairs;
    std::printf("    vary-tn growth: brute force x%.2f, dphs x%.2f\n", bf_ratio,
                dphs_ratio);
    bool ok = bf_ratio > 8.0 && dphs_ratio < 2.0;

    ExperimentConfig vary_n;
    vary_n.trials = 200;
    vary_n.t1 = 15;
    vary_n.tn = 5000;
    vary_n.seed = 13;
    vary_n.sweep = Sweep::VaryCardinality;
    vary_n.sweep_points = {2, 4, 6, 8};
    const auto n_records = run_experiment(vary_n);
    for (std::size_t i = 2; i < n_records.size(); i += 2) {
        ok &= n_records[i].mean_pairs == n_records[i - 2].mean_pairs;
        ok &= n_records[i + 1].mean_pairs >= n_records[i - 1].mean_pairs;
    }
    return ok;
}

bool criterion11() {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long long> v_dist(1, 4'000'000);
    std::uniform_int_distribution<long long> b_dist(2, 60);
    std::uniform_int_distribution<long long> p_dist(2, 24);
    std::uniform_int_distribution<int> mode(0, 3);
    for (int i = 0; i < 100000; ++i) {
        long long v = v_dist(rng);
        const long long b = b_dist(rng);
        const long long p = p_dist(rng);
        switch (mode(rng)) {
            case 1: { // exact power of b
                long long acc = 1;
                while (acc <= v / b) acc *= b;
                v = acc;
                break;
            }
            case 2: { // exact p-th power
                const long long r = integer_root(p, v);
                long long acc = 1;
                for (long long k = 0; k < p; ++k) acc *= r;
                v = acc;
                break;
            }
            default: break;
        }

        const long long x = floor_log(b, v);
        long long pow_x = 1;
        for (long long k = 0; k < x; ++k) pow_x *= b;
        if (pow_x > v || pow_x * b <= v) return false;

        const long long r = integer_root(p, v);
        long long r_pow = 1, r1_pow = 1;
        bool r1_over = false;
        for (long long k = 0; k < p; ++k) {
            r_pow *= r;
            if (r1_pow > v / (r + 1)) r1_over = true;
            else r1_pow *= r + 1;
        }
        if (r_pow > v || (!r1_over && r1_pow <= v)) return false;
    }
    return true;
}

bool criterion12() {
    std::printf("    priority order checked on %lld assignments, %lld failures\n",
                g_priority.checked, g_priority.failed);
    return g_priority.checked > 0 && g_priority.failed == 0;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
        {"GAP/TSU golden assignment", criterion1},
        {"GAP/MPE golden assignment", criterion2},
        {"GAP/FOE golden assignment", criterion3},
        {"search-count reproduction (3806 / ~244)", criterion4},
        {"worked-example series and costs", criterion5},
        {"Hartstone goldens", criterion6},
        {"oracle equivalence on 1000 random task sets", criterion7},
        {"non-schedulable sets stay non-schedulable", criterion8},
        {"RM test agrees with harmonic utilization bound", criterion9},
        {"scaling shape of both searches", criterion10},
        {"exact floor_log / integer_root on 1e5 cases", criterion11},
        {"priority order preserved everywhere", criterion12},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        bool ok = false;
        try {
            ok = criteria[i].second();
        } catch (const std::exception& e) {
            std::printf("    exception: %s\n", e.what());
        }
        std::printf("%s criterion %zu: %s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
