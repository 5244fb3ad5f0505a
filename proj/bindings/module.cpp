#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "harmonic/experiments.hpp"
#include "harmonic/harmonizer.hpp"
#include "harmonic/io.hpp"
#include "harmonic/metrics.hpp"
#include "harmonic/model.hpp"
#include "harmonic/schedulability.hpp"

namespace py = pybind11;
using namespace harmonic;

PYBIND11_MODULE(_harmonic, m) {
    m.doc() = "Integer harmonic period assignment for hard real-time task sets";

    py::enum_<Metric>(m, "Metric")
        .value("TPE", Metric::TPE)
        .value("TSU", Metric::TSU)
        .value("FOE", Metric::FOE)
        .value("MPE", Metric::MPE);

    py::enum_<Algorithm>(m, "Algorithm")
        .value("BruteForce", Algorithm::BruteForce)
        .value("DPHS", Algorithm::DPHS);

    py::class_<Task>(m, "Task")
        .def(py::init([](std::string name, double wcet, double period) {
                 return Task{std::move(name), wcet, period};
             }),
             py::arg("name"), py::arg("wcet"), py::arg("period"))
        .def_readonly("name", &Task::name)
        .def_readonly("wcet", &Task::wcet)
        .def_readonly("period", &Task::period_bound);

    py::class_<TaskSet>(m, "TaskSet")
        .def_readonly("tasks", &TaskSet::tasks)
        .def_readonly("effective_bounds", &TaskSet::effective_bounds)
        .def("__len__", &TaskSet::size);

    py::class_<HarmonicAssignment>(m, "HarmonicAssignment")
        .def_readonly("multiplier", &HarmonicAssignment::multiplier)
        .def_readonly("base", &HarmonicAssignment::base)
        .def_readonly("exponents", &HarmonicAssignment::exponents)
        .def_readonly("periods", &HarmonicAssignment::periods)
        .def_readonly("cost", &HarmonicAssignment::cost)
        .def_readonly("metric", &HarmonicAssignment::metric);

    py::class_<SearchStats>(m, "SearchStats")
        .def_readonly("pairs_evaluated", &SearchStats::pairs_evaluated)
        .def_readonly("elapsed", &SearchStats::elapsed)
        .def_readonly("algorithm", &SearchStats::algorithm);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("assignment", &SearchResult::assignment)
        .def_readonly("stats", &SearchResult::stats);

    py::class_<ResponseTimeReport>(m, "ResponseTimeReport")
        .def_readonly("per_task_response", &ResponseTimeReport::per_task_response)
        .def_readonly("schedulable", &ResponseTimeReport::schedulable);

    m.def("build_taskset",
          [](const std::vector<Task>& tasks) { return build_taskset(tasks); },
          py::arg("tasks"));
    m.def("parse_taskset_file",
          [](const std::string& path) { return parse_taskset_file(path); },
          py::arg("path"));
    m.def("priority_order_preserved", &priority_order_preserved);
    m.def("evaluate", &evaluate, py::arg("metric"), py::arg("taskset"),
          py::arg("periods"));
    m.def("is_feasible", &is_feasible);
    m.def("floor_log", &floor_log);
    m.def("integer_root", &integer_root);
    m.def("closest_harmonic_series", &closest_harmonic_series);
    m.def("local_minima_bases", &local_minima_bases);
    m.def("brute_force_search", &brute_force_search);
    m.def("dphs_search", &dphs_search);
    m.def("response_time", &response_time);
    m.def("is_rm_schedulable", &is_rm_schedulable);
    m.def("harmonic_utilization_test", &harmonic_utilization_test);
    m.def("generate_taskset",
          [](int n, long long t1, long long tn, std::uint64_t seed) {
              std::mt19937_64 rng(seed);
              return generate_taskset(n, t1, tn, rng);
          },
          py::arg("n"), py::arg("t1"), py::arg("tn"), py::arg("seed"));
}
