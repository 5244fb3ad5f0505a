#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "harmonic/model.hpp"

namespace harmonic {

enum class FileFormat { Csv, Json, Auto };

// CSV: header `name,wcet,period`, one task per row, `#` lines ignored.
// JSON: array of objects with keys name, wcet, period.
// Auto picks by extension (.json -> JSON, anything else CSV).
TaskSet parse_taskset_file(const std::string& path,
                           FileFormat format = FileFormat::Auto,
                           std::vector<std::string>* warnings = nullptr);

TaskSet parse_taskset_csv(std::istream& in,
                          std::vector<std::string>* warnings = nullptr);
TaskSet parse_taskset_json(std::istream& in,
                           std::vector<std::string>* warnings = nullptr);

std::string render_taskset_json(const TaskSet& taskset);
std::string render_taskset_csv(const TaskSet& taskset);

} // namespace harmonic
