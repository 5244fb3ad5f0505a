#include "harmonic/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "harmonic/errors.hpp"

namespace harmonic {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& field, int line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos != field.size())
            throw ParseError("line " + std::to_string(line_no) +
                             ": trailing characters in number '" + field + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": not a number: '" + field + "'");
    }
}

} // namespace

TaskSet parse_taskset_csv(std::istream& in, std::vector<std::string>* warnings) {
    std::vector<Task> tasks;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            std::string h = t;
            h.erase(std::remove_if(h.begin(), h.end(),
                                   [](char c) { return c == ' ' || c == '\t'; }),
                    h.end());
            if (h != "name,wcet,period")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected header 'name,wcet,period'");
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(trim(field));
        if (fields.size() != 3)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        tasks.push_back({fields[0], parse_number(fields[1], line_no),
                         parse_number(fields[2], line_no)});
    }
    if (!header_seen) throw EmptyTaskSet{};
    return build_taskset(tasks, warnings);
}

TaskSet parse_taskset_json(std::istream& in, std::vector<std::string>* warnings) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("expected a JSON array of tasks");
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& o = j[i];
        if (!o.is_object() || !o.contains("name") || !o.contains("wcet") ||
            !o.contains("period"))
            throw ParseError("record " + std::to_string(i) +
                             ": expected object with name, wcet, period");
        tasks.push_back({o["name"].get<std::string>(), o["wcet"].get<double>(),
                         o["period"].get<double>()});
    }
    return build_taskset(tasks, warnings);
}

TaskSet parse_taskset_file(const std::string& path, FileFormat format,
                           std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    if (format == FileFormat::Auto) {
        const auto dot = path.rfind('.');
        const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
        format = (ext == ".json") ? FileFormat::Json : FileFormat::Csv;
    }
    return format == FileFormat::Json ? parse_taskset_json(in, warnings)
                                      : parse_taskset_csv(in, warnings);
}

std::string render_taskset_json(const TaskSet& taskset) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Task& t : taskset.tasks)
        arr.push_back({{"name", t.name}, {"wcet", t.wcet}, {"period", t.period_bound}});
    return arr.dump(2) + "\n";
}

std::string render_taskset_csv(const TaskSet& taskset) {
    std::ostringstream out;
    out << "name,wcet,period\n";
    out.precision(17);
    for (const Task& t : taskset.tasks)
        out << t.name << ',' << t.wcet << ',' << t.period_bound << '\n';
    return out.str();
}

} // namespace harmonic
