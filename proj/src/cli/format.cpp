#include "dwind/cli/format.hpp"

#include <algorithm>

#include "dwind/errors.hpp"

namespace dwind::cli {

using json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw ValidationError("unknown format '" + name + "' (expected table, json or csv)");
}

CommandResult CommandResult::from_report(std::string command, const BoundReport& report) {
    CommandResult r;
    r.command = std::move(command);
    r.inputs = report.inputs;
    r.value = report.value;
    r.induced_minimum = report.induced_minimum;
    r.trail = report.trail;
    r.notes = report.notes;
    if (report.upper_bound) r.extra["upper_bound"] = *report.upper_bound;
    if (report.sharp) r.extra["sharp"] = *report.sharp;
    return r;
}

json to_json(const CommandResult& r) {
    json doc;
    doc["command"] = r.command;
    doc["inputs"] = json::object();
    for (const auto& [k, v] : r.inputs) doc["inputs"][k] = v;
    doc["value"] = r.value.str();
    if (r.induced_minimum) doc["induced_minimum"] = *r.induced_minimum;
    doc["trail"] = json::array();
    for (const auto& t : r.trail) doc["trail"].push_back({{"name", t.name}, {"value", t.value.str()}, {"anchor", t.anchor}});
    for (const auto& [k, v] : r.extra.items()) doc[k] = v;
    if (!r.notes.empty()) doc["notes"] = r.notes;
    return doc;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_table(std::ostream& out, const CommandResult& r) {
    out << r.command << "\n";
    for (const auto& [k, v] : r.inputs) out << "  " << k << " = " << v << "\n";
    std::size_t width = 0;
    for (const auto& t : r.trail) width = std::max(width, t.name.size() + 3 + t.value.pretty().size());
    for (const auto& t : r.trail) {
        const std::string line = t.name + " = " + t.value.pretty();
        out << "  " << line << std::string(width - line.size() + 2, ' ') << "[" << t.anchor << "]\n";
    }
    out << "value: " << r.value.pretty() << "\n";
    if (r.induced_minimum) out << "induced minimum: " << *r.induced_minimum << "\n";
    for (const auto& [k, v] : r.extra.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
}

void write_csv(std::ostream& out, const CommandResult& r) {
    out << kCsvHeader << "\n";
    for (const auto& t : r.trail)
        out << csv_field(r.command) << "," << csv_field(t.name) << "," << t.value.str() << "," << csv_field(t.anchor)
            << "\n";
    out << csv_field(r.command) << ",value," << r.value.str() << ",\n";
    if (r.induced_minimum) out << csv_field(r.command) << ",induced_minimum," << *r.induced_minimum << "/1,\n";
}

}  // namespace

void write_result(std::ostream& out, const CommandResult& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::Table: write_table(out, r); break;
        case OutputFormat::Json: out << to_json(r).dump(2) << "\n"; break;
        case OutputFormat::Csv: write_csv(out, r); break;
    }
}

json error_json(const std::string& kind, const std::string& message, int exit_code) {
    json doc;
    doc["error"] = {{"kind", kind}, {"message", message}};
    doc["exit_code"] = exit_code;
    return doc;
}

}  // namespace dwind::cli
