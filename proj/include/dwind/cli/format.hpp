#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dwind/bounds.hpp"
#include "dwind/rational.hpp"

namespace dwind::cli {

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(const std::string& name);

/// Everything a command reports, independent of the output format.
struct CommandResult {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    Rational value;
    std::optional<std::int64_t> induced_minimum;
    std::vector<TrailEntry> trail;
    /// Command-specific fields appended to the JSON object.
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
    std::vector<std::string> notes;

    static CommandResult from_report(std::string command, const BoundReport& report);
};

inline constexpr const char* kCsvHeader = "command,quantity,value,anchor";

nlohmann::ordered_json to_json(const CommandResult& r);
void write_result(std::ostream& out, const CommandResult& r, OutputFormat format);

/// {"error": {"kind": ..., "message": ...}, "exit_code": ...}
nlohmann::ordered_json error_json(const std::string& kind, const std::string& message, int exit_code);

}  // namespace dwind::cli
