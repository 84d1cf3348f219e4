#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratsing/builders.hpp"
#include "ratsing/classify.hpp"

namespace ratsing::cli {

inline constexpr const char* kToolName = "ratsing";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kUsageError = 2,
    kVerificationMismatch = 3,
};

// Runs one subcommand. `args` excludes the program name. Results go to `out`,
// findings and errors to `err`; graph input given as "-" is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Pieces of the JSON document, exposed for tests.
nlohmann::json to_json(const DualGraph& graph);
nlohmann::json to_json(const Cycle& z);
nlohmann::json to_json(const ClassificationEntry& entry);
nlohmann::json to_json(const ValidationReport& report);

// Comma-separated integers, e.g. "1,2,3".
Cycle parse_cycle(const std::string& text);
// Comma-separated 1-based vertex indices, returned 0-based and sorted.
VertexSet parse_vertex_list(const std::string& text, std::size_t vertex_count);

}  // namespace ratsing::cli
