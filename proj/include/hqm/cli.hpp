#pragma once

// Command-line front end. `run` parses arguments, dispatches to one
// experiment and writes a JSON report (or plain text for `star`).
//
// Exit codes: 0 success, 1 usage or input error, 2 a checked property failed.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hqm::cli {

inline constexpr const char* tool_name = "hqm";
inline constexpr const char* tool_version = "0.1.0";

enum ExitCode : int { Success = 0, UsageError = 1, PropertyFailure = 2 };

/// Every flag any subcommand understands; each subcommand registers the
/// subset it uses.
struct RunConfig {
    std::string subcommand;
    std::string cls = "hyperbolic";
    std::string hbar = "1";
    std::uint64_t seed = 0;
    std::size_t samples = 0;  // 0: subcommand default
    std::size_t trials = 1000;
    int degree = -1;          // -1: subcommand default
    int min_degree = 1;
    int star_degree = 4;
    std::size_t star_samples = 100;
    std::size_t dim = 2;
    bool tensor = false;
    std::string product = "star";
    int order = 1;
    bool json = false;
    std::string target = "0";
    std::string state = "F0";
    std::string scalar;
    std::string matrix_path;
    std::string complex_path;
    std::string x = "0";
    std::string q0 = "1-(1/2)j";
    std::string q1 = "1+(1/2)j";
    std::size_t grid = 201;
    std::string report_path;
    std::string csv_path;
    std::vector<std::string> args;  // positional operands
};

struct Subcommand {
    std::string name;
    std::string summary;
    std::vector<std::string> operations;  // library operations the subcommand exercises
};

const std::vector<Subcommand>& dispatch_table();

/// Library operations that must be reachable from the command line.
const std::vector<std::string>& operation_catalog();

/// Runs the experiment described by an already parsed configuration.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and runs.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Reads `{ "n": int, "entries": [[{re, im}, ...], ...] }`.
struct MatrixEntries {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<std::string, std::string>>> entries;
};
MatrixEntries parse_matrix_json(const nlohmann::json& j);

} // namespace hqm::cli
