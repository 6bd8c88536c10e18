#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ginar::cli {

enum ExitStatus : int { kSuccess = 0, kInputError = 2, kNumericalError = 3 };

struct CliConfig {
    std::string command;
    std::string input;
    std::string output;  // empty or "-" writes to the supplied stream
    std::optional<std::size_t> order;
    std::string null_spec;
    std::vector<std::string> dists;
    double level = 0.05;
    std::uint64_t seed = 1;
    std::vector<std::size_t> subset;
    std::string format;
    std::size_t length = 500;
    std::size_t burn_in = 1000;
    std::string config_path;
    std::optional<std::size_t> replications;
    bool seed_given = false;
};

// Each command writes its report to `out` unless config.output names a file.
// Errors propagate as exceptions; run_cli maps them to exit statuses.
void cmd_simulate(const CliConfig& config, std::ostream& out);
void cmd_fit(const CliConfig& config, std::ostream& out);
void cmd_test(const CliConfig& config, std::ostream& out);
void cmd_mc(const CliConfig& config, std::ostream& out);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ginar::cli
