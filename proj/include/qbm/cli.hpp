// cli.hpp: Batch commands behind the qbm_sbs executable

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qbm/io.hpp"

namespace qbm {

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitUsage = 2, kExitNumerical = 3 };

struct CommandOptions {
    std::filesystem::path out_dir{"."};
    std::size_t jobs{1};
    std::vector<std::string> kinds;   // means: subset of kinds (all when empty)
    std::vector<std::string> checks;  // validate: subset of checks (all when empty)
    std::optional<double> tolerance;  // validate: threshold override
};

// Each command writes its files under out_dir and a short summary to `log`.
int cmd_indicators(const RunConfig& config, const CommandOptions& options, std::ostream& log);
int cmd_means(const RunConfig& config, const CommandOptions& options, std::ostream& log);
int cmd_regime(const RunConfig& config, const CommandOptions& options, std::ostream& log);
int cmd_validate(const RunConfig& config, const CommandOptions& options, std::ostream& log);

// Full argument parsing and exception-to-exit-code mapping.
int run_cli(int argc, const char* const* argv);

}  // namespace qbm
