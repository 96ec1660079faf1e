// io.hpp: Run configuration (JSON or TOML subset), CSV and JSON emission

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qbm/core_params.hpp"
#include "qbm/regime_analysis.hpp"

namespace qbm {

struct RunOptions {
    double t_min{0.0};
    double t_max{1.0};
    std::size_t t_points{101};
    std::string t_scale{"linear"};  // linear | log
    double delta_X{1.0};
    double epsilon_dec{1e-3};
    double epsilon_ort{1e-3};
    double fock_budget{1e-10};
};

struct RunConfig {
    ModelParams model;
    EnvironmentSpec env;
    RunOptions run;
    std::set<std::string> present;  // dotted keys that were set explicitly

    std::vector<double> time_grid() const;
    void validate() const;
    // Throws ConfigError naming the first absent key.
    void require(const std::vector<std::string>& keys) const;
};

// Flat "section.key" -> scalar text. Strings are stored without quotes.
using FlatConfig = std::map<std::string, std::string>;

FlatConfig parse_json_config(const std::string& text);
// Supports [section] headers, key = value lines with numbers, booleans and
// double-quoted strings, and # comments.
FlatConfig parse_toml_config(const std::string& text);

// Format from extension: .json or .toml.
RunConfig load_config(const std::filesystem::path& path);
RunConfig config_from_flat(const FlatConfig& flat);
// "section.key=value"; unknown keys raise ConfigError.
void apply_override(RunConfig& config, const std::string& assignment);

// Shortest round-trip-safe text with 17 significant digits, locale independent.
std::string format_double(double value);

// RFC-4180 style writer with "\n" line endings.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void header(const std::vector<std::string>& columns);
    // Empty optional cells are written as empty fields.
    void row(const std::vector<std::string>& cells);
    void row(const std::vector<double>& values);

private:
    std::ostream& out_;
};

std::string report_to_json(const RegimeReport& report, const RunConfig& config);
std::string report_to_table(const RegimeReport& report);

void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace qbm
