// validation.hpp: Named oracle checks shared by `qbm_sbs validate` and the acceptance suite

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qbm {

struct CheckResult {
    std::string name;
    bool passed{false};
    double measured{0.0};   // the quantity compared with the threshold
    double threshold{0.0};
    std::string comparison;  // e.g. "<=", ">="
    std::string detail;
    std::vector<std::pair<std::string, double>> metrics;
    double seconds{0.0};
};

// Reference values (Si(x), Ci(x)) for the special-function check.
using SiCiReference = std::function<std::pair<double, double>(double)>;

struct ValidationOptions {
    // Replaces the default threshold of every error-type check.
    std::optional<double> tolerance;
    std::size_t jobs{1};
    std::uint64_t seed{20240601};
    // Defaults to adaptive quadrature of the defining integrals.
    SiCiReference sici_reference;
};

struct CheckInfo {
    std::string name;
    std::string summary;
    std::function<CheckResult(const ValidationOptions&)> run;
};

const std::vector<CheckInfo>& validation_checks();

// Runs the named checks (all when empty) in registry order. Unknown names raise ConfigError.
std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const ValidationOptions& options);

std::string format_check_line(const CheckResult& r);

}  // namespace qbm
