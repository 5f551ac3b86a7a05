#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gessel {

/// One row of a verification run. Exact checks carry no residual value and
/// report "exact"; numeric checks compare residual against tolerance.
struct VerificationReport {
    std::string check_name;
    std::map<std::string, std::string> parameters;
    std::optional<double> residual;   // nullopt == exact comparison
    std::optional<double> tolerance;  // nullopt == exact comparison
    bool pass = false;
    long runtime_ms = 0;

    static VerificationReport numeric(std::string name, double residual, double tolerance);
    static VerificationReport exact(std::string name, bool pass);
    VerificationReport& with(const std::string& key, const std::string& value);
    VerificationReport& with(const std::string& key, double value);

    nlohmann::json to_json() const;
    std::string to_line() const;  // single human-readable row
};

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);
bool all_pass(const std::vector<VerificationReport>& reports);

} // namespace gessel
