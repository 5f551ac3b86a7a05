#include "gessel/report.hpp"

#include <sstream>

namespace gessel {

VerificationReport VerificationReport::numeric(std::string name, double residual,
                                               double tolerance) {
    VerificationReport r;
    r.check_name = std::move(name);
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = residual <= tolerance;
    return r;
}

VerificationReport VerificationReport::exact(std::string name, bool pass) {
    VerificationReport r;
    r.check_name = std::move(name);
    r.pass = pass;
    return r;
}

VerificationReport& VerificationReport::with(const std::string& key, const std::string& value) {
    parameters[key] = value;
    return *this;
}

VerificationReport& VerificationReport::with(const std::string& key, double value) {
    std::ostringstream os;
    os.precision(12);
    os << value;
    parameters[key] = os.str();
    return *this;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["check"] = check_name;
    for (const auto& [k, v] : parameters) j[k] = v;
    j["residual"] = residual ? nlohmann::json(*residual) : nlohmann::json("exact");
    j["tolerance"] = tolerance ? nlohmann::json(*tolerance) : nlohmann::json("exact");
    j["pass"] = pass;
    j["runtime_ms"] = runtime_ms;
    return j;
}

std::string VerificationReport::to_line() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << "  " << check_name;
    for (const auto& [k, v] : parameters) os << "  " << k << "=" << v;
    if (residual) {
        os.precision(3);
        os << std::scientific << "  residual=" << *residual << "  tol=" << *tolerance;
    } else {
        os << "  exact";
    }
    return os.str();
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return arr;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

} // namespace gessel
