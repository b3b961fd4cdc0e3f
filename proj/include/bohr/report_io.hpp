#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bohr/verifier.hpp"

namespace bohr {

/// One radius record emitted by the radii command.
struct RadiusRow {
    std::string equation;
    double parameter = 0.0;  // NaN when the equation is parameter-free
    double radius = 0.0;
    double residual = 0.0;
};

/// One row of a sharp-vs-comparison radius sweep.
struct SweepRow {
    double k = 0.0;
    double sharp_radius = 0.0;
    double theoremA_radius = 0.0;
};

/// All numbers are printed with 17 significant digits so that CSV and JSON
/// round-trip to identical doubles.
std::string format_number(double value);

std::string radii_json(const std::string& params_json,
                       const std::vector<RadiusRow>& rows);
std::string radii_csv(const std::vector<RadiusRow>& rows);

std::string sweep_json(const std::string& params_json,
                       const std::vector<SweepRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string report_json(const std::string& params_json,
                        const VerificationReport& report);
std::string report_csv(const VerificationReport& report);

/// Key/value helper for the params objects above.
std::string params_json(
    const std::vector<std::pair<std::string, std::string>>& entries);

std::string json_string(const std::string& s);
std::string json_number(double value);  // null for NaN

}  // namespace bohr
