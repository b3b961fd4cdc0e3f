#include "bohr/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bohr {

namespace {

std::string csv_number(double value) {
    return std::isfinite(value) ? format_number(value) : std::string{};
}

void append_probe_fields(std::ostringstream& os, const VerificationReport& r) {
    if (r.sharpness) {
        os << csv_number(r.sharpness->r_above) << ','
           << csv_number(r.sharpness->violation) << ',';
    } else {
        os << ",,";
    }
    if (r.adversarial) {
        os << r.adversarial->trials << ',' << r.adversarial->seed << ','
           << csv_number(r.adversarial->min_margin) << ','
           << csv_number(r.adversarial->tail_at_radius) << ','
           << r.adversarial->worst_trial << ',';
    } else {
        os << ",,,,,";
    }
}

}  // namespace

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_number(double value) {
    if (!std::isfinite(value)) return "null";
    return format_number(value);
}

std::string params_json(
    const std::vector<std::pair<std::string, std::string>>& entries) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : entries) {
        if (!first) out += ',';
        first = false;
        out += json_string(key);
        out += ':';
        out += value;
    }
    out += '}';
    return out;
}

std::string radii_json(const std::string& params, const std::vector<RadiusRow>& rows) {
    std::ostringstream os;
    os << "{\"schema_version\":\"1\",\"command\":\"radii\",\"params\":" << params
       << ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ',';
        os << "{\"equation\":" << json_string(rows[i].equation)
           << ",\"parameter\":" << json_number(rows[i].parameter)
           << ",\"radius\":" << json_number(rows[i].radius)
           << ",\"residual\":" << json_number(rows[i].residual) << '}';
    }
    os << "]}";
    return os.str();
}

std::string radii_csv(const std::vector<RadiusRow>& rows) {
    std::ostringstream os;
    os << "equation,parameter,radius,residual\n";
    for (const RadiusRow& row : rows)
        os << row.equation << ',' << csv_number(row.parameter) << ','
           << csv_number(row.radius) << ',' << csv_number(row.residual) << '\n';
    return os.str();
}

std::string sweep_json(const std::string& params, const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "{\"schema_version\":\"1\",\"command\":\"sweep\",\"params\":" << params
       << ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ',';
        os << "{\"k\":" << json_number(rows[i].k)
           << ",\"sharp_radius\":" << json_number(rows[i].sharp_radius)
           << ",\"theoremA_radius\":" << json_number(rows[i].theoremA_radius) << '}';
    }
    os << "]}";
    return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "k,sharp_radius,theoremA_radius\n";
    for (const SweepRow& row : rows)
        os << csv_number(row.k) << ',' << csv_number(row.sharp_radius) << ','
           << csv_number(row.theoremA_radius) << '\n';
    return os.str();
}

std::string report_json(const std::string& params, const VerificationReport& r) {
    std::ostringstream os;
    os << "{\"schema_version\":\"1\",\"command\":\"verify\",\"params\":" << params
       << ",\"report\":{\"theorem\":" << json_string(r.theorem_id)
       << ",\"k\":" << json_number(r.k) << ",\"K\":" << json_number(r.K)
       << ",\"lambda\":" << json_number(r.lambda_dist)
       << ",\"radius\":" << json_number(r.radius)
       << ",\"pass\":" << (r.pass ? "true" : "false")
       << ",\"witness_r\":" << json_number(r.witness_r) << ",\"seed\":" << r.seed;
    if (r.sharpness)
        os << ",\"sharpness\":{\"r_above\":" << json_number(r.sharpness->r_above)
           << ",\"violation\":" << json_number(r.sharpness->violation) << '}';
    else
        os << ",\"sharpness\":null";
    if (r.adversarial)
        os << ",\"adversarial\":{\"trials\":" << r.adversarial->trials
           << ",\"seed\":" << r.adversarial->seed
           << ",\"radius\":" << json_number(r.adversarial->radius)
           << ",\"min_margin\":" << json_number(r.adversarial->min_margin)
           << ",\"tail\":" << json_number(r.adversarial->tail_at_radius)
           << ",\"worst_trial\":" << r.adversarial->worst_trial << '}';
    else
        os << ",\"adversarial\":null";
    os << ",\"grid\":[";
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        if (i) os << ',';
        os << "{\"r\":" << json_number(r.grid[i].r)
           << ",\"lhs\":" << json_number(r.grid[i].lhs)
           << ",\"rhs\":" << json_number(r.grid[i].rhs)
           << ",\"margin\":" << json_number(r.grid[i].margin)
           << ",\"tail\":" << json_number(r.grid[i].tail) << '}';
    }
    os << "]}}";
    return os.str();
}

std::string report_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "theorem,k,K,lambda,radius,pass,witness_r,sharpness_r,"
          "sharpness_violation,adv_trials,adv_seed,adv_min_margin,adv_tail,"
          "adv_worst_trial,r,lhs,rhs,margin,tail\n";
    for (const GridRow& row : r.grid) {
        os << r.theorem_id << ',' << csv_number(r.k) << ',' << csv_number(r.K) << ','
           << csv_number(r.lambda_dist) << ',' << csv_number(r.radius) << ','
           << (r.pass ? "true" : "false") << ',' << csv_number(r.witness_r) << ',';
        append_probe_fields(os, r);
        os << csv_number(row.r) << ',' << csv_number(row.lhs) << ','
           << csv_number(row.rhs) << ',' << csv_number(row.margin) << ','
           << csv_number(row.tail) << '\n';
    }
    return os.str();
}

}  // namespace bohr
