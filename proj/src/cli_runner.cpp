#include "bohr/cli_runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "bohr/radius_solvers.hpp"
#include "bohr/report_io.hpp"
#include "bohr/verifier.hpp"

namespace bohr::cli {

namespace {

double nan_d() { return std::numeric_limits<double>::quiet_NaN(); }

// 'k': dilatation families, 'K': quasiregularity constant, 'l': boundary
// distance, 0: parameter-free.
char param_kind(const std::string& eq) {
    static const std::map<std::string, char> kinds = {
        {"liu16", 'k'}, {"liu17", 'k'}, {"eqr", 'k'},        {"eqr1", 'k'},
        {"tha1", 'k'},  {"tha3", 'k'},  {"tha4", 'k'},       {"r_u", 'k'},
        {"convex", 'K'}, {"phi_lambda", 'l'}, {"rstar", 0},  {"rustar", 0},
        {"deriv_bohr", 0},
    };
    const auto it = kinds.find(eq);
    if (it == kinds.end()) throw CLI::ValidationError("unknown equation: " + eq);
    return it->second;
}

std::optional<EquationName> equation_from_string(const std::string& eq) {
    static const std::map<std::string, EquationName> names = {
        {"liu16", EquationName::Liu16},   {"liu17", EquationName::Liu17},
        {"rstar", EquationName::RStar},   {"rustar", EquationName::RUStar},
        {"phi_lambda", EquationName::PhiLambda}, {"tha1", EquationName::ThA1},
        {"tha3", EquationName::ThA3},     {"tha4", EquationName::ThA4},
        {"eqr", EquationName::EqR},       {"eqr1", EquationName::EqR1},
    };
    const auto it = names.find(eq);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

std::optional<TheoremId> theorem_from_string(const std::string& name) {
    static const std::map<std::string, TheoremId> ids = {
        {"th1_2_1", TheoremId::Th1_2_1}, {"th1_2_2", TheoremId::Th1_2_2},
        {"th1_3_1", TheoremId::Th1_3_1}, {"th1_3_2", TheoremId::Th1_3_2},
        {"th4_1", TheoremId::Th4_1},     {"th4_2", TheoremId::Th4_2},
        {"th5_4", TheoremId::Th5_4},     {"conj_a", TheoremId::ConjA},
        {"conj_b", TheoremId::ConjB},
    };
    const auto it = ids.find(name);
    if (it == ids.end()) return std::nullopt;
    return it->second;
}

RadiusRow solve_row(const std::string& eq, double param) {
    if (eq == "r_u") {
        const double v = r_u_closed_form(param);
        const double residual = std::abs(4.0 * (1.0 + param) * v - (1.0 - v) * (1.0 - v));
        return {eq, param, v, residual};
    }
    if (eq == "convex") {
        return {eq, param, convex_radius(param), 0.0};
    }
    if (eq == "deriv_bohr") {
        const double v = derivative_bohr_radius();
        return {eq, nan_d(), v, std::abs(v * v - 2.0 * v + 1.0 / 3.0)};
    }
    const auto name = equation_from_string(eq);
    if (!name) throw CLI::ValidationError("unknown equation: " + eq);
    const RadiusResult res = solve(make_equation(*name, param));
    return {eq, param_kind(eq) == 0 ? nan_d() : param, res.value, res.residual};
}

std::vector<double> parse_sweep(const std::string& range) {
    const auto c1 = range.find(':');
    const auto c2 = range.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("--sweep expects lo:hi:steps");
    const double lo = std::stod(range.substr(0, c1));
    const double hi = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
    const int steps = std::stoi(range.substr(c2 + 1));
    if (steps < 1 || hi < lo)
        throw CLI::ValidationError("--sweep expects lo <= hi and steps >= 1");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        values.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    return values;
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
    if (seed_opt->count() > 0) return seed_flag;
    if (const char* env = std::getenv("BOHR_SEED"))
        return std::stoull(env, nullptr, 0);
    return kDefaultSeed;
}

struct SweepPair {
    std::string sharp;  // "" means closed form r_u / convex
    std::string comparison;
};

std::optional<SweepPair> sweep_pair(const std::string& theorem) {
    static const std::map<std::string, SweepPair> pairs = {
        {"th1_2_1", {"r_u", "tha1"}},
        {"th1_2_2", {"convex_k", "convex_k"}},
        {"th1_3_1", {"liu16", "tha3"}},
        {"th1_3_2", {"liu17", "tha4"}},
    };
    const auto it = pairs.find(theorem);
    if (it == pairs.end()) return std::nullopt;
    return it->second;
}

double sweep_radius(const std::string& eq, double k) {
    if (eq == "r_u") return r_u_closed_form(k);
    if (eq == "convex_k") return convex_radius_from_k(k);
    return solve(make_equation(*equation_from_string(eq), k)).value;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bohr radius tables and inequality verification reports"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string eq, theorem, sweep_spec;
    double k = 0.0, K = 1.0, lambda = 0.5;
    int trials = 100, grid = 128, order = kDefaultOrder, steps = 21;
    double k_lo = 0.0, k_hi = 1.0;
    std::uint64_t seed_flag = kDefaultSeed;

    CLI::App* radii = app.add_subcommand("radii", "Solve radius equations");
    radii->add_option("--eq", eq, "Equation name")->required();
    CLI::Option* radii_k = radii->add_option("--k", k, "Dilatation bound in [0,1]");
    CLI::Option* radii_K = radii->add_option("--K", K, "Quasiregularity constant >= 1");
    CLI::Option* radii_l = radii->add_option("--lambda", lambda, "Boundary distance");
    radii->add_option("--sweep", sweep_spec, "Parameter sweep lo:hi:steps");
    radii->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* verify = app.add_subcommand("verify", "Run a verification report");
    verify->add_option("--theorem", theorem, "Theorem id")->required();
    CLI::Option* verify_k = verify->add_option("--k", k, "Dilatation bound in [0,1]");
    CLI::Option* verify_K =
        verify->add_option("--K", K, "Quasiregularity constant >= 1");
    CLI::Option* verify_l =
        verify->add_option("--lambda", lambda, "Boundary distance in (0,1)");
    verify->add_option("--trials", trials, "Randomized trials")
        ->check(CLI::PositiveNumber);
    CLI::Option* seed_opt = verify->add_option("--seed", seed_flag, "RNG seed");
    verify->add_option("--grid", grid, "Grid points")->check(CLI::Range(2, 1 << 20));
    verify->add_option("--order", order, "Series truncation order")
        ->check(CLI::Range(8, 1 << 16));
    verify->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* sweep = app.add_subcommand("sweep", "Sharp vs comparison radius sweep");
    sweep->add_option("--theorem", theorem, "Theorem id")->required();
    sweep->add_option("--k-lo", k_lo, "Lower end of the k range");
    sweep->add_option("--k-hi", k_hi, "Upper end of the k range");
    sweep->add_option("--steps", steps, "Rows")->check(CLI::PositiveNumber);
    sweep->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (radii->parsed()) {
            const char kind = param_kind(eq);  // throws on unknown equation
            std::vector<double> values;
            if (!sweep_spec.empty()) {
                if (kind == 0)
                    throw CLI::ValidationError(eq + " takes no parameter to sweep");
                values = parse_sweep(sweep_spec);
            } else if (kind == 'k') {
                if (!radii_k->count())
                    throw CLI::ValidationError(eq + " requires --k");
                values.push_back(k);
            } else if (kind == 'K') {
                if (!radii_K->count())
                    throw CLI::ValidationError(eq + " requires --K");
                values.push_back(K);
            } else if (kind == 'l') {
                if (!radii_l->count())
                    throw CLI::ValidationError(eq + " requires --lambda");
                values.push_back(lambda);
            } else {
                values.push_back(nan_d());
            }

            std::vector<RadiusRow> rows;
            rows.reserve(values.size());
            for (double value : values) rows.push_back(solve_row(eq, value));

            const std::string params = params_json(
                {{"eq", json_string(eq)},
                 {"k", radii_k->count() ? json_number(k) : "null"},
                 {"K", radii_K->count() ? json_number(K) : "null"},
                 {"lambda", radii_l->count() ? json_number(lambda) : "null"},
                 {"sweep", sweep_spec.empty() ? "null" : json_string(sweep_spec)}});
            out << (format == "json" ? radii_json(params, rows) : radii_csv(rows))
                << '\n';
            return 0;
        }

        if (verify->parsed()) {
            const auto id = theorem_from_string(theorem);
            if (!id) throw CLI::ValidationError("unknown theorem: " + theorem);
            TheoremParams params;
            if (verify_K->count() && !verify_k->count()) params.k = k_from_K(K);
            else if (verify_k->count()) params.k = k;
            params.lambda_dist = lambda;
            const std::uint64_t seed = resolve_seed(seed_opt, seed_flag);

            VerificationReport report = verify_theorem(*id, params, grid, order);
            report.seed = seed;
            report.adversarial = adversarial_search(*id, params, trials, seed, order);

            const std::string params_str = params_json(
                {{"theorem", json_string(theorem)},
                 {"k", verify_k->count() ? json_number(k) : "null"},
                 {"K", verify_K->count() ? json_number(K) : "null"},
                 {"lambda", verify_l->count() ? json_number(lambda) : "null"},
                 {"trials", std::to_string(trials)},
                 {"seed", std::to_string(seed)},
                 {"grid", std::to_string(grid)},
                 {"order", std::to_string(order)}});
            out << (format == "json" ? report_json(params_str, report)
                                     : report_csv(report))
                << '\n';

            const bool probe_ok = report.sharpness && report.sharpness->violation > 0.0;
            const bool adversarial_ok =
                report.adversarial->min_margin + report.adversarial->tail_at_radius >=
                0.0;
            if (!report.pass || !probe_ok || !adversarial_ok) {
                if (!report.pass)
                    err << "verification failed at r = " << format_number(report.witness_r)
                        << '\n';
                else if (!probe_ok)
                    err << "sharpness probe saw no violation above the radius\n";
                else
                    err << "adversarial margin below tolerance: "
                        << format_number(report.adversarial->min_margin) << '\n';
                return 4;
            }
            return 0;
        }

        // sweep
        const auto pair = sweep_pair(theorem);
        if (!pair) throw CLI::ValidationError("sweep does not support " + theorem);
        if (k_lo < 0.0 || k_hi > 1.0 || k_lo > k_hi)
            throw CLI::ValidationError("sweep requires 0 <= k-lo <= k-hi <= 1");
        std::vector<SweepRow> rows;
        rows.reserve(static_cast<std::size_t>(steps));
        for (int i = 0; i < steps; ++i) {
            const double kv =
                steps == 1 ? k_lo : k_lo + (k_hi - k_lo) * i / (steps - 1);
            rows.push_back(
                {kv, sweep_radius(pair->sharp, kv), sweep_radius(pair->comparison, kv)});
        }
        const std::string params = params_json({{"theorem", json_string(theorem)},
                                                {"k_lo", json_number(k_lo)},
                                                {"k_hi", json_number(k_hi)},
                                                {"steps", std::to_string(steps)}});
        out << (format == "json" ? sweep_json(params, rows) : sweep_csv(rows)) << '\n';
        return 0;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const HypothesisViolation& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 3;
    }
}

}  // namespace bohr::cli
