#pragma once

#include <stdexcept>

namespace bohr {

struct BracketFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The scalar radius equations solved by this library.  Each member is a
/// one-parameter family in the dilatation bound k (Liu16/Liu17/EqR/EqR1/ThA*),
/// in the boundary distance lambda (PhiLambda), or parameter-free
/// (RStar/RUStar).
enum class EquationName {
    Liu16,      // 2(1+k)r/(1-r) + 2k ln(1-r) = 1            on (0, 1/3)
    Liu17,      // r(1-k+2kr)/(1-r)^2 - k ln(1-r) = 1/4      on (0, 1/3)
    RStar,      // 5r^3 - 9r^2 - 5r + 1 = 0                  on (0, 1)
    RUStar,     // (1-10r+r^2)(1-r)^2(1+r)^3 = 32r^2(1+r^2)  on (0, 1)
    PhiLambda,  // 8r^3 L^2 - (13r^3+7r^2-5r+1) L + 10r^3-2r^2-10r+2 = 0
    ThA1,       // (1-r)^2 = 4r(1 + k sqrt(1+r))             on (0, 1)
    ThA3,       // r/(1-r) + kr^2/(1-r^2) sqrt((1+r^2)/(1-r^2)(pi^2/6-1)) = 1/2
    ThA4,       // r/(1-r)^2 + kr^2/(1-r^2)^2 sqrt((r^6+11r^4+11r^2+1)/(1-r^2)(pi^2/6-1)) = 1/4
    EqR,        // same transcendental form as Liu16, in the variable rho
    EqR1,       // same transcendental form as Liu17, in the variable rho
};

struct Bracket {
    double lo = 0.0;
    double hi = 1.0;
};

/// A named scalar equation with its parameters and search bracket.  The
/// bracket endpoints must straddle a sign change (or carry a root on an
/// endpoint) before solve() will accept it.
struct RadiusEquation {
    EquationName name = EquationName::Liu16;
    double k = 0.0;            // dilatation bound, where applicable
    double lambda_dist = 1.0;  // PhiLambda only
    Bracket bracket;

    double operator()(double r) const;
    double derivative(double r) const;
};

/// Fills in the standard bracket for the family; param is k for the
/// k-families and lambda for PhiLambda (ignored by RStar/RUStar).
RadiusEquation make_equation(EquationName name, double param = 0.0);

struct RadiusResult {
    double value = 0.0;
    double residual = 0.0;
    int iterations = 0;
    double certified_bracket_width = 0.0;
};

/// Bisection to bracket width 1e-13 followed by three Newton polish steps.
/// Throws BracketFailure when the endpoint signs agree (unless an endpoint
/// is itself a root) and NoConvergence past 200 iterations or when the final
/// residual exceeds 1e-12.
RadiusResult solve(const RadiusEquation& eq);

/// 1 / (2k + 3 + sqrt((2k+3)^2 - 1)): the positive root of
/// 4(1+k)r - (1-r)^2 = 0, always below 1/3.
double r_u_closed_form(double k);

/// (K+1)/(5K+1) for K >= 1 (limit 1/5 as K -> inf).
double convex_radius(double K);

/// Same radius parameterized by k = (K-1)/(K+1): 1/(3 + 2k).
double convex_radius_from_k(double k);

/// Root of RStar, cached: approx 0.15867508.
double r_star();

/// Root of RUStar, cached: approx 0.0808958838.
double r_u_star();

/// Root of PhiLambda in (r_star, 1/5); decreasing in lambda_dist, tending to
/// r_star as lambda -> 1 and to 1/5 as lambda -> 0.  Uniqueness of the sign
/// change over the bracket is verified by a scan on every call.
double solve_r0_of_lambda(double lambda_dist);

/// 1 - sqrt(2/3): the radius below which M_{w'} stays bounded by 1 for
/// Schwarz functions w.
double derivative_bohr_radius();

}  // namespace bohr
