#include "bohr/radius_solvers.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bohr/taylor_series.hpp"  // DomainError

namespace bohr {

namespace {

constexpr double kEndpointRootTol = 1e-14;
constexpr double kTargetWidth = 1e-13;
constexpr double kResidualTol = 1e-12;
constexpr int kIterationCap = 200;

double sqrt_factor() { return std::numbers::pi * std::numbers::pi / 6.0 - 1.0; }

void check_k(double k) {
    if (k < 0.0 || k > 1.0) throw DomainError("radius equation: k must lie in [0, 1]");
}

}  // namespace

double RadiusEquation::operator()(double r) const {
    const double c = sqrt_factor();
    switch (name) {
        case EquationName::Liu16:
            return 2.0 * (1.0 + k) * r / (1.0 - r) + 2.0 * k * std::log1p(-r) - 1.0;
        case EquationName::Liu17:
            return r * (1.0 - k + 2.0 * k * r) / ((1.0 - r) * (1.0 - r)) -
                   k * std::log1p(-r) - 0.25;
        case EquationName::RStar:
            return ((5.0 * r - 9.0) * r - 5.0) * r + 1.0;
        case EquationName::RUStar: {
            const double a = 1.0 - 10.0 * r + r * r;
            const double b = (1.0 - r) * (1.0 - r);
            const double cc = (1.0 + r) * (1.0 + r) * (1.0 + r);
            return a * b * cc - 32.0 * r * r * (1.0 + r * r);
        }
        case EquationName::PhiLambda: {
            const double L = lambda_dist;
            return 8.0 * r * r * r * L * L -
                   (13.0 * r * r * r + 7.0 * r * r - 5.0 * r + 1.0) * L +
                   10.0 * r * r * r - 2.0 * r * r - 10.0 * r + 2.0;
        }
        case EquationName::ThA1:
            return (1.0 - r) * (1.0 - r) - 4.0 * r * (1.0 + k * std::sqrt(1.0 + r));
        case EquationName::ThA3: {
            const double s = std::sqrt((1.0 + r * r) / (1.0 - r * r) * c);
            return r / (1.0 - r) + k * r * r / (1.0 - r * r) * s - 0.5;
        }
        case EquationName::ThA4: {
            const double p = ((r * r + 11.0) * r * r + 11.0) * r * r + 1.0;
            const double s = std::sqrt(p / (1.0 - r * r) * c);
            const double d = (1.0 - r * r) * (1.0 - r * r);
            return r / ((1.0 - r) * (1.0 - r)) + k * r * r / d * s - 0.25;
        }
        case EquationName::EqR:
            return 2.0 * (1.0 + k) * r / (1.0 - r) + 2.0 * k * std::log1p(-r) - 1.0;
        case EquationName::EqR1:
            return r * (1.0 - k + 2.0 * k * r) / ((1.0 - r) * (1.0 - r)) -
                   k * std::log1p(-r) - 0.25;
    }
    throw DomainError("RadiusEquation: unknown equation");
}

double RadiusEquation::derivative(double r) const {
    const double c = sqrt_factor();
    switch (name) {
        case EquationName::Liu16:
        case EquationName::EqR:
            return (2.0 + 2.0 * k * r) / ((1.0 - r) * (1.0 - r));
        case EquationName::Liu17:
        case EquationName::EqR1: {
            const double omr = 1.0 - r;
            return (1.0 - k + 4.0 * k * r) / (omr * omr) +
                   2.0 * r * (1.0 - k + 2.0 * k * r) / (omr * omr * omr) +
                   k / omr;
        }
        case EquationName::RStar:
            return (15.0 * r - 18.0) * r - 5.0;
        case EquationName::RUStar: {
            const double a = 1.0 - 10.0 * r + r * r, ap = -10.0 + 2.0 * r;
            const double b = (1.0 - r) * (1.0 - r), bp = -2.0 * (1.0 - r);
            const double cc = (1.0 + r) * (1.0 + r) * (1.0 + r);
            const double cp = 3.0 * (1.0 + r) * (1.0 + r);
            return ap * b * cc + a * bp * cc + a * b * cp -
                   (64.0 * r + 128.0 * r * r * r);
        }
        case EquationName::PhiLambda: {
            const double L = lambda_dist;
            return 24.0 * r * r * L * L - (39.0 * r * r + 14.0 * r - 5.0) * L +
                   30.0 * r * r - 4.0 * r - 10.0;
        }
        case EquationName::ThA1:
            return -2.0 * (1.0 - r) - 4.0 * (1.0 + k * std::sqrt(1.0 + r)) -
                   2.0 * k * r / std::sqrt(1.0 + r);
        case EquationName::ThA3: {
            const double omr2 = 1.0 - r * r;
            const double s = std::sqrt((1.0 + r * r) / omr2 * c);
            const double u = r * r / omr2;
            const double up = 2.0 * r / (omr2 * omr2);
            const double sp = 2.0 * c * r / (s * omr2 * omr2);
            return 1.0 / ((1.0 - r) * (1.0 - r)) + k * (up * s + u * sp);
        }
        case EquationName::ThA4: {
            const double omr2 = 1.0 - r * r;
            const double p = ((r * r + 11.0) * r * r + 11.0) * r * r + 1.0;
            const double pp = ((6.0 * r * r + 44.0) * r * r + 22.0) * r;
            const double t = std::sqrt(p / omr2 * c);
            const double v = r * r / (omr2 * omr2);
            const double vp = 2.0 * r * (1.0 + r * r) / (omr2 * omr2 * omr2);
            const double tp = c * (pp * omr2 + 2.0 * r * p) / (2.0 * t * omr2 * omr2);
            return (1.0 + r) / ((1.0 - r) * (1.0 - r) * (1.0 - r)) +
                   k * (vp * t + v * tp);
        }
    }
    throw DomainError("RadiusEquation: unknown equation");
}

RadiusEquation make_equation(EquationName name, double param) {
    RadiusEquation eq;
    eq.name = name;
    switch (name) {
        case EquationName::Liu16:
        case EquationName::Liu17:
        case EquationName::EqR:
        case EquationName::EqR1:
            check_k(param);
            eq.k = param;
            eq.bracket = {0.0, 1.0 / 3.0};
            break;
        case EquationName::ThA1:
            check_k(param);
            eq.k = param;
            eq.bracket = {0.0, 1.0};
            break;
        case EquationName::ThA3:
        case EquationName::ThA4:
            check_k(param);
            eq.k = param;
            eq.bracket = {0.0, 0.9};  // roots stay below 1/3; the form is
                                      // singular at r = 1
            break;
        case EquationName::RStar:
        case EquationName::RUStar:
            eq.bracket = {0.0, 1.0};
            break;
        case EquationName::PhiLambda:
            if (param <= 0.0 || param > 1.0)
                throw DomainError("make_equation: PhiLambda needs lambda in (0, 1]");
            eq.lambda_dist = param;
            eq.bracket = {r_star(), 0.2};
            break;
    }
    return eq;
}

RadiusResult solve(const RadiusEquation& eq) {
    double lo = eq.bracket.lo, hi = eq.bracket.hi;
    double flo = eq(lo), fhi = eq(hi);
    int iterations = 0;
    double root;
    double width = hi - lo;

    if (std::abs(flo) <= kEndpointRootTol) {
        root = lo;
        width = 0.0;
    } else if (std::abs(fhi) <= kEndpointRootTol) {
        root = hi;
        width = 0.0;
    } else if (flo * fhi > 0.0) {
        std::ostringstream msg;
        msg << "solve: no sign change on [" << lo << ", " << hi << "] (f(lo)=" << flo
            << ", f(hi)=" << fhi << ")";
        throw BracketFailure(msg.str());
    } else {
        while (hi - lo > kTargetWidth) {
            if (++iterations > kIterationCap)
                throw NoConvergence("solve: bisection iteration cap reached");
            const double mid = 0.5 * (lo + hi);
            const double fmid = eq(mid);
            if (fmid == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fmid > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
                fhi = fmid;
            }
        }
        width = hi - lo;
        root = 0.5 * (lo + hi);
    }

    for (int i = 0; i < 3; ++i) {
        const double d = eq.derivative(root);
        if (d == 0.0 || !std::isfinite(d)) break;
        const double next = root - eq(root) / d;
        if (!(next > eq.bracket.lo && next < eq.bracket.hi)) break;
        root = next;
        ++iterations;
    }

    const double residual = std::abs(eq(root));
    if (residual > kResidualTol) {
        std::ostringstream msg;
        msg << "solve: residual " << residual << " above tolerance at r = " << root;
        throw NoConvergence(msg.str());
    }
    return RadiusResult{root, residual, iterations, width};
}

double r_u_closed_form(double k) {
    check_k(k);
    const double t = 2.0 * k + 3.0;
    return 1.0 / (t + std::sqrt(t * t - 1.0));
}

double convex_radius(double K) {
    if (!(K >= 1.0)) throw DomainError("convex_radius: K must be >= 1");
    if (std::isinf(K)) return 0.2;
    return (K + 1.0) / (5.0 * K + 1.0);
}

double convex_radius_from_k(double k) {
    check_k(k);
    return 1.0 / (3.0 + 2.0 * k);
}

double r_star() {
    static const double value = solve(make_equation(EquationName::RStar)).value;
    return value;
}

double r_u_star() {
    static const double value = solve(make_equation(EquationName::RUStar)).value;
    return value;
}

double solve_r0_of_lambda(double lambda_dist) {
    if (lambda_dist <= 0.0 || lambda_dist > 1.0)
        throw DomainError("solve_r0_of_lambda: lambda must lie in (0, 1]");
    RadiusEquation eq = make_equation(EquationName::PhiLambda, lambda_dist);
    // The sign change over (r_star, 1/5) is used as unique; verify per call.
    int changes = 0;
    double prev = eq(eq.bracket.lo);
    for (int i = 1; i <= 64; ++i) {
        const double r = eq.bracket.lo + (eq.bracket.hi - eq.bracket.lo) * i / 64.0;
        const double cur = eq(r);
        if (prev != 0.0 && cur != 0.0 && (prev > 0.0) != (cur > 0.0)) ++changes;
        prev = cur;
    }
    if (changes > 1)
        throw BracketFailure("solve_r0_of_lambda: multiple sign changes detected");
    return solve(eq).value;
}

double derivative_bohr_radius() { return 1.0 - std::sqrt(2.0 / 3.0); }

}  // namespace bohr
