#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>

#include "bohr/radius_solvers.hpp"
#include "bohr/taylor_series.hpp"

using namespace bohr;

namespace {

// Plain bisection oracle, independent of solve().
double bisect_oracle(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("r_u_closed_form: endpoints and defining quadratic") {
    CHECK(r_u_closed_form(0.0) ==
          doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r_u_closed_form(1.0) ==
          doctest::Approx(1.0 / (5.0 + std::sqrt(24.0))).epsilon(1e-14));
    // Cross-check k = 1 against a bisection of 8r = (1-r)^2.
    const double oracle =
        bisect_oracle([](double r) { return 8.0 * r - (1.0 - r) * (1.0 - r); }, 0.0, 1.0);
    CHECK(r_u_closed_form(1.0) == doctest::Approx(oracle).epsilon(1e-13));

    for (int i = 0; i <= 100; ++i) {
        const double k = i / 100.0;
        const double r = r_u_closed_form(k);
        CHECK(std::abs(4.0 * (1.0 + k) * r - (1.0 - r) * (1.0 - r)) <= 1e-12);
        CHECK(r < 1.0 / 3.0);
        CHECK(r > 0.0);
    }
}

TEST_CASE("convex_radius: classical value and limits") {
    CHECK(convex_radius(1.0) == 1.0 / 3.0);
    CHECK(convex_radius(3.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(convex_radius(1e12) == doctest::Approx(0.2).epsilon(1e-10));
    CHECK(convex_radius(std::numeric_limits<double>::infinity()) == 0.2);
    CHECK_THROWS_AS(convex_radius(0.5), DomainError);
    for (double k : {0.0, 0.3, 0.8, 1.0}) {
        if (k == 1.0) {
            CHECK(convex_radius_from_k(k) == doctest::Approx(0.2).epsilon(1e-15));
        } else {
            const double K = (1.0 + k) / (1.0 - k);
            CHECK(convex_radius_from_k(k) ==
                  doctest::Approx(convex_radius(K)).epsilon(1e-14));
        }
    }
}

TEST_CASE("solve: transcendental families and their limiting cases") {
    // Dilatation-free case collapses to the classical radius.
    const RadiusResult liu16_k0 = solve(make_equation(EquationName::Liu16, 0.0));
    CHECK(liu16_k0.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    const RadiusResult liu16_k1 = solve(make_equation(EquationName::Liu16, 1.0));
    CHECK(std::abs(liu16_k1.value - 0.299823) < 1e-6);
    CHECK(liu16_k1.residual <= 1e-12);
    CHECK(liu16_k1.value > 0.0);
    CHECK(liu16_k1.value < 1.0 / 3.0);

    const RadiusResult liu17_k1 = solve(make_equation(EquationName::Liu17, 1.0));
    CHECK(std::abs(liu17_k1.value - 0.161353) < 1e-6);
    CHECK(liu17_k1.residual <= 1e-12);

    // k = 0 reduces to r/(1-r)^2 = 1/4, the quadratic root 3 - 2 sqrt 2.
    const RadiusResult liu17_k0 = solve(make_equation(EquationName::Liu17, 0.0));
    const double quad = bisect_oracle(
        [](double r) { return r / ((1.0 - r) * (1.0 - r)) - 0.25; }, 0.0, 1.0 / 3.0);
    CHECK(liu17_k0.value == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-13));
    CHECK(liu17_k0.value == doctest::Approx(quad).epsilon(1e-13));
}

TEST_CASE("solve: polynomial radii match the printed approximations") {
    const RadiusResult rs = solve(make_equation(EquationName::RStar));
    CHECK(std::abs(rs.value - 0.15867508) < 1e-8);
    CHECK(rs.residual <= 1e-12);
    CHECK(rs.certified_bracket_width <= 1e-12);

    const RadiusResult ru = solve(make_equation(EquationName::RUStar));
    CHECK(std::abs(ru.value - 0.0808958838) < 1e-9);
    CHECK(ru.residual <= 1e-12);

    CHECK(r_star() == rs.value);
    CHECK(r_u_star() == ru.value);
}

TEST_CASE("solve: identity between the duplicated equation forms") {
    for (double k : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double a = solve(make_equation(EquationName::Liu16, k)).value;
        const double b = solve(make_equation(EquationName::EqR, k)).value;
        CHECK(std::abs(a - b) <= 1e-11);
        const double c = solve(make_equation(EquationName::Liu17, k)).value;
        const double d = solve(make_equation(EquationName::EqR1, k)).value;
        CHECK(std::abs(c - d) <= 1e-11);
    }
}

TEST_CASE("solve: radii decrease strictly in k") {
    for (EquationName name :
         {EquationName::Liu16, EquationName::Liu17, EquationName::ThA1}) {
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 20; ++i) {
            const double k = i / 20.0;
            const double r = solve(make_equation(name, k)).value;
            CHECK(r < prev);
            prev = r;
        }
    }
}

TEST_CASE("solve: sharp radii dominate the comparison radii") {
    for (int i = 0; i <= 20; ++i) {
        const double k = i / 20.0;
        const double tha3 = solve(make_equation(EquationName::ThA3, k)).value;
        const double liu16 = solve(make_equation(EquationName::Liu16, k)).value;
        CHECK(tha3 <= liu16 + 1e-12);
        const double tha4 = solve(make_equation(EquationName::ThA4, k)).value;
        const double liu17 = solve(make_equation(EquationName::Liu17, k)).value;
        CHECK(tha4 <= liu17 + 1e-12);
        const double tha1 = solve(make_equation(EquationName::ThA1, k)).value;
        CHECK(tha1 <= r_u_closed_form(k) + 1e-12);
    }
    // The comparison equations reduce to the same classical radii at k = 0.
    CHECK(solve(make_equation(EquationName::ThA3, 0.0)).value ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(solve(make_equation(EquationName::ThA4, 0.0)).value ==
          doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("solve: derivative matches a central difference") {
    for (EquationName name : {EquationName::Liu16, EquationName::Liu17,
                              EquationName::RStar, EquationName::RUStar,
                              EquationName::ThA1, EquationName::ThA3,
                              EquationName::ThA4}) {
        const RadiusEquation eq = make_equation(name, 0.6);
        for (double r : {0.05, 0.15, 0.28}) {
            const double h = 1e-6;
            const double fd = (eq(r + h) - eq(r - h)) / (2.0 * h);
            CHECK(eq.derivative(r) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
    const RadiusEquation phi = make_equation(EquationName::PhiLambda, 0.7);
    for (double r : {0.16, 0.18}) {
        const double h = 1e-6;
        const double fd = (phi(r + h) - phi(r - h)) / (2.0 * h);
        CHECK(phi.derivative(r) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("solve_r0_of_lambda: limits and scan oracle") {
    // lambda -> 1 collapses to r_star.
    CHECK(solve_r0_of_lambda(1.0) == doctest::Approx(r_star()).epsilon(1e-10));
    CHECK(std::abs(solve_r0_of_lambda(1.0 - 1e-9) - r_star()) < 1e-6);
    // lambda -> 0 tends to 1/5.
    CHECK(std::abs(solve_r0_of_lambda(1e-9) - 0.2) < 1e-6);

    // Against a 1e-6-step sign-scan oracle at lambda = 0.5.
    const RadiusEquation eq = make_equation(EquationName::PhiLambda, 0.5);
    double scan = 0.0;
    for (double r = r_star(); r <= 0.2; r += 1e-6) {
        if (eq(r) < 0.0) {
            scan = r;
            break;
        }
    }
    const double r0 = solve_r0_of_lambda(0.5);
    CHECK(r0 > r_star());
    CHECK(r0 < 0.2);
    CHECK(std::abs(r0 - scan) <= 1e-6);

    // Monotone decreasing in lambda.
    double prev = 1.0;
    for (double lambda : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double r = solve_r0_of_lambda(lambda);
        CHECK(r < prev);
        prev = r;
    }
    CHECK_THROWS_AS(solve_r0_of_lambda(0.0), DomainError);
    CHECK_THROWS_AS(solve_r0_of_lambda(1.5), DomainError);
}

TEST_CASE("derivative_bohr_radius: value and defining quadratic") {
    const double r0 = derivative_bohr_radius();
    CHECK(std::abs(r0 - 0.1835034) < 1e-7);
    CHECK(r0 < 1.0 / 3.0);
    CHECK(std::abs(r0 * r0 - 2.0 * r0 + 1.0 / 3.0) <= 1e-14);
}

TEST_CASE("solve: bracket failure reporting") {
    RadiusEquation eq = make_equation(EquationName::RStar);
    eq.bracket = {0.5, 0.9};  // no root in there
    CHECK_THROWS_AS(solve(eq), BracketFailure);
    CHECK_THROWS_AS(make_equation(EquationName::Liu16, 1.5), DomainError);
}
