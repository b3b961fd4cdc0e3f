#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "bohr/coeff_bounds.hpp"
#include "bohr/function_zoo.hpp"
#include "bohr/sampling.hpp"

using namespace bohr;

TEST_CASE("koebe_like: coefficients n, distance 1/4") {
    DomainModel m = koebe_like(0.0, 32);
    CHECK(m.dist_to_boundary == 0.25);
    CHECK(m.shape == Shape::Univalent);
    for (int n = 0; n <= 32; ++n) CHECK(m.phi.coeff(n) == Complex{1.0 * n});

    DomainModel shifted = koebe_like(5.0, 32);
    CHECK(shifted.phi.coeff(0) == Complex{5.0});
    CHECK(shifted.phi.coeff(7) == Complex{7.0});
    CHECK(shifted.dist_to_boundary == 0.25);
}

TEST_CASE("halfplane_like: coefficients 1, distance 1/2") {
    DomainModel m = halfplane_like(0.0, 16);
    CHECK(m.dist_to_boundary == 0.5);
    CHECK(m.shape == Shape::Convex);
    for (int n = 1; n <= 16; ++n) CHECK(m.phi.coeff(n) == Complex{1.0});

    // a0 = 1 gives 1/(1-z)
    DomainModel one = halfplane_like(1.0, 16);
    for (int n = 0; n <= 16; ++n) CHECK(one.phi.coeff(n) == Complex{1.0});
}

TEST_CASE("scaled model keeps the sandwich") {
    DomainModel m = scaled(halfplane_like(0.0, 16), 0.8);
    CHECK(m.dist_to_boundary == doctest::Approx(0.4));
    CHECK(m.phi.coeff(3) == Complex{0.8});
    CHECK(dist_sandwich_check(m));
}

TEST_CASE("blaschke_schwarz: degenerate cases") {
    TaylorSeries id = blaschke_schwarz({}, 1.0, true, 8);
    CHECK(id == TaylorSeries::monomial(1, 8));

    const Complex rot = std::polar(1.0, 0.9);
    TaylorSeries c = blaschke_schwarz({}, rot, false, 8);
    CHECK(c.coeff(0) == rot);
    for (int n = 1; n <= 8; ++n) CHECK(c.coeff(n) == Complex{0.0});

    CHECK_THROWS_AS(blaschke_schwarz({Complex{1.0, 0.0}}, 1.0, false, 8),
                    ZeroOutsideDisk);
}

TEST_CASE("blaschke_schwarz: single zero at 0.5, hand expansion") {
    // z (z - 0.5)/(1 - 0.5 z) = -0.5 z + 0.75 z^2 + 0.375 z^3 + ...
    TaylorSeries b = blaschke_schwarz({Complex{0.5, 0.0}}, 1.0, true, 3);
    CHECK(std::abs(b.coeff(0)) == 0.0);
    CHECK(std::abs(b.coeff(1) - Complex{-0.5}) < 1e-15);
    CHECK(std::abs(b.coeff(2) - Complex{0.75}) < 1e-15);
    CHECK(std::abs(b.coeff(3) - Complex{0.375}) < 1e-15);
}

TEST_CASE("blaschke_schwarz: bounded by 1 on the boundary grid") {
    Sampler rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        TaylorSeries w = rng.schwarz_function(trial % 2 == 0, kDefaultOrder);
        // Coefficients decay like 0.8^n times a small polynomial, so the
        // truncated boundary values overshoot 1 by at most the tail below.
        const double tail = coefficient_tail(std::pow(0.8, -6.0), 5, kDefaultOrder + 1, 0.8);
        double worst = 0.0;
        for (int s = 0; s < 720; ++s) {
            const double theta = 2.0 * std::numbers::pi * s / 720.0;
            worst = std::max(worst, std::abs(w(std::polar(1.0, theta))));
        }
        CHECK(worst <= 1.0 + tail + 1e-12);
    }
}

TEST_CASE("quasi_subordinate_pair: degenerate and product cases") {
    const int n = 24;
    DomainModel half = halfplane_like(0.0, n);
    TaylorSeries one = TaylorSeries::constant(1.0, n);
    TaylorSeries z = TaylorSeries::monomial(1, n);

    // factor == 1, omega == z: f = f0 + g - g(0)
    TaylorSeries f = quasi_subordinate_pair(half.phi, one, z, Complex{2.0, 1.0});
    CHECK(f.coeff(0) == Complex{2.0, 1.0});
    for (int i = 1; i <= n; ++i) CHECK(f.coeff(i) == half.phi.coeff(i));

    // factor == 1, omega == z^2 on g = z/(1-z): z^2/(1-z^2)
    TaylorSeries f2 =
        quasi_subordinate_pair(half.phi, one, TaylorSeries::monomial(2, n), 0.0);
    for (int i = 1; i <= n; ++i)
        CHECK(f2.coeff(i) == Complex{(i % 2 == 0) ? 1.0 : 0.0});

    // factor == z, omega == z on g = z/(1-z): f0 + z^2/(1-z)
    TaylorSeries f3 = quasi_subordinate_pair(half.phi, z, z, Complex{0.5, 0.0});
    CHECK(f3.coeff(0) == Complex{0.5});
    CHECK(f3.coeff(1) == Complex{0.0});
    for (int i = 2; i <= n; ++i) CHECK(f3.coeff(i) == Complex{1.0});

    // omega with nonzero constant term propagates the error
    CHECK_THROWS_AS(quasi_subordinate_pair(half.phi, one, one, 0.0),
                    NonzeroConstantTerm);

    // factor == 1 with a general omega is exactly f0 + g(omega) - g(0).
    Sampler rng(19);
    TaylorSeries omega = rng.schwarz_function(true, n);
    DomainModel target = koebe_like(3.0, n);
    TaylorSeries viaPair = quasi_subordinate_pair(target.phi, one, omega, 7.0);
    TaylorSeries direct = compose(target.phi, omega);
    CHECK(viaPair.coeff(0) == Complex{7.0});
    for (int i = 1; i <= n; ++i) CHECK(viaPair.coeff(i) == direct.coeff(i));
}

TEST_CASE("extremal_harmonic: closed-form sums") {
    // Constant dilatation on the full-slit target: (1 + k|lambda|) r/(1-r)^2.
    HarmonicMap f =
        extremal_harmonic(ExtremalStyle::KoebeConstantDilatation, 0.5, 1.0, 256);
    for (double r : {0.05, 0.1, 0.15}) {
        double sum = 0.0;
        double rn = r;
        for (int m = 1; m <= 256; ++m) {
            sum += (std::abs(f.h.coeff(m)) + std::abs(f.g.coeff(m))) * rn;
            rn *= r;
        }
        CHECK(sum == doctest::Approx(1.5 * r / ((1 - r) * (1 - r))).epsilon(1e-12));
    }

    // Vanishing dilatation on the full-slit target: b_2 = k/2.
    HarmonicMap v =
        extremal_harmonic(ExtremalStyle::KoebeVanishingDilatation, 0.8, 1.0, 64);
    CHECK(std::abs(v.g.coeff(1)) == 0.0);
    CHECK(std::abs(v.g.coeff(2) - Complex{0.4}) < 1e-15);

    // k = 0 is analytic: g vanishes identically.
    HarmonicMap a =
        extremal_harmonic(ExtremalStyle::HalfplaneConstantDilatation, 0.0, 1.0, 32);
    for (int m = 0; m <= 32; ++m) CHECK(a.g.coeff(m) == Complex{0.0});
    CHECK(a.K == 1.0);
}

TEST_CASE("extremal_harmonic: constant dilatation is k*lambda coefficientwise") {
    const Complex lambda = std::polar(0.99, 0.3);
    const double k = 0.7;
    HarmonicMap f =
        extremal_harmonic(ExtremalStyle::KoebeConstantDilatation, k, lambda, 64);
    TaylorSeries hp = differentiate(f.h);
    TaylorSeries gp = differentiate(f.g);
    for (int m = 0; m <= gp.order(); ++m)
        CHECK(std::abs(gp.coeff(m) - k * lambda * hp.coeff(m)) < 1e-13 * (m + 1.0));
    CHECK(max_dilatation_on_circle(f, 0.5) == doctest::Approx(k * 0.99).epsilon(1e-9));
}

TEST_CASE("harmonic map invariants: g(0) = 0 and K consistency") {
    CHECK_THROWS_AS(make_harmonic(TaylorSeries(4), TaylorSeries::constant(1.0, 4), 0.5),
                    DomainError);
    HarmonicMap f =
        extremal_harmonic(ExtremalStyle::HalfplaneVanishingDilatation, 0.6, 1.0, 32);
    CHECK(std::abs(f.k - (f.K - 1.0) / (f.K + 1.0)) < 1e-12);
    CHECK(K_from_k(1.0) == std::numeric_limits<double>::infinity());
    CHECK(k_from_K(std::numeric_limits<double>::infinity()) == 1.0);
    CHECK(k_from_K(K_from_k(0.37)) == doctest::Approx(0.37).epsilon(1e-14));

    // Dilatation of constructed members stays below k on |z| = 0.5.
    Sampler rng(7);
    for (int t = 0; t < 10; ++t) {
        const double k = 0.25 + 0.7 * rng.uniform01();
        TaylorSeries h = quasi_subordinate_pair(koebe_like(0.0, 128).phi,
                                                rng.schwarz_function(false, 128),
                                                rng.schwarz_function(true, 128), 0.0);
        TaylorSeries gp = scale(mul(rng.schwarz_function(false, 128), differentiate(h)), k);
        HarmonicMap f = make_harmonic(h, integrate(gp), k);
        CHECK(max_dilatation_on_circle(f, 0.5) <= k + 1e-9);
    }
}

TEST_CASE("extremal_harmonic rejects out-of-range parameters") {
    CHECK_THROWS_AS(
        extremal_harmonic(ExtremalStyle::KoebeConstantDilatation, 1.5, 1.0, 16),
        DomainError);
    CHECK_THROWS_AS(
        extremal_harmonic(ExtremalStyle::KoebeConstantDilatation, 0.5, Complex{1.5, 0.0}, 16),
        DomainError);
}
