#include "bohr/function_zoo.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace bohr {

double k_from_K(double K) {
    if (std::isinf(K)) return 1.0;
    if (K < 1.0) throw DomainError("k_from_K: K must be >= 1");
    return (K - 1.0) / (K + 1.0);
}

double K_from_k(double k) {
    if (k < 0.0 || k > 1.0) throw DomainError("K_from_k: k must lie in [0, 1]");
    if (k == 1.0) return std::numeric_limits<double>::infinity();
    return (1.0 + k) / (1.0 - k);
}

HarmonicMap make_harmonic(TaylorSeries h, TaylorSeries g, double k) {
    if (g.coeff(0) != Complex{})
        throw DomainError("make_harmonic: g must vanish at the origin");
    const double K = K_from_k(k);
    return HarmonicMap{std::move(h), std::move(g), k, K};
}

DomainModel koebe_like(Complex a0, int order) {
    TaylorSeries phi(order);
    phi.set_coeff(0, a0);
    for (int n = 1; n <= order; ++n) phi.set_coeff(n, static_cast<double>(n));
    return DomainModel{std::move(phi), 0.25, Shape::Univalent};
}

DomainModel halfplane_like(Complex a0, int order) {
    TaylorSeries phi(order);
    phi.set_coeff(0, a0);
    for (int n = 1; n <= order; ++n) phi.set_coeff(n, 1.0);
    return DomainModel{std::move(phi), 0.5, Shape::Convex};
}

DomainModel scaled(const DomainModel& model, double factor) {
    if (factor <= 0.0) throw DomainError("scaled: factor must be positive");
    return DomainModel{scale(model.phi, factor), factor * model.dist_to_boundary,
                       model.shape};
}

TaylorSeries blaschke_schwarz(const std::vector<Complex>& zeros, Complex rotation,
                              bool vanish_at_origin, int order) {
    for (const Complex& z0 : zeros)
        if (std::abs(z0) >= 1.0)
            throw ZeroOutsideDisk("blaschke_schwarz: zero outside the open unit disk");
    TaylorSeries result = vanish_at_origin
                              ? TaylorSeries::monomial(1, order, rotation)
                              : TaylorSeries::constant(rotation, order);
    for (const Complex& z0 : zeros) {
        // (z - z0)/(1 - conj(z0) z) = -z0 + sum_{n>=1} conj(z0)^{n-1} (1 - |z0|^2) z^n
        TaylorSeries factor(order);
        factor.set_coeff(0, -z0);
        const Complex zc = std::conj(z0);
        const double gap = 1.0 - std::norm(z0);
        Complex p = 1.0;
        for (int n = 1; n <= order; ++n) {
            factor.set_coeff(n, p * gap);
            p *= zc;
        }
        result = mul(result, factor);
    }
    return result;
}

TaylorSeries quasi_subordinate_pair(const TaylorSeries& target,
                                    const TaylorSeries& factor,
                                    const TaylorSeries& omega, Complex f0) {
    TaylorSeries comp = compose(target, omega);
    comp.set_coeff(0, 0.0);  // comp(0) = target(0); drop it
    TaylorSeries f = mul(factor, comp);
    f.set_coeff(0, f0);
    return f;
}

HarmonicMap extremal_harmonic(ExtremalStyle style, double k, Complex lambda_param,
                              int order) {
    if (k < 0.0 || k > 1.0) throw DomainError("extremal_harmonic: k must lie in [0, 1]");
    if (std::abs(lambda_param) > 1.0 + 1e-15)
        throw DomainError("extremal_harmonic: |lambda_param| must be <= 1");

    TaylorSeries h(order);
    bool vanishing = false;
    switch (style) {
        case ExtremalStyle::KoebeConstantDilatation:
            h = koebe_like(0.0, order).phi;
            break;
        case ExtremalStyle::HalfplaneConstantDilatation:
            h = halfplane_like(0.0, order).phi;
            break;
        case ExtremalStyle::HalfplaneVanishingDilatation:
            h = halfplane_like(1.0, order).phi;
            vanishing = true;
            break;
        case ExtremalStyle::KoebeVanishingDilatation:
            h = koebe_like(0.0, order).phi;
            vanishing = true;
            break;
        default:
            throw UnknownStyle("extremal_harmonic: unknown style");
    }

    const TaylorSeries hp = differentiate(h);
    TaylorSeries gp = vanishing
                          ? mul(TaylorSeries::monomial(1, hp.order(), k), hp)
                          : scale(hp, k * lambda_param);
    return make_harmonic(std::move(h), integrate(gp), k);
}

double max_dilatation_on_circle(const HarmonicMap& f, double radius, int samples) {
    if (radius <= 0.0 || radius >= 1.0)
        throw DomainError("max_dilatation_on_circle: radius must lie in (0, 1)");
    const TaylorSeries hp = differentiate(f.h);
    const TaylorSeries gp = differentiate(f.g);

    // Pointwise quotient of the polynomial evaluations.  The formal series
    // quotient is not usable here: its recurrence amplifies rounding error
    // like rho^{-n} when h' vanishes at |z| = rho < 1.
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const double theta = 2.0 * std::numbers::pi * (s + 0.5) / samples;
        const Complex z = std::polar(radius, theta);
        const double num = std::abs(gp(z));
        const double den = std::abs(hp(z));
        if (den <= 1e-300) {
            if (num > 1e-300) return std::numeric_limits<double>::infinity();
            continue;
        }
        worst = std::max(worst, num / den);
    }
    return worst;
}

}  // namespace bohr
