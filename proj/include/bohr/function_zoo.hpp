#pragma once

#include <vector>

#include "bohr/taylor_series.hpp"

namespace bohr {

struct ZeroOutsideDisk : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownStyle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Shape { Univalent, Convex };

/// An analytic target phi together with the exact distance from phi(0) to the
/// boundary of its image.  Only canonical targets (and their scalings) carry
/// exact distances.
struct DomainModel {
    TaylorSeries phi;
    double dist_to_boundary = 0.0;
    Shape shape = Shape::Univalent;
};

/// Harmonic mapping h + conj(g) with dilatation bound |g'/h'| <= k.
/// Convention: g(0) = 0.  K = (1+k)/(1-k), +inf when k = 1.
struct HarmonicMap {
    TaylorSeries h;
    TaylorSeries g;
    double k = 0.0;
    double K = 1.0;
};

double k_from_K(double K);
double K_from_k(double k);

/// Validates g(0) = 0 and k in [0, 1], fills in K.
HarmonicMap make_harmonic(TaylorSeries h, TaylorSeries g, double k);

/// a0 + z/(1-z)^2: the full-slit target, boundary distance exactly 1/4.
DomainModel koebe_like(Complex a0, int order = kDefaultOrder);

/// a0 + z/(1-z): the half-plane target, boundary distance exactly 1/2.
DomainModel halfplane_like(Complex a0, int order = kDefaultOrder);

/// Rescales a model; the boundary distance scales by the same factor.
DomainModel scaled(const DomainModel& model, double factor);

/// Truncated series of rotation * z^e * prod_i (z - z_i)/(1 - conj(z_i) z)
/// with e = 1 when vanish_at_origin is set.  Bounded by 1 on the closed disk
/// whenever all |z_i| < 1 and |rotation| = 1.
TaylorSeries blaschke_schwarz(const std::vector<Complex>& zeros, Complex rotation,
                              bool vanish_at_origin, int order = kDefaultOrder);

/// f = f0 + factor * (target(omega) - target(0)), so that f - f(0) is
/// quasi-subordinate to target - target(0) by construction.  Requires
/// omega(0) = 0 (propagates NonzeroConstantTerm).
TaylorSeries quasi_subordinate_pair(const TaylorSeries& target,
                                    const TaylorSeries& factor,
                                    const TaylorSeries& omega, Complex f0);

/// The explicit families that saturate each radius bound.
enum class ExtremalStyle {
    KoebeConstantDilatation,      // h = z/(1-z)^2,  g' = k*lambda*h'
    HalfplaneConstantDilatation,  // h = z/(1-z),    g' = k*lambda*h'
    HalfplaneVanishingDilatation, // h = 1/(1-z),    g' = k*z*h'
    KoebeVanishingDilatation,     // h = z/(1-z)^2,  g' = k*z*h'
};

/// Builds (h, g) with g the termwise antiderivative of the stated g'; the
/// lambda parameter only enters the constant-dilatation styles.
HarmonicMap extremal_harmonic(ExtremalStyle style, double k, Complex lambda_param,
                              int order = kDefaultOrder);

/// Max of |g'(z)/h'(z)| over a uniform angular grid on |z| = radius,
/// evaluated through the quotient series.
double max_dilatation_on_circle(const HarmonicMap& f, double radius,
                                int samples = 720);

}  // namespace bohr
