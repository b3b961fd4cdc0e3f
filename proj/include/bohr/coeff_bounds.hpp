#pragma once

#include "bohr/function_zoo.hpp"
#include "bohr/taylor_series.hpp"

namespace bohr {

struct DominationHypothesisViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficient cap for functions subordinate to a target with derivative
/// modulus phi_prime_0 at the origin: n * phi_prime_0 for univalent targets,
/// phi_prime_0 for convex ones.  Requires n >= 1.
double coeff_bound(Shape shape, double phi_prime_0, int n);

/// Checks |phi'(0)|/4 <= dist <= |phi'(0)| (univalent) resp. /2 (convex)
/// to within 1e-12.
bool dist_sandwich_check(const DomainModel& model);

/// M_g(r) - M_f(r); nonnegative means the majorant of g dominates at r.
double majorant_dominates(const TaylorSeries& f, const TaylorSeries& g, double r,
                          bool skip_constant);

/// k * sum |a_n| r^n - sum |b_n| r^n over n >= 1, where a, b are the
/// coefficients of h, g.  The hypothesis |g'| <= k |h'| is checked through
/// the dilatation quotient g'/h' on 720 boundary samples at radius 0.99 plus
/// 256 interior samples (tolerance 1e-9); the quotient series is the stable
/// object to sample since both derivatives grow at the boundary while their
/// ratio stays bounded.  Throws DominationHypothesisViolated on failure.
double derivative_domination_margin(const TaylorSeries& h, const TaylorSeries& g,
                                    double k, double r);

/// M_{w'}(r) for a self-map w of the disk with w(0) = 0, with the truncated
/// tail bounded via |w_n| <= 1.
MajorantValue schwarz_derivative_majorant(const TaylorSeries& w, double r);

/// M_{z w'}(r) + M_w(r) for a self-map w of the disk, tail bounded via
/// |w_n| <= 1.
MajorantValue zw_prime_plus_w_majorant(const TaylorSeries& w, double r);

/// M_{g'}(r) - M_{f'}(r) (partial sums).
double derivative_bohr_margin(const TaylorSeries& f, const TaylorSeries& g, double r);

}  // namespace bohr
