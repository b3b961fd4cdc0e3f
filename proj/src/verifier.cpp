#include "bohr/verifier.hpp"

#include <cmath>
#include <limits>

#include "bohr/coeff_bounds.hpp"
#include "bohr/radius_solvers.hpp"

namespace bohr {

namespace {

constexpr double kProbeLambda = 1.0 - 1e-6;
constexpr double kProbeStretch = 1.0 + 1e-3;

double nan_d() { return std::numeric_limits<double>::quiet_NaN(); }

TheoremId canonical(TheoremId id, TheoremParams& p) {
    if (id == TheoremId::ConjA) {
        p.k = 1.0;
        return TheoremId::Th1_3_1;
    }
    if (id == TheoremId::ConjB) {
        p.k = 1.0;
        return TheoremId::Th1_3_2;
    }
    return id;
}

bool is_refined(TheoremId id) {
    return id == TheoremId::Th4_1 || id == TheoremId::Th4_2;
}

void validate_params(TheoremId base, const TheoremParams& p) {
    if (p.k < 0.0 || p.k > 1.0)
        throw DomainError("verify: k must lie in [0, 1]");
    if (is_refined(base) && !(p.lambda_dist > 0.0 && p.lambda_dist < 1.0))
        throw HypothesisViolation("verify: refined checks require 0 < lambda < 1");
}

// A constructed class member together with its comparison data.
struct HarmonicCheck {
    HarmonicMap f;
    double rhs = 0.0;
    BohrTailModel tail;
    BohrFunctional functional;
    double lambda_dist = nan_d();
};

struct PairCheck {
    TaylorSeries f;
    TaylorSeries g;
    double tail_scale = 0.0;  // |f'_m| <= tail_scale * m^tail_power * stretch^m
    int tail_power = 0;
    double tail_stretch = 1.0;
};

TaylorSeries fixed_omega(int order) {
    return blaschke_schwarz({std::polar(0.30, 0.6)}, std::polar(1.0, 0.25), true,
                            order);
}

TaylorSeries fixed_factor(int order) {
    return blaschke_schwarz({Complex{-0.40, 0.10}}, std::polar(1.0, -0.40), false,
                            order);
}

TaylorSeries fixed_dilatation(int order) {
    return blaschke_schwarz({Complex{0.35, -0.20}}, std::polar(1.0, 0.15), false,
                            order);
}

// Builds the constructed member for the harmonic checks.  When rng is null a
// fixed member is used; otherwise factor/omega/dilatation are drawn at random
// (zeros in |z| <= 0.8, degree <= 5).
HarmonicCheck build_harmonic(TheoremId base, const TheoremParams& p, int order,
                             Sampler* rng) {
    const double k = p.k;
    TaylorSeries omega = rng ? rng->schwarz_function(true, order) : fixed_omega(order);
    TaylorSeries factor =
        rng ? rng->schwarz_function(false, order) : fixed_factor(order);
    TaylorSeries dil =
        rng ? rng->schwarz_function(false, order) : fixed_dilatation(order);
    const Complex f0 = rng ? rng->in_disk(1.0) : Complex{0.10, 0.05};

    HarmonicCheck out;
    switch (base) {
        case TheoremId::Th1_2_1: {
            const DomainModel model = koebe_like(0.0, order);
            TaylorSeries h = quasi_subordinate_pair(model.phi, factor, omega, f0);
            TaylorSeries gp = scale(mul(dil, differentiate(h)), k);
            out.f = make_harmonic(std::move(h), integrate(gp), k);
            out.rhs = model.dist_to_boundary;
            out.tail = {4.0 * model.dist_to_boundary, 2,
                        4.0 * k * model.dist_to_boundary, 3};
            out.functional = {FunctionalKind::HarmonicBohrSum, false};
            break;
        }
        case TheoremId::Th1_2_2: {
            const DomainModel model = halfplane_like(0.0, order);
            TaylorSeries h = quasi_subordinate_pair(model.phi, factor, omega, f0);
            TaylorSeries gp = scale(mul(dil, differentiate(h)), k);
            out.f = make_harmonic(std::move(h), integrate(gp), k);
            out.rhs = model.dist_to_boundary;
            out.tail = {4.0 * model.dist_to_boundary, 1,
                        4.0 * k * model.dist_to_boundary, 2};
            out.functional = {FunctionalKind::HarmonicBohrSum, false};
            break;
        }
        case TheoremId::Th1_3_1:
        case TheoremId::Th1_3_2: {
            const bool convex = base == TheoremId::Th1_3_1;
            const DomainModel model =
                convex ? halfplane_like(0.0, order) : koebe_like(0.0, order);
            // Plain subordination (factor == 1) and g'(0) = 0.
            TaylorSeries h = quasi_subordinate_pair(
                model.phi, TaylorSeries::constant(1.0, order), omega, 0.0);
            TaylorSeries hp = differentiate(h);
            TaylorSeries gp =
                scale(mul(TaylorSeries::monomial(1, hp.order()), mul(dil, hp)), k);
            out.f = make_harmonic(std::move(h), integrate(gp), k);
            out.rhs = model.dist_to_boundary;
            out.tail = convex ? BohrTailModel{2.0 * model.dist_to_boundary, 0,
                                              4.0 * k * model.dist_to_boundary, 1}
                              : BohrTailModel{4.0 * model.dist_to_boundary, 1,
                                              4.0 * k * model.dist_to_boundary, 2};
            out.functional = {FunctionalKind::HarmonicBohrSum, true};
            break;
        }
        case TheoremId::Th4_1:
        case TheoremId::Th4_2: {
            const double lambda = p.lambda_dist;
            const DomainModel model =
                base == TheoremId::Th4_1
                    ? scaled(halfplane_like(0.0, order), 2.0 * lambda)
                    : scaled(koebe_like(0.0, order), 4.0 * lambda);
            TaylorSeries h = quasi_subordinate_pair(model.phi, factor, omega, f0);
            // Sense-preserving only: |g'| <= |h'|.
            TaylorSeries gp = mul(dil, differentiate(h));
            out.f = make_harmonic(std::move(h), integrate(gp), 1.0);
            out.rhs = lambda;
            out.tail = base == TheoremId::Th4_1
                           ? BohrTailModel{4.0 * lambda, 1, 4.0 * lambda, 2}
                           : BohrTailModel{4.0 * lambda, 2, 4.0 * lambda, 3};
            out.functional = {FunctionalKind::RefinedTf, false};
            out.lambda_dist = lambda;
            break;
        }
        default:
            throw DomainError("build_harmonic: not a harmonic-map check");
    }
    return out;
}

PairCheck build_pair(int order, Sampler* rng) {
    PairCheck out{TaylorSeries(order), TaylorSeries(order), 0.0, 0, 1.0};
    TaylorSeries omega = rng ? rng->schwarz_function(true, order) : fixed_omega(order);
    TaylorSeries factor =
        rng ? rng->schwarz_function(false, order) : fixed_factor(order);
    if (rng) {
        // Random analytic target with |g_n| <= 1.5 * 0.8^n; the induced f
        // coefficients are bounded by 1.5 * 1.8^n.
        TaylorSeries g(order);
        double cap = 1.5;
        for (int n = 0; n <= order; ++n) {
            g.set_coeff(n, rng->in_disk(cap));
            cap *= 0.8;
        }
        out.g = g;
        out.f = quasi_subordinate_pair(g, factor, omega, rng->in_disk(1.0));
        out.tail_scale = 5.4;
        out.tail_power = 1;
        out.tail_stretch = 1.8;
    } else {
        out.g = halfplane_like(0.0, order).phi;  // z/(1-z)
        out.f = quasi_subordinate_pair(out.g, factor, omega, Complex{0.2, 0.0});
        // |f_n| <= n + 1, so |f'_m| <= (m+1)(m+2) <= 8 m^2.
        out.tail_scale = 8.0;
        out.tail_power = 2;
        out.tail_stretch = 1.0;
    }
    return out;
}

double pair_tail(const PairCheck& c, double r) {
    const double x = c.tail_stretch * r;
    if (x <= 0.0) return 0.0;
    return coefficient_tail(c.tail_scale, c.tail_power, c.f.order(), x);
}

}  // namespace

const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::Th1_2_1: return "th1_2_1";
        case TheoremId::Th1_2_2: return "th1_2_2";
        case TheoremId::Th1_3_1: return "th1_3_1";
        case TheoremId::Th1_3_2: return "th1_3_2";
        case TheoremId::Th4_1: return "th4_1";
        case TheoremId::Th4_2: return "th4_2";
        case TheoremId::Th5_4: return "th5_4";
        case TheoremId::ConjA: return "conj_a";
        case TheoremId::ConjB: return "conj_b";
    }
    return "unknown";
}

MajorantValue bohr_sum(const HarmonicMap& f, double r, bool skip_b1,
                       const BohrTailModel* tail) {
    if (r < 0.0 || r >= 1.0) throw DomainError("bohr_sum: r must lie in [0, 1)");
    MajorantValue out;
    out.partial = majorant_at(f.h, r, true);
    double rn = r;
    for (int n = 1; n <= f.g.order(); ++n) {
        if (n >= (skip_b1 ? 2 : 1)) out.partial += std::abs(f.g.coeff(n)) * rn;
        rn *= r;
    }
    if (tail && r > 0.0)
        out.tail = coefficient_tail(tail->a_scale, tail->a_power, f.h.order() + 1, r) +
                   coefficient_tail(tail->b_scale, tail->b_power, f.g.order() + 1, r);
    return out;
}

MajorantValue refined_tf(const HarmonicMap& f, double r, double lambda_dist,
                         const BohrTailModel* tail) {
    if (r < 0.0 || r >= 1.0) throw DomainError("refined_tf: r must lie in [0, 1)");
    if (!(lambda_dist > 0.0 && lambda_dist < 1.0))
        throw DomainError("refined_tf: lambda must lie in (0, 1)");
    const double bracket = 1.0 / (2.0 - lambda_dist) + r / (1.0 - r);

    MajorantValue out;
    double norm = 0.0;
    double rn = r;
    const double r2 = r * r;
    double r2n = r2;
    const int n_max = std::max(f.h.order(), f.g.order());
    for (int n = 1; n <= n_max; ++n) {
        const double a = std::abs(f.h.coeff(n));
        const double b = std::abs(f.g.coeff(n));
        out.partial += (a + b) * rn;
        norm += (a * a + b * b) * r2n;
        rn *= r;
        r2n *= r2;
    }
    out.partial += bracket * norm;

    if (tail && r > 0.0) {
        const int from_a = f.h.order() + 1;
        const int from_b = f.g.order() + 1;
        double t = coefficient_tail(tail->a_scale, tail->a_power, from_a, r) +
                   coefficient_tail(tail->b_scale, tail->b_power, from_b, r);
        t += bracket *
             (coefficient_tail(tail->a_scale * tail->a_scale, 2 * tail->a_power,
                               from_a, r2) +
              coefficient_tail(tail->b_scale * tail->b_scale, 2 * tail->b_power,
                               from_b, r2));
        out.tail = t;
    }
    return out;
}

double theorem_radius(TheoremId id, const TheoremParams& params) {
    TheoremParams p = params;
    const TheoremId base = canonical(id, p);
    validate_params(base, p);
    switch (base) {
        case TheoremId::Th1_2_1: return r_u_closed_form(p.k);
        case TheoremId::Th1_2_2: return convex_radius_from_k(p.k);
        case TheoremId::Th1_3_1:
            return solve(make_equation(EquationName::Liu16, p.k)).value;
        case TheoremId::Th1_3_2:
            return solve(make_equation(EquationName::Liu17, p.k)).value;
        case TheoremId::Th4_1: return r_star();
        case TheoremId::Th4_2: return r_u_star();
        case TheoremId::Th5_4: return derivative_bohr_radius();
        default: break;
    }
    throw DomainError("theorem_radius: unknown theorem");
}

double extremal_rhs(TheoremId id, double lambda_mag) {
    TheoremParams p;
    switch (canonical(id, p)) {
        case TheoremId::Th1_2_1:
        case TheoremId::Th1_3_2: return 0.25;
        case TheoremId::Th1_2_2:
        case TheoremId::Th1_3_1: return 0.5;
        case TheoremId::Th4_1:
        case TheoremId::Th4_2: return lambda_mag;
        case TheoremId::Th5_4: return 1.0;
        default: break;
    }
    throw DomainError("extremal_rhs: unknown theorem");
}

double extremal_lhs(TheoremId id, double k, double lambda_mag, double r, int order) {
    TheoremParams p;
    p.k = k;
    const TheoremId base = canonical(id, p);
    switch (base) {
        case TheoremId::Th1_2_1:
            return bohr_sum(extremal_harmonic(ExtremalStyle::KoebeConstantDilatation,
                                              p.k, lambda_mag, order),
                            r)
                .partial;
        case TheoremId::Th1_2_2:
            return bohr_sum(
                       extremal_harmonic(ExtremalStyle::HalfplaneConstantDilatation,
                                         p.k, lambda_mag, order),
                       r)
                .partial;
        case TheoremId::Th1_3_1:
            return bohr_sum(
                       extremal_harmonic(ExtremalStyle::HalfplaneVanishingDilatation,
                                         p.k, lambda_mag, order),
                       r, true)
                .partial;
        case TheoremId::Th1_3_2:
            return bohr_sum(extremal_harmonic(ExtremalStyle::KoebeVanishingDilatation,
                                              p.k, lambda_mag, order),
                            r, true)
                .partial;
        case TheoremId::Th4_1:
        case TheoremId::Th4_2: {
            // Target at the coefficient cap with g = mu * (h - h(0)), |mu| -> 1:
            // both sums then saturate the bound chain.
            const DomainModel model =
                base == TheoremId::Th4_1
                    ? scaled(halfplane_like(0.0, order), 2.0 * lambda_mag)
                    : scaled(koebe_like(0.0, order), 4.0 * lambda_mag);
            TaylorSeries h = model.phi;  // h(0) = 0 already
            TaylorSeries g = scale(h, lambda_mag);
            const HarmonicMap f = make_harmonic(std::move(h), std::move(g), 1.0);
            return refined_tf(f, r, lambda_mag).partial;
        }
        case TheoremId::Th5_4: {
            // Single-zero Schwarz family w_a; the derivative majorant peaks
            // just below a = 1 once r exceeds the radius.
            double best = 0.0;
            for (int i = 1; i <= 19; ++i) {
                const double a = 0.05 * i;
                best = std::max(
                    best, majorant_at(differentiate(blaschke_schwarz(
                                          {Complex{a, 0.0}}, 1.0, true, order)),
                                      r));
            }
            for (int i = 0; i < 40; ++i) {
                const double a = 1.0 - std::pow(10.0, -(0.25 + 5.75 * i / 39.0));
                best = std::max(
                    best, majorant_at(differentiate(blaschke_schwarz(
                                          {Complex{a, 0.0}}, 1.0, true, order)),
                                      r));
            }
            return best;
        }
        default: break;
    }
    throw DomainError("extremal_lhs: unknown theorem");
}

double sharpness_crossing(TheoremId id, double k, double lambda_mag, int order) {
    TheoremParams p;
    p.k = k;
    const TheoremId base = canonical(id, p);
    const double rhs = extremal_rhs(base, lambda_mag);

    // The families are cheap to evaluate once built; rebuild-free bisection.
    HarmonicMap f = [&] {
        switch (base) {
            case TheoremId::Th1_2_1:
                return extremal_harmonic(ExtremalStyle::KoebeConstantDilatation, p.k,
                                         lambda_mag, order);
            case TheoremId::Th1_2_2:
                return extremal_harmonic(ExtremalStyle::HalfplaneConstantDilatation,
                                         p.k, lambda_mag, order);
            case TheoremId::Th1_3_1:
                return extremal_harmonic(ExtremalStyle::HalfplaneVanishingDilatation,
                                         p.k, lambda_mag, order);
            case TheoremId::Th1_3_2:
                return extremal_harmonic(ExtremalStyle::KoebeVanishingDilatation, p.k,
                                         lambda_mag, order);
            default:
                throw DomainError("sharpness_crossing: unsupported theorem");
        }
    }();
    const bool skip_b1 =
        base == TheoremId::Th1_3_1 || base == TheoremId::Th1_3_2;

    auto gap = [&](double r) { return bohr_sum(f, r, skip_b1).partial - rhs; };
    double lo = 1e-4, hi = 0.345;
    if (!(gap(lo) < 0.0 && gap(hi) > 0.0))
        throw BracketFailure("sharpness_crossing: no crossing in (0, 0.345)");
    for (int i = 0; i < 60 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

VerificationReport verify_theorem(TheoremId id, const TheoremParams& params,
                                  int grid_size, int order) {
    if (grid_size < 2) throw DomainError("verify_theorem: grid_size must be >= 2");
    TheoremParams p = params;
    const TheoremId base = canonical(id, p);
    validate_params(base, p);

    VerificationReport report;
    report.theorem_id = to_string(id);
    report.k = base == TheoremId::Th5_4 ? nan_d() : p.k;
    report.K = base == TheoremId::Th5_4 ? nan_d() : K_from_k(p.k);
    report.lambda_dist = is_refined(base) ? p.lambda_dist : nan_d();
    report.radius = theorem_radius(base, p);
    report.witness_r = nan_d();

    auto record_row = [&](double r, double lhs, double rhs, double tail) {
        const double margin = rhs - lhs - tail;
        report.grid.push_back({r, lhs, rhs, margin, tail});
    };

    if (base == TheoremId::Th5_4) {
        const PairCheck pair = build_pair(order, nullptr);
        const TaylorSeries fp = differentiate(pair.f);
        const TaylorSeries gp = differentiate(pair.g);
        for (int i = 0; i < grid_size; ++i) {
            const double r = report.radius * i / (grid_size - 1);
            record_row(r, majorant_at(fp, r), majorant_at(gp, r), pair_tail(pair, r));
        }
    } else {
        const HarmonicCheck check = build_harmonic(base, p, order, nullptr);
        for (int i = 0; i < grid_size; ++i) {
            const double r = report.radius * i / (grid_size - 1);
            const MajorantValue lhs =
                check.functional.kind == FunctionalKind::RefinedTf
                    ? refined_tf(check.f, r, check.lambda_dist, &check.tail)
                    : bohr_sum(check.f, r, check.functional.skip_b1, &check.tail);
            record_row(r, lhs.partial, check.rhs, lhs.tail);
        }
    }

    report.pass = true;
    for (const GridRow& row : report.grid) {
        if (row.margin + row.tail < 0.0) {
            report.pass = false;
            report.witness_r = row.r;
            break;
        }
    }

    const double r_above = report.radius * kProbeStretch;
    const double lhs_above = extremal_lhs(base, p.k, kProbeLambda, r_above, order);
    report.sharpness =
        SharpnessProbe{r_above, lhs_above - extremal_rhs(base, kProbeLambda)};
    return report;
}

AdversarialRecord adversarial_search(TheoremId id, const TheoremParams& params,
                                     int trials, std::uint64_t seed, int order) {
    if (trials < 1) throw DomainError("adversarial_search: trials must be >= 1");
    TheoremParams p = params;
    const TheoremId base = canonical(id, p);
    validate_params(base, p);

    AdversarialRecord record;
    record.trials = trials;
    record.seed = seed;
    record.radius = theorem_radius(base, p);

    Sampler rng(seed);
    record.min_margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        double lhs = 0.0, rhs = 0.0, tail = 0.0;
        if (base == TheoremId::Th5_4) {
            const PairCheck pair = build_pair(order, &rng);
            lhs = majorant_at(differentiate(pair.f), record.radius);
            rhs = majorant_at(differentiate(pair.g), record.radius);
            tail = pair_tail(pair, record.radius);
        } else {
            const HarmonicCheck check = build_harmonic(base, p, order, &rng);
            const MajorantValue value =
                check.functional.kind == FunctionalKind::RefinedTf
                    ? refined_tf(check.f, record.radius, check.lambda_dist,
                                 &check.tail)
                    : bohr_sum(check.f, record.radius, check.functional.skip_b1,
                               &check.tail);
            lhs = value.partial;
            rhs = check.rhs;
            tail = value.tail;
        }
        const double margin = rhs - lhs - tail;
        if (margin < record.min_margin) {
            record.min_margin = margin;
            record.tail_at_radius = tail;
            record.worst_trial = t;
        }
    }
    return record;
}

}  // namespace bohr
