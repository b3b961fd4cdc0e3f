#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohr/function_zoo.hpp"
#include "bohr/sampling.hpp"
#include "bohr/taylor_series.hpp"

namespace bohr {

struct HypothesisViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The inequality checks exposed by the verification harness, keyed by the
/// identifiers the CLI accepts.
enum class TheoremId {
    Th1_2_1,  // quasi-subordination to a univalent target, radius r_u(k)
    Th1_2_2,  // quasi-subordination to a convex target, radius (K+1)/(5K+1)
    Th1_3_1,  // subordination to a convex target, g'(0) = 0, radius from Liu16
    Th1_3_2,  // subordination to a univalent target, g'(0) = 0, radius from Liu17
    Th4_1,    // refined functional T_f, convex target, radius r_star
    Th4_2,    // refined functional T_f, univalent target, radius r_u_star
    Th5_4,    // derivative majorant under quasi-subordination, radius 1-sqrt(2/3)
    ConjA,    // Th1_3_1 at k = 1
    ConjB,    // Th1_3_2 at k = 1
};

const char* to_string(TheoremId id);

struct TheoremParams {
    double k = 0.5;            // dilatation bound where applicable
    double lambda_dist = 0.5;  // boundary distance for the refined checks
};

enum class FunctionalKind { HarmonicBohrSum, RefinedTf, DerivativeMajorant };

/// Which left-hand functional a check evaluates; skip_b1 selects the sum with
/// the co-analytic part starting at n = 2.
struct BohrFunctional {
    FunctionalKind kind = FunctionalKind::HarmonicBohrSum;
    bool skip_b1 = false;
};

/// Coefficient growth hints |a_n| <= a_scale * n^a_power (and likewise for
/// b_n) used to certify truncation tails.
struct BohrTailModel {
    double a_scale = 0.0;
    int a_power = 0;
    double b_scale = 0.0;
    int b_power = 0;
};

/// sum_{n>=1} (|a_n| + |b_n|) r^n, the co-analytic part starting at n = 2
/// when skip_b1 is set.  The tail is certified from the growth hints when
/// supplied, otherwise reported as zero.
MajorantValue bohr_sum(const HarmonicMap& f, double r, bool skip_b1 = false,
                       const BohrTailModel* tail = nullptr);

/// Refined functional
///   T_f(r) = sum (|a_n|+|b_n|) r^n + (1/(2-lambda) + r/(1-r)) * ||f_0||_r,
/// with ||f_0||_r = sum (|a_n|^2 + |b_n|^2) r^{2n}.  Requires lambda in (0,1).
MajorantValue refined_tf(const HarmonicMap& f, double r, double lambda_dist,
                         const BohrTailModel* tail = nullptr);

struct GridRow {
    double r = 0.0;
    double lhs = 0.0;   // partial sum
    double rhs = 0.0;
    double margin = 0.0;  // rhs - (lhs + tail)
    double tail = 0.0;
};

struct SharpnessProbe {
    double r_above = 0.0;
    double violation = 0.0;  // extremal lhs - rhs; positive past the radius
};

struct AdversarialRecord {
    int trials = 0;
    std::uint64_t seed = 0;
    double radius = 0.0;
    double min_margin = 0.0;
    double tail_at_radius = 0.0;
    int worst_trial = -1;
};

struct VerificationReport {
    std::string theorem_id;
    double k = 0.0;
    double K = 1.0;
    double lambda_dist = 0.0;  // NaN when the check has no lambda parameter
    double radius = 0.0;
    std::vector<GridRow> grid;
    bool pass = false;
    double witness_r = 0.0;  // NaN when pass
    std::optional<SharpnessProbe> sharpness;
    std::optional<AdversarialRecord> adversarial;
    std::uint64_t seed = kDefaultSeed;
};

/// Evaluates the theorem's functional on a constructed member of its class
/// over a uniform grid on [0, radius]; the verdict is Pass when the partial
/// lhs never exceeds rhs (margin + tail >= 0 at every grid point).  A
/// sharpness probe evaluates the extremal family at radius * 1.001 with
/// |lambda_param| = 1 - 1e-6 and records lhs - rhs there.
VerificationReport verify_theorem(TheoremId id, const TheoremParams& params,
                                  int grid_size = 128, int order = kDefaultOrder);

/// Minimum margin (rhs - lhs_partial - tail, at r = radius) over randomized
/// members of the theorem's class.  For a passing theorem the minimum must
/// stay above -tail.
AdversarialRecord adversarial_search(TheoremId id, const TheoremParams& params,
                                     int trials, std::uint64_t seed = kDefaultSeed,
                                     int order = kDefaultOrder);

/// Left-hand value of the theorem's extremal family at r.  lambda_mag is the
/// |lambda| used by the constant-dilatation families (and, for the refined
/// checks, the boundary distance of the scaled target).
double extremal_lhs(TheoremId id, double k, double lambda_mag, double r, int order);

/// Right-hand constant the extremal family is compared against.
double extremal_rhs(TheoremId id, double lambda_mag);

/// Radius where the extremal family's lhs - rhs crosses zero (bisection on
/// (0, 0.345)); within truncation error of the theorem's radius.
double sharpness_crossing(TheoremId id, double k, double lambda_mag = 1.0 - 1e-6,
                          int order = kDefaultOrder);

/// The theorem's radius for the given parameters.
double theorem_radius(TheoremId id, const TheoremParams& params);

}  // namespace bohr
