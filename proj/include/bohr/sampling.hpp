#pragma once

#include <cstdint>
#include <random>

#include "bohr/taylor_series.hpp"

namespace bohr {

/// Default seed for randomized searches, recorded in every report.
inline constexpr std::uint64_t kDefaultSeed = 0xB04A;

/// Deterministic random-function source.  The uniform mapping is written out
/// explicitly so streams are reproducible across standard libraries.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// magnitude * e^{i theta} with theta uniform.
    Complex unit(double magnitude = 1.0);

    /// Uniform w.r.t. area on |z| <= radius.
    Complex in_disk(double radius);

    /// Random finite product of disk automorphism factors (zeros uniform in
    /// |z| <= 0.8, degree <= 5) times a rotation; bounded by 1 on the disk by
    /// construction.  With vanish_at_origin the result lies in the class of
    /// Schwarz functions fixing 0.
    TaylorSeries schwarz_function(bool vanish_at_origin, int order);

    /// bound * (random rotation * product as above); sup norm <= bound.
    TaylorSeries bounded_function(double bound, int order);

    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace bohr
