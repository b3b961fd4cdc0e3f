#include "bohr/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "bohr/function_zoo.hpp"

namespace bohr {

Complex Sampler::unit(double magnitude) {
    return std::polar(magnitude, 2.0 * std::numbers::pi * uniform01());
}

Complex Sampler::in_disk(double radius) {
    return std::polar(radius * std::sqrt(uniform01()),
                      2.0 * std::numbers::pi * uniform01());
}

TaylorSeries Sampler::schwarz_function(bool vanish_at_origin, int order) {
    const int degree = static_cast<int>(uniform01() * 6.0);  // 0..5
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) zeros.push_back(in_disk(0.8));
    return blaschke_schwarz(zeros, unit(), vanish_at_origin, order);
}

TaylorSeries Sampler::bounded_function(double bound, int order) {
    return scale(schwarz_function(false, order), bound);
}

}  // namespace bohr
