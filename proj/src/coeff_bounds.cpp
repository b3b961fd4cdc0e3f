#include "bohr/coeff_bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace bohr {

namespace {

constexpr double kHypothesisTol = 1e-9;

// Max of sampled |g'/h'|: 720 angles near the boundary plus a 16x16 interior
// grid, via the pointwise quotient of the polynomial evaluations.  The 720
// samples run at radius 0.99 through the formal quotient series whenever that
// series is numerically tame (its recurrence amplifies rounding like
// rho^{-n} when h' vanishes at |z| = rho < 1; the true dilatation always has
// coefficients bounded by 1, so blowup is detectable); otherwise they run at
// radius 0.8, where the truncation of both derivatives is negligible.
double max_dilatation_samples(const TaylorSeries& hp, const TaylorSeries& gp) {
    int lead = 0;
    while (lead <= hp.order() && hp.coeff(lead) == Complex{}) ++lead;
    if (lead > hp.order()) {
        // h' == 0: hypothesis only holds when g' == 0 as well.
        for (int i = 0; i <= gp.order(); ++i)
            if (std::abs(gp.coeff(i)) > 0.0)
                return std::numeric_limits<double>::infinity();
        return 0.0;
    }
    for (int i = 0; i < lead; ++i)
        if (std::abs(gp.coeff(i)) > 0.0)
            return std::numeric_limits<double>::infinity();

    std::vector<std::pair<double, double>> samples;  // (|g'|, |h'|)
    samples.reserve(720 + 256);
    auto pointwise = [&](double rho, double theta) {
        const Complex z = std::polar(rho, theta);
        samples.emplace_back(std::abs(gp(z)), std::abs(hp(z)));
    };

    const int n = std::min(hp.order(), gp.order()) - lead;
    TaylorSeries num(std::max(n, 0)), den(std::max(n, 0));
    for (int i = 0; i <= n; ++i) {
        num.set_coeff(i, gp.coeff(i + lead));
        den.set_coeff(i, hp.coeff(i + lead));
    }
    const TaylorSeries ratio = divide(num, den);
    double coeff_peak = 0.0;
    for (int i = 0; i <= ratio.order(); ++i)
        coeff_peak = std::max(coeff_peak, std::abs(ratio.coeff(i)));

    double worst = 0.0;
    const bool division_stable = coeff_peak <= 10.0;
    for (int s = 0; s < 720; ++s) {
        const double theta = 2.0 * std::numbers::pi * (s + 0.5) / 720.0;
        if (division_stable)
            worst = std::max(worst, std::abs(ratio(std::polar(0.99, theta))));
        else
            pointwise(0.8, theta);
    }
    for (int i = 0; i < 16; ++i) {
        const double rho = 0.05 + 0.70 * i / 15.0;
        for (int j = 0; j < 16; ++j)
            pointwise(rho, 2.0 * std::numbers::pi * (j + 0.25) / 16.0);
    }

    // Points where |h'| sits far below its sampled peak carry no resolvable
    // ratio information (both derivatives vanish together there for genuine
    // class members); skip them.
    double peak_den = 0.0;
    for (const auto& [gv, hv] : samples) peak_den = std::max(peak_den, hv);
    const double floor = std::max(1e-300, 1e-6 * peak_den);
    for (const auto& [gv, hv] : samples)
        if (hv > floor) worst = std::max(worst, gv / hv);
    return worst;
}

}  // namespace

double coeff_bound(Shape shape, double phi_prime_0, int n) {
    if (n < 1) throw DomainError("coeff_bound: n must be >= 1");
    if (phi_prime_0 < 0.0) throw DomainError("coeff_bound: |phi'(0)| must be >= 0");
    return shape == Shape::Univalent ? n * phi_prime_0 : phi_prime_0;
}

bool dist_sandwich_check(const DomainModel& model) {
    const double d1 = std::abs(model.phi.coeff(1));
    const double lower = (model.shape == Shape::Univalent ? 0.25 : 0.5) * d1;
    const double dist = model.dist_to_boundary;
    return lower <= dist + 1e-12 && dist <= d1 + 1e-12;
}

double majorant_dominates(const TaylorSeries& f, const TaylorSeries& g, double r,
                          bool skip_constant) {
    return majorant_at(g, r, skip_constant) - majorant_at(f, r, skip_constant);
}

double derivative_domination_margin(const TaylorSeries& h, const TaylorSeries& g,
                                    double k, double r) {
    if (r < 0.0 || r >= 1.0)
        throw DomainError("derivative_domination_margin: r must lie in [0, 1)");
    if (k < 0.0 || k > 1.0)
        throw DomainError("derivative_domination_margin: k must lie in [0, 1]");
    const double worst = max_dilatation_samples(differentiate(h), differentiate(g));
    if (worst > k + kHypothesisTol) {
        std::ostringstream msg;
        msg << "derivative_domination_margin: sampled |g'/h'| = " << worst
            << " exceeds k = " << k;
        throw DominationHypothesisViolated(msg.str());
    }
    return k * majorant_at(h, r, true) - majorant_at(g, r, true);
}

MajorantValue schwarz_derivative_majorant(const TaylorSeries& w, double r) {
    if (r < 0.0 || r >= 1.0)
        throw DomainError("schwarz_derivative_majorant: r must lie in [0, 1)");
    MajorantValue out;
    out.partial = majorant_at(differentiate(w), r);
    // Missing w' coefficients at index m >= order(): |(m+1) w_{m+1}| <= m+1,
    // and sum_{m>=N} (m+1) r^m = (1/r) sum_{j>=N+1} j r^j.
    out.tail = r == 0.0 ? 0.0 : coefficient_tail(1.0 / r, 1, w.order() + 1, r);
    return out;
}

MajorantValue zw_prime_plus_w_majorant(const TaylorSeries& w, double r) {
    if (r < 0.0 || r >= 1.0)
        throw DomainError("zw_prime_plus_w_majorant: r must lie in [0, 1)");
    MajorantValue out;
    double rn = 1.0;
    for (int n = 0; n <= w.order(); ++n) {
        const double a = std::abs(w.coeff(n));
        out.partial += a * rn + n * a * rn;
        rn *= r;
    }
    if (r > 0.0)
        out.tail = coefficient_tail(1.0, 1, w.order() + 1, r) +
                   coefficient_tail(1.0, 0, w.order() + 1, r);
    return out;
}

double derivative_bohr_margin(const TaylorSeries& f, const TaylorSeries& g, double r) {
    if (r < 0.0 || r >= 1.0)
        throw DomainError("derivative_bohr_margin: r must lie in [0, 1)");
    return majorant_at(differentiate(g), r) - majorant_at(differentiate(f), r);
}

}  // namespace bohr
