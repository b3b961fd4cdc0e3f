#include "bohr/taylor_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bohr {

namespace {

int checked_order(int order) {
    if (order < 0) throw DomainError("TaylorSeries: order must be nonnegative");
    return order;
}

TaylorSeries truncated(const TaylorSeries& s, int order) {
    if (s.order() == order) return s;
    std::vector<Complex> c(s.coeffs().begin(), s.coeffs().begin() + order + 1);
    return TaylorSeries(std::move(c));
}

}  // namespace

TaylorSeries::TaylorSeries(int order)
    : coeffs_(static_cast<std::size_t>(checked_order(order)) + 1) {}

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("TaylorSeries: empty coefficient vector");
}

TaylorSeries TaylorSeries::constant(Complex value, int order) {
    TaylorSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TaylorSeries TaylorSeries::monomial(int degree, int order, Complex scale) {
    if (degree < 0) throw DomainError("TaylorSeries::monomial: negative degree");
    TaylorSeries s(order);
    if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = scale;
    return s;
}

Complex TaylorSeries::coeff(int n) const {
    if (n < 0 || n > order()) return {};
    return coeffs_[static_cast<std::size_t>(n)];
}

void TaylorSeries::set_coeff(int n, Complex value) {
    if (n < 0 || n > order())
        throw DomainError("TaylorSeries::set_coeff: index outside stored range");
    coeffs_[static_cast<std::size_t>(n)] = value;
}

Complex TaylorSeries::operator()(Complex z) const {
    Complex acc = 0.0;
    for (int n = order(); n >= 0; --n) acc = acc * z + coeffs_[static_cast<std::size_t>(n)];
    return acc;
}

TaylorSeries add(const TaylorSeries& a, const TaylorSeries& b) {
    const int n = std::min(a.order(), b.order());
    TaylorSeries out(n);
    for (int i = 0; i <= n; ++i) out.set_coeff(i, a.coeff(i) + b.coeff(i));
    return out;
}

TaylorSeries sub(const TaylorSeries& a, const TaylorSeries& b) {
    const int n = std::min(a.order(), b.order());
    TaylorSeries out(n);
    for (int i = 0; i <= n; ++i) out.set_coeff(i, a.coeff(i) - b.coeff(i));
    return out;
}

TaylorSeries mul(const TaylorSeries& a, const TaylorSeries& b) {
    const int n = std::min(a.order(), b.order());
    TaylorSeries out(n);
    for (int i = 0; i <= n; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j <= i; ++j) acc += a.coeff(j) * b.coeff(i - j);
        out.set_coeff(i, acc);
    }
    return out;
}

TaylorSeries scale(const TaylorSeries& s, Complex factor) {
    TaylorSeries out(s.order());
    for (int i = 0; i <= s.order(); ++i) out.set_coeff(i, factor * s.coeff(i));
    return out;
}

TaylorSeries compose(const TaylorSeries& outer, const TaylorSeries& inner) {
    if (inner.coeff(0) != Complex{})
        throw NonzeroConstantTerm("compose: inner series must vanish at the origin");
    const int n = std::min(outer.order(), inner.order());
    const TaylorSeries inner_t = truncated(inner, n);
    // Horner on truncated series, highest coefficient first.
    TaylorSeries acc = TaylorSeries::constant(outer.coeff(n), n);
    for (int j = n - 1; j >= 0; --j) {
        acc = mul(acc, inner_t);
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(j));
    }
    return acc;
}

TaylorSeries divide(const TaylorSeries& num, const TaylorSeries& den) {
    if (den.coeff(0) == Complex{})
        throw DomainError("divide: denominator must not vanish at the origin");
    const int n = std::min(num.order(), den.order());
    TaylorSeries out(n);
    for (int i = 0; i <= n; ++i) {
        Complex acc = num.coeff(i);
        for (int j = 0; j < i; ++j) acc -= out.coeff(j) * den.coeff(i - j);
        out.set_coeff(i, acc / den.coeff(0));
    }
    return out;
}

TaylorSeries differentiate(const TaylorSeries& s) {
    const int n = std::max(s.order() - 1, 0);
    TaylorSeries out(n);
    for (int i = 1; i <= s.order(); ++i)
        out.set_coeff(i - 1, static_cast<double>(i) * s.coeff(i));
    return out;
}

TaylorSeries integrate(const TaylorSeries& s) {
    TaylorSeries out(s.order() + 1);
    for (int i = 0; i <= s.order(); ++i)
        out.set_coeff(i + 1, s.coeff(i) / static_cast<double>(i + 1));
    return out;
}

double majorant_at(const TaylorSeries& s, double r, bool skip_constant) {
    if (r < 0.0 || r >= 1.0) throw DomainError("majorant_at: r must lie in [0, 1)");
    double sum = 0.0;
    double rn = 1.0;
    for (int n = 0; n <= s.order(); ++n) {
        if (n > 0 || !skip_constant) sum += std::abs(s.coeff(n)) * rn;
        rn *= r;
    }
    return sum;
}

double coefficient_tail(double scale, int power, int from, double r) {
    if (r < 0.0 || r >= 1.0) throw DomainError("coefficient_tail: r must lie in [0, 1)");
    if (from < 1) throw DomainError("coefficient_tail: from must be >= 1");
    if (power < 0) throw DomainError("coefficient_tail: power must be >= 0");
    if (r == 0.0 || scale == 0.0) return 0.0;
    const double ratio = std::pow((from + 1.0) / from, power) * r;
    if (ratio >= 1.0)
        throw DomainError("coefficient_tail: geometric ratio bound unavailable at r=" +
                          std::to_string(r));
    return scale * std::pow(static_cast<double>(from), power) *
           std::pow(r, static_cast<double>(from)) / (1.0 - ratio);
}

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) { return add(a, b); }
TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) { return sub(a, b); }
TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) { return mul(a, b); }
TaylorSeries operator*(Complex factor, const TaylorSeries& s) { return scale(s, factor); }

}  // namespace bohr
