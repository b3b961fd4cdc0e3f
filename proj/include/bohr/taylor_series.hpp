#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace bohr {

using Complex = std::complex<double>;

/// Default truncation order used by the function-family constructors.
inline constexpr int kDefaultOrder = 256;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown by compose() when the inner series has a nonzero constant term.
struct NonzeroConstantTerm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Truncated complex power series.  coeffs()[n] holds the coefficient of z^n
/// and a series of order N is exact modulo z^{N+1}.  All arithmetic truncates
/// to the minimum operand order; precision is never silently extended.
class TaylorSeries {
public:
    /// The zero series of order 0.
    TaylorSeries() : coeffs_(1) {}
    /// Zero series of the given order (order >= 0).
    explicit TaylorSeries(int order);
    /// Wraps an explicit coefficient vector; order = coeffs.size() - 1.
    explicit TaylorSeries(std::vector<Complex> coeffs);

    static TaylorSeries constant(Complex value, int order);
    /// scale * z^degree as a series of the given order.
    static TaylorSeries monomial(int degree, int order,
                                 Complex scale = Complex{1.0, 0.0});

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Complex> coeffs() const { return coeffs_; }

    /// Coefficient of z^n; zero outside the stored range.
    Complex coeff(int n) const;
    void set_coeff(int n, Complex value);

    /// Evaluates the truncated polynomial by Horner's scheme.
    Complex operator()(Complex z) const;

    bool operator==(const TaylorSeries&) const = default;

private:
    std::vector<Complex> coeffs_;
};

TaylorSeries add(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries sub(const TaylorSeries& a, const TaylorSeries& b);

/// Cauchy product truncated to the minimum operand order.
TaylorSeries mul(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries scale(const TaylorSeries& s, Complex factor);

/// outer(inner(z)) truncated to the minimum operand order.  Requires
/// inner(0) = 0 exactly; the truncation is then exact because coefficient n
/// of the result depends only on inner coefficients of index <= n.
TaylorSeries compose(const TaylorSeries& outer, const TaylorSeries& inner);

/// num / den as formal power series; requires den(0) != 0.
TaylorSeries divide(const TaylorSeries& num, const TaylorSeries& den);

/// Termwise derivative; the order drops by one (a constant series maps to
/// the zero series of order 0).
TaylorSeries differentiate(const TaylorSeries& s);

/// Termwise antiderivative with zero constant term; the order grows by one.
TaylorSeries integrate(const TaylorSeries& s);

/// Partial majorant sum  sum_n |coeff(n)| r^n  over the stored range,
/// starting at n = 1 when skip_constant is set.  Requires 0 <= r < 1.
double majorant_at(const TaylorSeries& s, double r, bool skip_constant = false);

/// Upper bound on  sum_{n >= from} scale * n^power * r^n  (from >= 1), via
/// the geometric-ratio bound; requires ((from+1)/from)^power * r < 1.
double coefficient_tail(double scale, int power, int from, double r);

/// A partial sum together with a certified bound on the truncated tail.
struct MajorantValue {
    double partial = 0.0;
    double tail = 0.0;
    double upper() const { return partial + tail; }
};

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries operator*(Complex factor, const TaylorSeries& s);

}  // namespace bohr
