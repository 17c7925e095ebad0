#include "hcv/series.hpp"

#include <cmath>
#include <utility>

#include "hcv/errors.hpp"

namespace hcv {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw Error("series: truncation order mismatch");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw Error("series: negative order");
    c_.assign(static_cast<size_t>(order) + 1, Complex(0.0, 0.0));
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error("series: empty coefficient list");
    for (Complex v : c_)
        if (!is_finite(v)) throw Error("series: non-finite coefficient");
}

Complex TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw Error("series: coefficient index out of range");
    return c_[static_cast<size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, Complex v) {
    if (k < 0 || k > order()) throw Error("series: coefficient index out of range");
    c_[static_cast<size_t>(k)] = v;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Complex> c(a.coeffs());
    for (int k = 0; k <= b.order(); ++k) c[static_cast<size_t>(k)] += b.coeff(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Complex> c(a.coeffs());
    for (int k = 0; k <= b.order(); ++k) c[static_cast<size_t>(k)] -= b.coeff(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
    std::vector<Complex> c(a.coeffs());
    for (Complex& v : c) v *= s;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const int N = a.order();
    std::vector<Complex> c(static_cast<size_t>(N) + 1, Complex(0.0));
    for (int i = 0; i <= N; ++i) {
        const Complex ai = a.coeff(i);
        if (ai == Complex(0.0)) continue;
        for (int j = 0; i + j <= N; ++j) c[static_cast<size_t>(i + j)] += ai * b.coeff(j);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den) {
    require_same_order(num, den);
    const Complex d0 = den.coeff(0);
    if (d0 == Complex(0.0)) throw ZeroConstantTerm("series_divide: zero constant term");
    const int N = num.order();
    std::vector<Complex> q(static_cast<size_t>(N) + 1, Complex(0.0));
    for (int k = 0; k <= N; ++k) {
        Complex acc = num.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= den.coeff(j) * q[static_cast<size_t>(k - j)];
        q[static_cast<size_t>(k)] = acc / d0;
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries series_derivative(const TruncatedSeries& s) {
    if (s.order() == 0) throw Error("series_derivative: order 0");
    std::vector<Complex> c(static_cast<size_t>(s.order()), Complex(0.0));
    for (int k = 1; k <= s.order(); ++k)
        c[static_cast<size_t>(k - 1)] = static_cast<double>(k) * s.coeff(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_integrate(const TruncatedSeries& s) {
    std::vector<Complex> c(static_cast<size_t>(s.order()) + 2, Complex(0.0));
    for (int k = 0; k <= s.order(); ++k)
        c[static_cast<size_t>(k + 1)] = s.coeff(k) / static_cast<double>(k + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_truncate(const TruncatedSeries& s, int new_order) {
    if (new_order > s.order()) throw Error("series_truncate: cannot extend a series");
    std::vector<Complex> c(s.coeffs().begin(), s.coeffs().begin() + new_order + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_from_polynomial(const ComplexPolynomial& p, int order) {
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
    for (int j = 0; j <= order; ++j) c[static_cast<size_t>(j)] = p.coeff(j);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_log(const TruncatedSeries& s) {
    if (std::abs(s.coeff(0) - Complex(1.0)) > 1e-12)
        throw Error("series_log: constant term must be 1");
    if (s.order() == 0) return TruncatedSeries(1);
    TruncatedSeries ratio = series_divide(series_derivative(s), series_truncate(s, s.order() - 1));
    return series_integrate(ratio);
}

Complex series_eval(const TruncatedSeries& s, Complex z) {
    Complex acc(0.0, 0.0);
    for (int k = s.order(); k >= 0; --k) acc = acc * z + s.coeff(k);
    return acc;
}

TruncatedSeries series_log_ratio_strip(double beta, int N) {
    if (N < 1) throw Error("series_log_ratio_strip: N must be >= 1");
    const double s = std::sin(beta);
    if (!(beta > 0.0 && beta < kPi) || std::abs(s) < 1e-12)
        throw DegenerateParameter("series_log_ratio_strip: beta must lie strictly in (0, pi)");
    TruncatedSeries num(N), den(N);
    num.set_coeff(0, Complex(1.0));
    num.set_coeff(1, unit_phase(beta));
    den.set_coeff(0, Complex(1.0));
    den.set_coeff(1, unit_phase(-beta));
    const Complex scale = Complex(1.0) / (Complex(0.0, 2.0) * s);
    return scale * (series_log(num) - series_log(den));
}

}  // namespace hcv
