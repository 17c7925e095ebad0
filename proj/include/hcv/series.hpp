#ifndef HCV_SERIES_HPP
#define HCV_SERIES_HPP

#include <vector>

#include "hcv/complex_poly.hpp"
#include "hcv/scalar.hpp"

namespace hcv {

/**
 * Taylor coefficients of an analytic function through order N.
 *
 * Arithmetic between two series requires equal truncation orders; there is
 * no silent zero-extension because coefficients past the truncation are
 * unknown, not zero.  Polynomials may be lifted to any order since their
 * high coefficients really are zero.
 */
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    Complex coeff(int k) const;
    void set_coeff(int k, Complex v);
    const std::vector<Complex>& coeffs() const { return c_; }

private:
    std::vector<Complex> c_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(Complex s, const TruncatedSeries& a);

/// Cauchy product truncated to the common order.
TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// q with num = den * q through order N; den must have nonzero constant term.
TruncatedSeries series_divide(const TruncatedSeries& num, const TruncatedSeries& den);

TruncatedSeries series_derivative(const TruncatedSeries& s);   // order N-1
TruncatedSeries series_integrate(const TruncatedSeries& s);    // order N+1, constant 0
TruncatedSeries series_truncate(const TruncatedSeries& s, int new_order);
TruncatedSeries series_from_polynomial(const ComplexPolynomial& p, int order);

/// log s for s with constant term 1, via integrating s'/s.
TruncatedSeries series_log(const TruncatedSeries& s);

Complex series_eval(const TruncatedSeries& s, Complex z);

/**
 * Taylor coefficients through order N of
 *   (1/(2i sin beta)) log((1 + z e^{i beta}) / (1 + z e^{-i beta})),
 * the analytic map of the disk onto a vertical strip.  Computed by formal
 * log series; the closed form (-1)^{k+1} sin(k beta)/(k sin beta) serves as
 * the independent oracle in the tests.
 */
TruncatedSeries series_log_ratio_strip(double beta, int N);

}  // namespace hcv

#endif
