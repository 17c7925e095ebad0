#ifndef HCV_COMPLEX_POLY_HPP
#define HCV_COMPLEX_POLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "hcv/scalar.hpp"

namespace hcv {

/**
 * Dense univariate polynomial over complex doubles.
 *
 * coeffs()[j] is the coefficient of z^j.  Construction trims exact-zero
 * leading coefficients and rejects non-finite entries.  The zero polynomial
 * is a distinguished state carrying an explicit flag; degree() reports -1
 * for it so the query is total.
 */
class ComplexPolynomial {
public:
    ComplexPolynomial();  // the zero polynomial
    explicit ComplexPolynomial(std::vector<Complex> coeffs);
    ComplexPolynomial(std::initializer_list<Complex> coeffs);

    static ComplexPolynomial monomial(int power, Complex scale = Complex(1.0));

    bool is_zero() const { return zero_; }
    int degree() const { return zero_ ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    Complex coeff(int j) const;
    Complex leading() const;
    const std::vector<Complex>& coeffs() const { return coeffs_; }

private:
    std::vector<Complex> coeffs_;
    bool zero_;
};

ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b);
ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b);
ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);
ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p);

/// Horner evaluation.
Complex poly_eval(const ComplexPolynomial& p, Complex z);

ComplexPolynomial derivative(const ComplexPolynomial& p);
ComplexPolynomial conjugate_coefficients(const ComplexPolynomial& p);

/// p*(z) = z^n conj(p(1/conj(z))) taken at formal degree n >= degree(p):
/// coefficient j of the result is conj(coeff(n - j)).
ComplexPolynomial reciprocal_conjugate(const ComplexPolynomial& p, int formal_degree);

/// p(z) * z^k.
ComplexPolynomial shift_up(const ComplexPolynomial& p, int k);

/// Long division p = q*d + r with degree(r) < degree(d).
std::pair<ComplexPolynomial, ComplexPolynomial> poly_divmod(const ComplexPolynomial& p,
                                                            const ComplexPolynomial& d);

double max_abs_coeff(const ComplexPolynomial& p);

/// Max coefficient-wise |a - b| (coefficients compared through max degree).
double coeff_distance(const ComplexPolynomial& a, const ComplexPolynomial& b);

}  // namespace hcv

#endif
