#include "hcv/complex_poly.hpp"

#include <algorithm>
#include <cmath>

#include "hcv/errors.hpp"

namespace hcv {

namespace {

std::vector<Complex> trimmed(std::vector<Complex> c) {
    while (!c.empty() && c.back() == Complex(0.0, 0.0)) c.pop_back();
    return c;
}

}  // namespace

ComplexPolynomial::ComplexPolynomial() : coeffs_{Complex(0.0, 0.0)}, zero_(true) {}

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) {
    for (Complex c : coeffs)
        if (!is_finite(c)) throw Error("ComplexPolynomial: non-finite coefficient");
    coeffs_ = trimmed(std::move(coeffs));
    zero_ = coeffs_.empty();
    if (zero_) coeffs_.assign(1, Complex(0.0, 0.0));
}

ComplexPolynomial::ComplexPolynomial(std::initializer_list<Complex> coeffs)
    : ComplexPolynomial(std::vector<Complex>(coeffs)) {}

ComplexPolynomial ComplexPolynomial::monomial(int power, Complex scale) {
    if (power < 0) throw Error("monomial: negative power");
    std::vector<Complex> c(static_cast<size_t>(power) + 1, Complex(0.0, 0.0));
    c.back() = scale;
    return ComplexPolynomial(std::move(c));
}

Complex ComplexPolynomial::coeff(int j) const {
    if (j < 0 || zero_ || j >= static_cast<int>(coeffs_.size())) return Complex(0.0, 0.0);
    return coeffs_[static_cast<size_t>(j)];
}

Complex ComplexPolynomial::leading() const {
    if (zero_) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

ComplexPolynomial operator+(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    std::vector<Complex> c(static_cast<size_t>(std::max(a.degree(), b.degree()) + 1), Complex(0.0));
    if (c.empty()) return ComplexPolynomial();
    for (int j = 0; j < static_cast<int>(c.size()); ++j) c[j] = a.coeff(j) + b.coeff(j);
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator-(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    return a + Complex(-1.0) * b;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return ComplexPolynomial();
    std::vector<Complex> c(static_cast<size_t>(a.degree() + b.degree() + 1), Complex(0.0));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) c[i + j] += a.coeff(i) * b.coeff(j);
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p) {
    if (p.is_zero() || s == Complex(0.0)) return ComplexPolynomial();
    std::vector<Complex> c(p.coeffs());
    for (Complex& x : c) x *= s;
    return ComplexPolynomial(std::move(c));
}

Complex poly_eval(const ComplexPolynomial& p, Complex z) {
    Complex acc(0.0, 0.0);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPolynomial derivative(const ComplexPolynomial& p) {
    if (p.degree() <= 0) return ComplexPolynomial();
    std::vector<Complex> c(static_cast<size_t>(p.degree()), Complex(0.0));
    for (int j = 1; j <= p.degree(); ++j) c[j - 1] = static_cast<double>(j) * p.coeff(j);
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial conjugate_coefficients(const ComplexPolynomial& p) {
    std::vector<Complex> c(p.coeffs());
    for (Complex& x : c) x = std::conj(x);
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial reciprocal_conjugate(const ComplexPolynomial& p, int formal_degree) {
    if (formal_degree < p.degree())
        throw Error("reciprocal_conjugate: formal degree below actual degree");
    std::vector<Complex> c(static_cast<size_t>(formal_degree) + 1, Complex(0.0));
    for (int j = 0; j <= formal_degree; ++j) c[j] = std::conj(p.coeff(formal_degree - j));
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial shift_up(const ComplexPolynomial& p, int k) {
    if (p.is_zero()) return p;
    std::vector<Complex> c(static_cast<size_t>(p.degree() + k + 1), Complex(0.0));
    for (int j = 0; j <= p.degree(); ++j) c[j + k] = p.coeff(j);
    return ComplexPolynomial(std::move(c));
}

std::pair<ComplexPolynomial, ComplexPolynomial> poly_divmod(const ComplexPolynomial& p,
                                                            const ComplexPolynomial& d) {
    if (d.is_zero()) throw Error("poly_divmod: division by zero polynomial");
    if (p.degree() < d.degree()) return {ComplexPolynomial(), p};
    std::vector<Complex> rem(p.coeffs());
    const int dq = p.degree() - d.degree();
    std::vector<Complex> quot(static_cast<size_t>(dq) + 1, Complex(0.0));
    const Complex lead = d.leading();
    for (int k = dq; k >= 0; --k) {
        Complex f = rem[static_cast<size_t>(k + d.degree())] / lead;
        quot[static_cast<size_t>(k)] = f;
        for (int j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= f * d.coeff(j);
    }
    rem.resize(static_cast<size_t>(std::max(d.degree(), 1)));
    return {ComplexPolynomial(std::move(quot)), ComplexPolynomial(std::move(rem))};
}

double max_abs_coeff(const ComplexPolynomial& p) {
    double m = 0.0;
    for (Complex c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

double coeff_distance(const ComplexPolynomial& a, const ComplexPolynomial& b) {
    double m = 0.0;
    const int top = std::max(a.degree(), b.degree());
    for (int j = 0; j <= top; ++j) m = std::max(m, std::abs(a.coeff(j) - b.coeff(j)));
    return m;
}

}  // namespace hcv
