#include "hcv/matrix.hpp"

#include <cmath>
#include <utility>

#include "hcv/errors.hpp"

namespace hcv {

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw Error("CMatrix: negative dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0));
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (Complex v : a_) m = std::max(m, std::abs(v));
    return m;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw Error("multiply: inner dimensions differ");
    CMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex(0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

LuFactorization lu_factor(CMatrix m) {
    if (m.rows() != m.cols()) throw Error("lu_factor: matrix not square");
    const int n = m.rows();
    LuFactorization f{std::move(m), std::vector<int>(static_cast<size_t>(n)), 1.0, false,
                      0.0, 0.0};
    f.max_abs_entry = f.lu.max_abs();
    double min_pivot = -1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(f.lu.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::abs(f.lu.at(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        f.pivots[static_cast<size_t>(k)] = piv;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(f.lu.at(k, j), f.lu.at(piv, j));
            f.permutation_sign = -f.permutation_sign;
        }
        const Complex pk = f.lu.at(k, k);
        if (pk == Complex(0.0)) {
            f.singular = true;
            f.min_abs_pivot = 0.0;
            return f;
        }
        if (min_pivot < 0.0 || best < min_pivot) min_pivot = best;
        for (int i = k + 1; i < n; ++i) {
            const Complex l = f.lu.at(i, k) / pk;
            f.lu.at(i, k) = l;
            if (l == Complex(0.0)) continue;
            for (int j = k + 1; j < n; ++j) f.lu.at(i, j) -= l * f.lu.at(k, j);
        }
    }
    f.min_abs_pivot = (min_pivot < 0.0) ? 0.0 : min_pivot;
    return f;
}

Complex lu_determinant(const LuFactorization& f) {
    if (f.singular) return Complex(0.0, 0.0);
    Complex det(f.permutation_sign, 0.0);
    for (int k = 0; k < f.lu.rows(); ++k) det *= f.lu.at(k, k);
    return det;
}

Complex determinant(const CMatrix& m) { return lu_determinant(lu_factor(m)); }

CMatrix solve_upper_triangular(const CMatrix& u, const CMatrix& b) {
    if (u.rows() != u.cols() || u.rows() != b.rows())
        throw Error("solve_upper_triangular: dimension mismatch");
    const int n = u.rows();
    CMatrix x = b;
    for (int j = 0; j < b.cols(); ++j) {
        for (int i = n - 1; i >= 0; --i) {
            Complex acc = x.at(i, j);
            for (int k = i + 1; k < n; ++k) acc -= u.at(i, k) * x.at(k, j);
            const Complex d = u.at(i, i);
            if (d == Complex(0.0)) throw Error("solve_upper_triangular: zero diagonal");
            x.at(i, j) = acc / d;
        }
    }
    return x;
}

}  // namespace hcv
