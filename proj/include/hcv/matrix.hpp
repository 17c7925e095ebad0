#ifndef HCV_MATRIX_HPP
#define HCV_MATRIX_HPP

#include <vector>

#include "hcv/scalar.hpp"

namespace hcv {

/// Minimal dense complex matrix, row major.
class CMatrix {
public:
    CMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Complex& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Complex at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    double max_abs() const;

private:
    int rows_, cols_;
    std::vector<Complex> a_;
};

CMatrix multiply(const CMatrix& a, const CMatrix& b);

struct LuFactorization {
    CMatrix lu;
    std::vector<int> pivots;
    double permutation_sign;
    bool singular;
    double max_abs_entry;   // of the input matrix
    double min_abs_pivot;
};

/// LU with partial pivoting (complex arithmetic).
LuFactorization lu_factor(CMatrix m);

Complex lu_determinant(const LuFactorization& f);
Complex determinant(const CMatrix& m);

/// Solve U X = B for upper-triangular U (no pivoting; U must have nonzero
/// diagonal).
CMatrix solve_upper_triangular(const CMatrix& u, const CMatrix& b);

}  // namespace hcv

#endif
