#ifndef HCV_ROOTS_HPP
#define HCV_ROOTS_HPP

#include <vector>

#include "hcv/complex_poly.hpp"

namespace hcv {

struct RootSet {
    std::vector<Complex> roots;  // with multiplicity, sorted by (re, im)
    double residual;             // max |p(root)| over the set
};

struct AberthOptions {
    int max_iterations = 500;
    double correction_tol = 1e-13;  // stop when max correction < tol*(1+|root|)
};

/**
 * Simultaneous root finding by the Ehrlich-Aberth iteration with
 * deterministic initial guesses on a circle of radius 1 + max|coeff|/|lead|.
 *
 * Exact-zero constant coefficients are stripped first and contribute roots
 * at the origin.  Throws NonConvergence when the iteration cap is reached;
 * the caller must treat that parameter point as unverified, never as false.
 *
 * Coefficient magnitudes are assumed O(1); there is no scaling/balancing
 * pass.
 */
RootSet find_roots(const ComplexPolynomial& p, const AberthOptions& opts = {});

}  // namespace hcv

#endif
