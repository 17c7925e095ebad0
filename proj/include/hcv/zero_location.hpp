#ifndef HCV_ZERO_LOCATION_HPP
#define HCV_ZERO_LOCATION_HPP

#include <optional>
#include <vector>

#include "hcv/complex_poly.hpp"
#include "hcv/matrix.hpp"

namespace hcv {

// ---------------------------------------------------------------------------
// Cohn's rule: one-step degree reduction preserving zero counts relative to
// the unit circle.
// ---------------------------------------------------------------------------

struct CohnStep {
    ComplexPolynomial reduced;   // t1 = (conj(a_n) t - a_0 t*) / z
    int degree_drop = 1;
    int inside_count_delta = -1;
};

/// Requires |a_0| < |a_n| strictly (margin-checked).  The constant term of
/// conj(a_n) t - a_0 t* must vanish before the division by z; this is
/// asserted and then dropped.
CohnStep cohn_reduce(const ComplexPolynomial& t, double margin = 1e-12);

enum class DiskClass { AllStrictlyInside, AllInsideOrOn, SomeOutside, Undecided };

struct DiskVerdict {
    DiskClass verdict;
    std::optional<Complex> witness;  // a root with |root| > 1 + tol, iff SomeOutside
};

struct CohnChainTrace {
    std::vector<ComplexPolynomial> stages;  // polynomial entering each reduction
    int zeros_at_origin = 0;                // stripped exact z factors
    int reductions = 0;
    ComplexPolynomial terminal;             // degree <= 2 polynomial solved explicitly
    std::vector<Complex> terminal_roots;
    int inside = 0, on_circle = 0, outside = 0;
    DiskVerdict verdict{DiskClass::Undecided, std::nullopt};
};

struct CohnChainOptions {
    double margin = 1e-12;     // |a_0| vs |a_n| marginal band -> Undecided
    double circle_tol = 1e-9;  // |root| classification band around 1
};

/// Repeated Cohn reduction, stripping exact factors of z between steps;
/// finishes with the explicit quadratic/linear formula at degree <= 2.
CohnChainTrace cohn_chain_trace(const ComplexPolynomial& t, const CohnChainOptions& opts = {});
DiskVerdict cohn_chain(const ComplexPolynomial& t, const CohnChainOptions& opts = {});

// ---------------------------------------------------------------------------
// Schur-Cohn minors: joint positivity of M_1..M_m certifies that all zeros
// lie strictly inside the unit circle.
// ---------------------------------------------------------------------------

struct SchurCohnOptions {
    double positivity_rel = 1e-10;  // threshold = positivity_rel * max |block entry|
    double imag_rel = 1e-9;         // minors must be real to this tolerance
    double schur_agree_rel = 1e-8;  // block det vs Schur-complement det
};

struct SchurCohnReport {
    std::vector<double> minors;  // M_1..M_m (real parts; imaginary parts asserted ~0)
    bool all_positive = false;
    std::optional<int> first_nonpositive_index;  // 1-based
    bool marginal = false;                       // some |M_k| within threshold of 0
    double threshold = 0.0;                      // positivity threshold actually used
};

/// 2k x 2k block matrix ((conj(B)^T, A), (conj(A)^T, B)) of the Schur-Cohn
/// test applied to r, for k in 1..degree(r).
CMatrix schur_cohn_block(const ComplexPolynomial& r, int k);

/// Schur complement form conj(B)^T - A B^{-1} conj(A)^T (k x k).
CMatrix schur_complement_matrix(const ComplexPolynomial& r, int k);

/// All minors M_1..M_m.  Each one is computed both as the block determinant
/// (LU with partial pivoting) and through the Schur complement; the two
/// routes must agree to schur_agree_rel.
SchurCohnReport schur_cohn_minors(const ComplexPolynomial& r, const SchurCohnOptions& opts = {});

/// Single minor M_k (block-determinant route).
double schur_cohn_minor(const ComplexPolynomial& r, int k, const SchurCohnOptions& opts = {});

// ---------------------------------------------------------------------------
// Combined decision procedure.
// ---------------------------------------------------------------------------

/// Primary path is the Schur-Cohn certificate (strict interior); nonpositive
/// or marginal minors fall back to the root oracle, classifying each |root|
/// against 1 +/- tol.
DiskVerdict zeros_in_closed_disk(const ComplexPolynomial& p, double tol = 1e-9);

}  // namespace hcv

#endif
