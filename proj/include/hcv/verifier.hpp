#ifndef HCV_VERIFIER_HPP
#define HCV_VERIFIER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hcv/harmonic.hpp"
#include "hcv/zero_location.hpp"

namespace hcv {

/// L_r = (1/4)^r n^{r-2} (2 - n + 2a + an)^r (1 - a)^r; positive exactly
/// when a > (n-2)/(n+2).
double L_r(int n, double a, int r);

struct ScalarIdentity {
    std::string name;  // "a".."e"
    Complex lhs;
    double rhs;
    double abs_error;
};

/// The five scalar identities relating the entries of the Schur complement
/// to n and a; lhs from the coefficients of p, rhs in factored form.
std::vector<ScalarIdentity> scalar_identities(int n, double a, double theta);

enum class CaseWhich { Case1, Case2, Case3, Case4, Case5, Case6 };

struct CaseId {
    CaseWhich which;
    int k = 0;  // used by Case1/Case2 only
};

/// Closed-form value of M_k as printed under the case split:
///   Case1 (n odd,  1<=k<=n):   L_k (n+k-1)(n+k+1)
///   Case2 (n even, 1<=k<=n):   L_k (n+k)^2
///   Case3 (n odd,  k=n+1):     L_{n+1} 8n
///   Case4 (n even, k=n+1):     L_{n+1} 8n (1 -+ cos theta)  by parity of n/2
///   Case5 (n odd,  k=n+2):     L_{n+2} 8 (1 + cos 2 theta)
///   Case6 (n even, k=n+2):     L_{n+2} 16 (1 -+ cos theta)^2 by parity of n/2
double closed_form_minor(const CaseId& id, int n, double a, double theta);

/**
 * Verified closed form of M_k.  For k <= n the printed Case 1/2 products
 * are keyed to the wrong parity: the determinant follows the parity of k,
 * not of n (the two agree exactly when k = n mod 2, which covers k = n).
 * Hand-checking M_2 = (1 - |a_0|^2)^2 = L_2 (n+2)^2 for every n settles the
 * even-k form, and numerics confirm the swap at the remaining indices:
 *   k odd:  L_k (n+k-1)(n+k+1)
 *   k even: L_k (n+k)^2
 * For k = n+1, n+2 the printed Case 3-6 forms are correct as stated.
 */
double minor_closed_form(int n, int k, double a, double theta);

/// M_k of p(n, a, theta) by LU determinant.
double numeric_minor(int n, double a, double theta, int k);

struct PointOptions {
    double branch_tol = 1e-9;    // routing width for endpoint / degenerate theta
    double root_tol = 1e-9;      // |root| classification band around the circle
    double minor_rel = 1e-8;     // closed-form vs numeric minor agreement
    double sample_margin = 0.0;  // require max |omega~| < 1 - margin
    int grid_radial = 64;
    int grid_angular = 256;
    double grid_r_max = 0.999;
    int chd_samples = 4096;
    int chd_lines = 64;
    double chd_r = 0.99;
};

enum class PointVerdict { Pass, Fail, Undecided, Exploratory };

struct CaseVerdict {
    DilatationParams params;
    std::string branch;          // general | small-n | endpoint | a-critical |
                                 // theta-odd-pi | theta-even-pi | theta-half-pi
    double min_minor = 0.0;      // min Schur-Cohn minor of p
    double closed_form = 0.0;    // closed form paired with the worst minor (0 if n/a)
    double rel_error = 0.0;      // worst closed-form vs numeric relative error
    double roots_max_modulus = 0.0;
    double max_dilatation_sample = 0.0;
    int chd_max_crossings = 0;
    PointVerdict verdict = PointVerdict::Undecided;
    bool passed = false;
    std::string detail;          // human-readable notes (certificates, branches)
};

/// End-to-end certification of one parameter point (n, a, theta) at
/// beta = pi/2: zero location of p (special branches handled separately),
/// dilatation sampling, and the CHD crossing check.
CaseVerdict verify_point(int n, double a, double theta, const PointOptions& opts = {});

struct SweepRecord {
    int n;
    double a, theta;
    std::string case_branch;
    double min_minor, max_root_modulus, max_dilatation_sample;
    int chd_max_crossings;
    std::string verdict;  // pass | fail | undecided | exploratory
};

struct SweepSummary {
    long total = 0, passed = 0, failed = 0, undecided = 0, exploratory = 0;
};

/// Lexicographic sweep over n in [n_lo, n_hi], an a-grid per n over
/// [(n-2)/(n+2), 1-1e-3] (a_count == 1 takes the interval midpoint), and a
/// uniform theta-grid over [0, 2 pi).  One record per point, in order.
SweepSummary sweep(int n_lo, int n_hi, int a_count, int theta_count,
                   const std::function<void(const SweepRecord&)>& sink,
                   const PointOptions& opts = {});

const char* to_string(PointVerdict v);

}  // namespace hcv

#endif
