#include "hcv/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hcv/errors.hpp"
#include "hcv/maps.hpp"
#include "hcv/roots.hpp"

namespace hcv {

double L_r(int n, double a, int r) {
    if (r < 1 || n < 1) throw Error("L_r: need r >= 1, n >= 1");
    return ipow(0.25, r) * ipow(static_cast<double>(n), r - 2) *
           ipow(2.0 - n + 2.0 * a + a * n, r) * ipow(1.0 - a, r);
}

std::vector<ScalarIdentity> scalar_identities(int n, double a, double theta) {
    // a_0 and a_2 in their defining form; at n = 2 the z^2 slot of p merges
    // a_2 with the a z^n term, so reading them back from the polynomial
    // would conflate the two.
    const Complex e = unit_phase(-theta);
    const Complex a0 = 0.5 * (2.0 * a + a * n - n) * e;
    const Complex a2 = 0.5 * (2.0 + a * n - n) * e;
    const Complex P = a2 - a * a0;  // -a a_0 + a_2
    const double w = 2.0 - n + 2.0 * a + a * n;

    std::vector<ScalarIdentity> out;
    auto push = [&out](const char* name, Complex lhs, double rhs) {
        out.push_back({name, lhs, rhs, std::abs(lhs - rhs)});
    };
    push("a", Complex(1.0) - a0 * std::conj(a0) - std::conj(a2) * P,
         0.25 * n * w * (1.0 - a) * (2.0 - a));
    push("b", (-std::conj(a0) + a * std::conj(a2)) * P, 0.25 * n * w * ipow(1.0 - a, 3));
    push("c", -std::conj(a0) * P, 0.25 * (n - 2.0 * a - a * n) * w * (1.0 - a));
    push("d", Complex(a) - a0 * std::conj(a2), 0.25 * n * w * (1.0 - a));
    push("e", Complex(1.0) - a0 * std::conj(a0), 0.25 * (n + 2.0) * w * (1.0 - a));
    return out;
}

double closed_form_minor(const CaseId& id, int n, double a, double theta) {
    const bool odd = (n % 2 == 1);
    const bool half_odd = (n % 2 == 0) && ((n / 2) % 2 == 1);
    switch (id.which) {
        case CaseWhich::Case1:
            if (!odd || id.k < 1 || id.k > n || n < 3)
                throw BranchMismatch("Case1: n odd >= 3, 1 <= k <= n");
            return L_r(n, a, id.k) * (n + id.k - 1.0) * (n + id.k + 1.0);
        case CaseWhich::Case2:
            if (odd || id.k < 1 || id.k > n || n < 4)
                throw BranchMismatch("Case2: n even >= 4, 1 <= k <= n");
            return L_r(n, a, id.k) * (n + id.k) * (n + id.k);
        case CaseWhich::Case3:
            if (!odd || n < 5) throw BranchMismatch("Case3: n odd >= 5");
            return L_r(n, a, n + 1) * 8.0 * n;
        case CaseWhich::Case4:
            if (odd || n < 6) throw BranchMismatch("Case4: n even >= 6");
            return L_r(n, a, n + 1) * 8.0 * n *
                   (half_odd ? (1.0 - std::cos(theta)) : (1.0 + std::cos(theta)));
        case CaseWhich::Case5:
            if (!odd || n < 5) throw BranchMismatch("Case5: n odd >= 5");
            return L_r(n, a, n + 2) * 8.0 * (1.0 + std::cos(2.0 * theta));
        case CaseWhich::Case6: {
            if (odd || n < 6) throw BranchMismatch("Case6: n even >= 6");
            const double c = half_odd ? (1.0 - std::cos(theta)) : (1.0 + std::cos(theta));
            return L_r(n, a, n + 2) * 16.0 * c * c;
        }
    }
    throw BranchMismatch("closed_form_minor: unknown case");
}

double minor_closed_form(int n, int k, double a, double theta) {
    if (k < 1 || k > n + 2) throw Error("minor_closed_form: need 1 <= k <= n+2");
    const bool odd = (n % 2 == 1);
    if (k <= n) {
        if (n < 3) throw BranchMismatch("minor_closed_form: needs n >= 3 for k <= n");
        return (k % 2 == 1) ? L_r(n, a, k) * (n + k - 1.0) * (n + k + 1.0)
                            : L_r(n, a, k) * (n + k) * (n + k);
    }
    const CaseId id{k == n + 1 ? (odd ? CaseWhich::Case3 : CaseWhich::Case4)
                               : (odd ? CaseWhich::Case5 : CaseWhich::Case6),
                    k};
    return closed_form_minor(id, n, a, theta);
}

double numeric_minor(int n, double a, double theta, int k) {
    if (k < 1 || k > n + 2) throw Error("numeric_minor: need 1 <= k <= n+2");
    return schur_cohn_minor(build_p(n, a, theta), k);
}

const char* to_string(PointVerdict v) {
    switch (v) {
        case PointVerdict::Pass: return "pass";
        case PointVerdict::Fail: return "fail";
        case PointVerdict::Undecided: return "undecided";
        case PointVerdict::Exploratory: return "exploratory";
    }
    return "?";
}

namespace {

// Distance of theta to the lattice c + m*period.
double lattice_distance(double theta, double offset, double period) {
    const double q = (theta - offset) / period;
    return std::abs(theta - (offset + std::round(q) * period));
}

}  // namespace

CaseVerdict verify_point(int n, double a, double theta, const PointOptions& opts) {
    if (n < 1) throw Error("verify_point: n must be >= 1");
    if (!(a > -1.0 && a < 1.0)) throw Error("verify_point: a must lie in (-1, 1)");

    CaseVerdict cv;
    cv.params = {n, theta, a, kPi / 2.0};
    std::ostringstream notes;

    const double lo = (n - 2.0) / (n + 2.0);
    const bool exploratory = a < lo - opts.branch_tol;
    const bool endpoint = std::abs(a - lo) <= opts.branch_tol;
    const bool a_critical = std::abs(a * (n + 2) - n) <= 1e-12;
    const bool odd = (n % 2 == 1);
    bool theta_half_pi = odd && lattice_distance(theta, kPi / 2.0, kPi) <= opts.branch_tol;
    bool theta_odd_pi =
        (n % 4 == 0) && lattice_distance(theta, kPi, 2.0 * kPi) <= opts.branch_tol;
    bool theta_even_pi =
        (n % 4 == 2) && lattice_distance(theta, 0.0, 2.0 * kPi) <= opts.branch_tol;

    const ComplexPolynomial p = build_p(n, a, theta);
    const RationalDilatation omega = convolution_dilatation(n, a, theta);

    // Measurements shared by every branch.
    const SchurCohnReport minors = schur_cohn_minors(p);
    cv.min_minor = *std::min_element(minors.minors.begin(), minors.minors.end());

    bool roots_ok = false;
    bool roots_available = true;
    try {
        const RootSet rs = find_roots(p);
        for (Complex r : rs.roots)
            cv.roots_max_modulus = std::max(cv.roots_max_modulus, std::abs(r));
        roots_ok = cv.roots_max_modulus <= 1.0 + opts.root_tol;
    } catch (const NonConvergence&) {
        roots_available = false;
        notes << "root oracle did not converge; ";
    }

    cv.max_dilatation_sample =
        max_dilatation_on_grid(omega, opts.grid_radial, opts.grid_angular, opts.grid_r_max);
    cv.chd_max_crossings =
        chd_crossings(n, theta, a, opts.chd_r, opts.chd_samples, opts.chd_lines).max_crossings;

    bool cert_ok = false;
    bool cert_undecided = false;

    if (endpoint) {
        cv.branch = "endpoint";
        // At a = (n-2)/(n+2) the dilatation collapses to -z^n e^{i theta}:
        // equivalently p = -e^{-i theta} p* coefficient-wise.  The identity
        // is certified at the snapped endpoint; routing admits points within
        // branch_tol of it.
        const ComplexPolynomial pe = build_p(n, lo, theta);
        const ComplexPolynomial rhs =
            Complex(-1.0) * (unit_phase(-theta) * reciprocal_conjugate(pe, n + 2));
        const double err = coeff_distance(pe, rhs);
        cert_ok = err <= 1e-10 * (1.0 + max_abs_coeff(pe));
        notes << "endpoint identity residual " << err << "; ";
    } else if (a_critical) {
        cv.branch = "a-critical";
        const ComplexPolynomial beta_poly =
            special_case_polys(n, a, theta, SpecialBranch::ACritical).front();
        const DiskVerdict dv = zeros_in_closed_disk(beta_poly, opts.root_tol);
        cert_ok = dv.verdict == DiskClass::AllStrictlyInside ||
                  dv.verdict == DiskClass::AllInsideOrOn;
        cert_undecided = dv.verdict == DiskClass::Undecided;
        notes << "beta(z) zero location checked; ";
    } else if (theta_odd_pi || theta_even_pi || theta_half_pi) {
        cv.branch = theta_half_pi ? "theta-half-pi" : (theta_odd_pi ? "theta-odd-pi" : "theta-even-pi");
        const SpecialBranch br = theta_half_pi ? SpecialBranch::ThetaHalfPiOddN
                                : theta_odd_pi ? SpecialBranch::ThetaOddPi
                                               : SpecialBranch::ThetaEvenPi;
        const std::vector<ComplexPolynomial> factors = special_case_polys(n, a, theta, br);
        const ComplexPolynomial& cof = factors.back();
        DiskVerdict dv = cohn_chain(cof, {1e-12, opts.root_tol});
        if (dv.verdict == DiskClass::Undecided) dv = zeros_in_closed_disk(cof, opts.root_tol);
        cert_ok = dv.verdict == DiskClass::AllStrictlyInside ||
                  dv.verdict == DiskClass::AllInsideOrOn;
        cert_undecided = dv.verdict == DiskClass::Undecided;
        notes << "unimodular factor removed, cofactor chain checked; ";
    } else {
        cv.branch = exploratory ? "exploratory" : (n >= 5 ? "general" : "small-n");
        DiskVerdict dv = zeros_in_closed_disk(p, opts.root_tol);
        cert_ok = dv.verdict == DiskClass::AllStrictlyInside ||
                  dv.verdict == DiskClass::AllInsideOrOn;
        cert_undecided = dv.verdict == DiskClass::Undecided;
        if (!exploratory && n >= 5) {
            // Closed-form cross-check of every minor.
            for (int k = 1; k <= n + 2; ++k) {
                const double cf = minor_closed_form(n, k, a, theta);
                const double err =
                    std::abs(minors.minors[static_cast<size_t>(k - 1)] - cf) / (1.0 + std::abs(cf));
                if (err >= cv.rel_error) {
                    cv.rel_error = err;
                    cv.closed_form = cf;
                }
            }
            notes << "closed-form minors max rel err " << cv.rel_error << "; ";
        }
        // Certificates must not contradict each other.
        if (roots_available && minors.all_positive && !minors.marginal &&
            cv.roots_max_modulus >= 1.0 + opts.root_tol) {
            cert_ok = false;
            notes << "certificate disagreement; ";
        }
    }

    const bool dil_ok = cv.max_dilatation_sample < 1.0 - opts.sample_margin;
    const bool chd_ok = cv.chd_max_crossings <= 2;
    const bool rel_ok = cv.rel_error < opts.minor_rel;

    if (exploratory) {
        cv.verdict = PointVerdict::Exploratory;
        cv.passed = false;
        notes << "outside the theorem interval (no claim); min minor " << cv.min_minor;
    } else if (cert_undecided || !roots_available) {
        cv.verdict = PointVerdict::Undecided;
        cv.passed = false;
    } else {
        cv.passed = cert_ok && roots_ok && dil_ok && chd_ok && rel_ok;
        cv.verdict = cv.passed ? PointVerdict::Pass : PointVerdict::Fail;
    }
    cv.detail = notes.str();
    return cv;
}

SweepSummary sweep(int n_lo, int n_hi, int a_count, int theta_count,
                   const std::function<void(const SweepRecord&)>& sink,
                   const PointOptions& opts) {
    SweepSummary s;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double lo = (n - 2.0) / (n + 2.0);
        const double hi = 1.0 - 1e-3;
        for (int ia = 0; ia < a_count; ++ia) {
            const double a = (a_count == 1)
                                 ? 0.5 * (lo + 1.0)
                                 : lo + (hi - lo) * ia / (a_count - 1);
            for (int it = 0; it < theta_count; ++it) {
                const double theta = 2.0 * kPi * it / theta_count;
                const CaseVerdict cv = verify_point(n, a, theta, opts);
                ++s.total;
                switch (cv.verdict) {
                    case PointVerdict::Pass: ++s.passed; break;
                    case PointVerdict::Fail: ++s.failed; break;
                    case PointVerdict::Undecided: ++s.undecided; break;
                    case PointVerdict::Exploratory: ++s.exploratory; break;
                }
                sink(SweepRecord{n, a, theta, cv.branch, cv.min_minor, cv.roots_max_modulus,
                                 cv.max_dilatation_sample, cv.chd_max_crossings,
                                 to_string(cv.verdict)});
            }
        }
    }
    return s;
}

}  // namespace hcv
