#include "hcv/zero_location.hpp"

#include <algorithm>
#include <cmath>

#include "hcv/errors.hpp"
#include "hcv/roots.hpp"

namespace hcv {

namespace {

// Roots of a degree <= 2 polynomial by the stable quadratic formula.
std::vector<Complex> explicit_low_degree_roots(const ComplexPolynomial& p) {
    if (p.degree() == 1) return {-p.coeff(0) / p.coeff(1)};
    if (p.degree() == 2) {
        const Complex a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        const Complex disc = std::sqrt(b * b - 4.0 * a * c);
        // Pick the sign that avoids cancellation in b + sign*disc.
        const Complex q = (std::abs(b + disc) >= std::abs(b - disc)) ? Complex(-0.5) * (b + disc)
                                                                     : Complex(-0.5) * (b - disc);
        if (q == Complex(0.0)) return {Complex(0.0), Complex(0.0)};
        return {q / a, c / q};
    }
    throw Error("explicit_low_degree_roots: degree must be 1 or 2");
}

ComplexPolynomial drop_constant(const ComplexPolynomial& p) {
    std::vector<Complex> c(p.coeffs().begin() + 1, p.coeffs().end());
    return ComplexPolynomial(std::move(c));
}

}  // namespace

CohnStep cohn_reduce(const ComplexPolynomial& t, double margin) {
    if (t.degree() < 1) throw Error("cohn_reduce: degree must be >= 1");
    const Complex a0 = t.coeff(0);
    const Complex an = t.leading();
    const double lo = std::abs(a0), hi = std::abs(an);
    if (!(hi - lo > margin * (hi + lo)))
        throw HypothesisViolated("cohn_reduce: |a_0| < |a_n| fails");

    const ComplexPolynomial tstar = reciprocal_conjugate(t, t.degree());
    const ComplexPolynomial num = std::conj(an) * t - a0 * tstar;
    if (std::abs(num.coeff(0)) > 1e-12 * (lo + hi))
        throw Error("cohn_reduce: constant term did not cancel");
    return CohnStep{drop_constant(num), 1, -1};
}

CohnChainTrace cohn_chain_trace(const ComplexPolynomial& t, const CohnChainOptions& opts) {
    if (t.degree() < 1) throw Error("cohn_chain: degree must be >= 1");
    CohnChainTrace tr;
    ComplexPolynomial cur = t;
    bool undecided = false;
    bool outside_by_count = false;

    while (true) {
        // Strip exact factors of z (each is a zero strictly inside).
        while (!cur.is_zero() && cur.degree() >= 1 &&
               std::abs(cur.coeff(0)) <= 1e-14 * max_abs_coeff(cur)) {
            cur = drop_constant(cur);
            ++tr.zeros_at_origin;
        }
        if (cur.is_zero() || cur.degree() == 0) break;
        if (cur.degree() <= 2) {
            tr.terminal = cur;
            tr.terminal_roots = explicit_low_degree_roots(cur);
            for (Complex r : tr.terminal_roots) {
                const double m = std::abs(r);
                if (m < 1.0 - opts.circle_tol)
                    ++tr.inside;
                else if (m <= 1.0 + opts.circle_tol)
                    ++tr.on_circle;
                else
                    ++tr.outside;
            }
            break;
        }
        const double lo = std::abs(cur.coeff(0)), hi = std::abs(cur.leading());
        if (hi - lo > opts.margin * (hi + lo)) {
            tr.stages.push_back(cur);
            cur = cohn_reduce(cur, opts.margin).reduced;
            ++tr.reductions;
            ++tr.inside;
        } else if (lo - hi > opts.margin * (hi + lo)) {
            // Product of root moduli |a_0/a_n| exceeds 1: some root is outside.
            outside_by_count = true;
            break;
        } else {
            undecided = true;
            break;
        }
    }

    if (undecided) {
        tr.verdict = {DiskClass::Undecided, std::nullopt};
        return tr;
    }
    if (tr.outside > 0 || outside_by_count) {
        std::optional<Complex> witness;
        try {
            const RootSet rs = find_roots(t);
            auto it = std::max_element(rs.roots.begin(), rs.roots.end(),
                                       [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
            if (it != rs.roots.end() && std::abs(*it) > 1.0 + opts.circle_tol) witness = *it;
        } catch (const NonConvergence&) {
        }
        if (!witness) {
            for (Complex r : tr.terminal_roots)
                if (std::abs(r) > 1.0 + opts.circle_tol) witness = r;
        }
        if (!witness) {
            tr.verdict = {DiskClass::Undecided, std::nullopt};
            return tr;
        }
        tr.verdict = {DiskClass::SomeOutside, witness};
        return tr;
    }
    tr.verdict = {tr.on_circle > 0 ? DiskClass::AllInsideOrOn : DiskClass::AllStrictlyInside,
                  std::nullopt};
    return tr;
}

DiskVerdict cohn_chain(const ComplexPolynomial& t, const CohnChainOptions& opts) {
    return cohn_chain_trace(t, opts).verdict;
}

CMatrix schur_cohn_block(const ComplexPolynomial& r, int k) {
    const int m = r.degree();
    if (m < 1 || k < 1 || k > m) throw Error("schur_cohn_block: need 1 <= k <= degree");
    CMatrix blk(2 * k, 2 * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i >= j) {
                blk.at(i, j) = r.coeff(m - (i - j));              // conj(B)^T
                blk.at(k + i, j) = std::conj(r.coeff(i - j));     // conj(A)^T
            }
            if (j >= i) {
                blk.at(i, k + j) = r.coeff(j - i);                            // A
                blk.at(k + i, k + j) = std::conj(r.coeff(m - (j - i)));       // B
            }
        }
    }
    return blk;
}

CMatrix schur_complement_matrix(const ComplexPolynomial& r, int k) {
    const int m = r.degree();
    if (m < 1 || k < 1 || k > m) throw Error("schur_complement_matrix: need 1 <= k <= degree");
    CMatrix a(k, k), b(k, k), conj_bt(k, k), conj_at(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (j >= i) {
                a.at(i, j) = r.coeff(j - i);
                b.at(i, j) = std::conj(r.coeff(m - (j - i)));
            }
            if (i >= j) {
                conj_bt.at(i, j) = r.coeff(m - (i - j));
                conj_at.at(i, j) = std::conj(r.coeff(i - j));
            }
        }
    // B is upper triangular with diagonal conj(a_m) != 0.
    CMatrix x = solve_upper_triangular(b, conj_at);
    CMatrix axb = multiply(a, x);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) conj_bt.at(i, j) -= axb.at(i, j);
    return conj_bt;
}

namespace {

double checked_real_minor(Complex det, double imag_rel) {
    if (std::abs(det.imag()) > imag_rel * (1.0 + std::abs(det.real())))
        throw Error("schur_cohn: minor has a non-negligible imaginary part");
    return det.real();
}

}  // namespace

SchurCohnReport schur_cohn_minors(const ComplexPolynomial& r, const SchurCohnOptions& opts) {
    const int m = r.degree();
    if (m < 1) throw Error("schur_cohn_minors: degree must be >= 1");
    SchurCohnReport rep;
    rep.all_positive = true;
    const Complex lead_conj = std::conj(r.leading());
    for (int k = 1; k <= m; ++k) {
        const CMatrix blk = schur_cohn_block(r, k);
        const double scale = blk.max_abs();
        const double tau = opts.positivity_rel * scale;
        rep.threshold = std::max(rep.threshold, tau);
        const Complex det_block = determinant(blk);
        const double mk = checked_real_minor(det_block, opts.imag_rel);

        // Independent route: det(block) = det(S) * det(B), det(B) = conj(a_m)^k.
        const Complex det_schur =
            determinant(schur_complement_matrix(r, k)) * cpow(lead_conj, k);
        if (std::abs(det_schur - det_block) >
            opts.schur_agree_rel * (1.0 + std::max(std::abs(det_schur), std::abs(det_block))))
            throw Error("schur_cohn: block and Schur-complement determinants disagree");

        rep.minors.push_back(mk);
        if (std::abs(mk) <= tau) rep.marginal = true;
        if (!(mk > tau)) {
            rep.all_positive = false;
            if (!rep.first_nonpositive_index) rep.first_nonpositive_index = k;
        }
    }
    return rep;
}

double schur_cohn_minor(const ComplexPolynomial& r, int k, const SchurCohnOptions& opts) {
    return checked_real_minor(determinant(schur_cohn_block(r, k)), opts.imag_rel);
}

DiskVerdict zeros_in_closed_disk(const ComplexPolynomial& p, double tol) {
    if (p.degree() < 1) throw Error("zeros_in_closed_disk: degree must be >= 1");
    // A polynomial with exact zero constant term has roots at the origin;
    // Schur-Cohn positivity still decides the rest, but a zero block minor
    // would mislead, so strip those roots first.
    ComplexPolynomial body = p;
    while (body.degree() >= 1 && body.coeff(0) == Complex(0.0, 0.0)) {
        std::vector<Complex> c(body.coeffs().begin() + 1, body.coeffs().end());
        body = ComplexPolynomial(std::move(c));
    }
    if (body.degree() >= 1) {
        const SchurCohnReport rep = schur_cohn_minors(body);
        if (rep.all_positive && !rep.marginal) return {DiskClass::AllStrictlyInside, std::nullopt};
    }

    RootSet rs;
    try {
        rs = find_roots(p);
    } catch (const NonConvergence&) {
        return {DiskClass::Undecided, std::nullopt};
    }
    double max_mod = 0.0;
    Complex worst(0.0);
    for (Complex r : rs.roots) {
        const double m = std::abs(r);
        if (m > max_mod) {
            max_mod = m;
            worst = r;
        }
    }
    if (max_mod > 1.0 + tol) return {DiskClass::SomeOutside, worst};
    if (max_mod < 1.0 - tol) return {DiskClass::AllStrictlyInside, std::nullopt};
    return {DiskClass::AllInsideOrOn, std::nullopt};
}

}  // namespace hcv
