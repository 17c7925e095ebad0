#include "hcv/harmonic.hpp"

#include <cmath>
#include <utility>

#include "hcv/errors.hpp"

namespace hcv {

Complex RationalDilatation::eval(Complex z) const {
    return cpow(z, prefactor_power) * unit_phase(prefactor_phase) *
           poly_eval(numerator, z) / poly_eval(denominator, z);
}

TruncatedSeries RationalDilatation::to_series(int order) const {
    TruncatedSeries ratio = series_divide(series_from_polynomial(numerator, order),
                                          series_from_polynomial(denominator, order));
    TruncatedSeries out(order);
    const Complex phase = unit_phase(prefactor_phase);
    for (int k = prefactor_power; k <= order; ++k)
        out.set_coeff(k, phase * ratio.coeff(k - prefactor_power));
    return out;
}

RationalDilatation monomial_dilatation(double theta, int n) {
    return RationalDilatation{ComplexPolynomial{Complex(1.0)}, ComplexPolynomial{Complex(1.0)},
                              n, theta};
}

RationalDilatation mobius_dilatation(double a) {
    if (!(a > -1.0 && a < 1.0)) throw Error("mobius_dilatation: a must lie in (-1, 1)");
    return RationalDilatation{ComplexPolynomial{Complex(a), Complex(-1.0)},
                              ComplexPolynomial{Complex(1.0), Complex(-a)}, 0, 0.0};
}

Complex HarmonicMapping::eval(Complex z) const {
    return series_eval(analytic, z) + std::conj(series_eval(coanalytic, z));
}

HarmonicMapping shear(const TruncatedSeries& F, const RationalDilatation& omega) {
    const int N = F.order();
    if (N < 1) throw Error("shear: order must be >= 1");
    if (std::abs(F.coeff(0)) > 1e-12 || std::abs(F.coeff(1) - Complex(1.0)) > 1e-12)
        throw Error("shear: F must have zero constant term and unit linear term");

    TruncatedSeries w = omega.to_series(N - 1);
    if (std::abs(w.coeff(0)) >= 1.0) throw Error("shear: |omega(0)| must be < 1");
    TruncatedSeries one_plus_w = w;
    one_plus_w.set_coeff(0, w.coeff(0) + Complex(1.0));
    if (std::abs(one_plus_w.coeff(0)) <= 1e-12)
        throw DegenerateShear("shear: 1 + omega(0) = 0");

    const TruncatedSeries hp = series_divide(series_derivative(F), one_plus_w);
    const TruncatedSeries gp = series_multiply(w, hp);
    return HarmonicMapping{series_integrate(hp), series_integrate(gp), DilatationKind::Explicit};
}

HarmonicMapping make_f_beta(double beta, double theta, int n, int N) {
    HarmonicMapping m = shear(series_log_ratio_strip(beta, N), monomial_dilatation(theta, n));
    m.kind = DilatationKind::MonomialRotation;
    return m;
}

HarmonicMapping make_F_a(double a, int N) {
    TruncatedSeries half_plane(N);  // z/(1-z)
    for (int k = 1; k <= N; ++k) half_plane.set_coeff(k, Complex(1.0));
    HarmonicMapping m = shear(half_plane, mobius_dilatation(a));
    m.kind = DilatationKind::Mobius;
    return m;
}

HarmonicMapping convolve(const HarmonicMapping& F, const HarmonicMapping& f) {
    if (F.analytic.order() != f.analytic.order())
        throw Error("convolve: truncation orders differ");
    const int N = F.analytic.order();
    TruncatedSeries h(N), g(N);
    for (int k = 0; k <= N; ++k) {
        h.set_coeff(k, F.analytic.coeff(k) * f.analytic.coeff(k));
        g.set_coeff(k, F.coanalytic.coeff(k) * f.coanalytic.coeff(k));
    }
    return HarmonicMapping{h, g, DilatationKind::Explicit};
}

RationalDilatation dilatation_general(const DilatationParams& params) {
    const int n = params.n;
    const double a = params.a;
    const double cb = std::cos(params.beta);
    const Complex u = unit_phase(params.theta);

    const ComplexPolynomial w = ComplexPolynomial::monomial(n, u);
    const ComplexPolynomial z_wprime = ComplexPolynomial::monomial(n, static_cast<double>(n) * u);
    const ComplexPolynomial one{Complex(1.0)};
    const ComplexPolynomial one_plus_w = one + w;

    const ComplexPolynomial A{Complex(a), Complex((1.0 + a) * cb), Complex(1.0)};
    const ComplexPolynomial B{Complex(1.0), Complex(2.0 * cb), Complex(1.0)};
    const ComplexPolynomial C{Complex(1.0), Complex((1.0 + a) * cb), Complex(a)};

    const ComplexPolynomial tail = Complex(1.0 - a) * (z_wprime * B);
    const ComplexPolynomial num = Complex(2.0) * (w * one_plus_w * A) - tail;
    const ComplexPolynomial den = Complex(2.0) * (C * one_plus_w) - tail;
    return RationalDilatation{num, den, 0, 0.0};
}

ComplexPolynomial build_p(int n, double a, double theta) {
    if (n < 1) throw Error("build_p: n must be >= 1");
    if (!(a > -1.0 && a < 1.0)) throw Error("build_p: a must lie in (-1, 1)");
    const Complex e = unit_phase(-theta);
    std::vector<Complex> c(static_cast<size_t>(n) + 3, Complex(0.0));
    c[static_cast<size_t>(n) + 2] += Complex(1.0);
    c[static_cast<size_t>(n)] += Complex(a);
    c[2] += 0.5 * (2.0 + a * n - n) * e;
    c[0] += 0.5 * (2.0 * a + a * n - n) * e;
    return ComplexPolynomial(std::move(c));
}

RationalDilatation convolution_dilatation(int n, double a, double theta) {
    ComplexPolynomial p = build_p(n, a, theta);
    return RationalDilatation{p, reciprocal_conjugate(p, n + 2), n, 2.0 * theta};
}

namespace {

// Nearest exact representative of e^{-i theta} on the branch lattice
// {1, -i, -1, i}; keeps the factorizations clean of trig rounding.
Complex snapped_phase(double theta, double tol, const char* what) {
    const double q = theta / (kPi / 2.0);
    const long m = std::lround(q);
    if (std::abs(theta - m * (kPi / 2.0)) > tol)
        throw BranchMismatch(std::string(what) + ": theta not on the required lattice");
    switch (((m % 4) + 4) % 4) {
        case 0: return Complex(1.0, 0.0);
        case 1: return Complex(0.0, -1.0);
        case 2: return Complex(-1.0, 0.0);
        default: return Complex(0.0, 1.0);
    }
}

ComplexPolynomial build_p_phase(int n, double a, Complex e_minus_itheta) {
    std::vector<Complex> c(static_cast<size_t>(n) + 3, Complex(0.0));
    c[static_cast<size_t>(n) + 2] += Complex(1.0);
    c[static_cast<size_t>(n)] += Complex(a);
    c[2] += 0.5 * (2.0 + a * n - n) * e_minus_itheta;
    c[0] += 0.5 * (2.0 * a + a * n - n) * e_minus_itheta;
    return ComplexPolynomial(std::move(c));
}

}  // namespace

std::vector<ComplexPolynomial> special_case_polys(int n, double a, double theta,
                                                  SpecialBranch branch) {
    constexpr double kThetaTol = 1e-9;
    switch (branch) {
        case SpecialBranch::ThetaOddPi: {
            if (n < 4 || n % 4 != 0)
                throw BranchMismatch("ThetaOddPi: requires n and n/2 even");
            const Complex e = snapped_phase(theta, kThetaTol, "ThetaOddPi");
            if (e != Complex(-1.0, 0.0))
                throw BranchMismatch("ThetaOddPi: requires theta = (2m+1) pi");
            const ComplexPolynomial factor{Complex(1.0), Complex(0.0), Complex(1.0)};
            auto [q, rem] = poly_divmod(build_p_phase(n, a, e), factor);
            if (max_abs_coeff(rem) > 1e-12) throw Error("ThetaOddPi: (z^2+1) does not divide p");
            return {factor, q};
        }
        case SpecialBranch::ThetaEvenPi: {
            if (n < 2 || n % 4 != 2)
                throw BranchMismatch("ThetaEvenPi: requires n even with n/2 odd");
            const Complex e = snapped_phase(theta, kThetaTol, "ThetaEvenPi");
            if (e != Complex(1.0, 0.0))
                throw BranchMismatch("ThetaEvenPi: requires theta = 2m pi");
            const ComplexPolynomial factor{Complex(1.0), Complex(0.0), Complex(1.0)};
            auto [eta, rem] = poly_divmod(build_p_phase(n, a, e), factor);
            if (max_abs_coeff(rem) > 1e-12) throw Error("ThetaEvenPi: (z^2+1) does not divide p");
            return {factor, eta};
        }
        case SpecialBranch::ThetaHalfPiOddN: {
            if (n % 2 != 1) throw BranchMismatch("ThetaHalfPiOddN: requires n odd");
            const Complex e = snapped_phase(theta, kThetaTol, "ThetaHalfPiOddN");
            if (e != Complex(0.0, 1.0) && e != Complex(0.0, -1.0))
                throw BranchMismatch("ThetaHalfPiOddN: requires theta = (2m+1) pi/2");
            // The unimodular root r in {i, -i} satisfies r^n = -e^{-i theta},
            // i.e. r = (-1)^{(n+1)/2} e^{-i theta}.
            const Complex r = (((n + 1) / 2) % 2 == 0) ? e : -e;
            const ComplexPolynomial factor{-r, Complex(1.0)};
            auto [cof, rem] = poly_divmod(build_p_phase(n, a, e), factor);
            if (max_abs_coeff(rem) > 1e-12)
                throw Error("ThetaHalfPiOddN: (z -+ i) does not divide p");
            return {factor, cof};
        }
        case SpecialBranch::ACritical: {
            if (std::abs(a * (n + 2) - n) > 1e-12)
                throw BranchMismatch("ACritical: requires a = n/(n+2)");
            const Complex e = unit_phase(-theta);
            if (n >= 2) {
                // beta(z) = (n+2) z^n + n z^{n-2} + 2 e^{-i theta}; for n = 2
                // the z^0 contributions combine.
                std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex(0.0));
                c[static_cast<size_t>(n)] += Complex(static_cast<double>(n + 2));
                c[static_cast<size_t>(n) - 2] += Complex(static_cast<double>(n));
                c[0] += 2.0 * e;
                return {ComplexPolynomial(std::move(c))};
            }
            // n = 1: p has only a single factor of z; (n+2) p / z.
            return {ComplexPolynomial{Complex(1.0), 2.0 * e, Complex(3.0)}};
        }
    }
    throw BranchMismatch("special_case_polys: unknown branch");
}

}  // namespace hcv
