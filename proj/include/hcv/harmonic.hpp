#ifndef HCV_HARMONIC_HPP
#define HCV_HARMONIC_HPP

#include <vector>

#include "hcv/complex_poly.hpp"
#include "hcv/series.hpp"

namespace hcv {

struct DilatationParams {
    int n = 1;          // power of the monomial dilatation e^{i theta} z^n
    double theta = 0.0; // its rotation, radians
    double a = 0.0;     // Moebius parameter of the half-plane map, in (-1, 1)
    double beta = kPi / 2;  // strip parameter, in (0, pi)
};

enum class DilatationKind { MonomialRotation, Mobius, Explicit };

/**
 * omega(z) = z^power e^{i phase} num(z)/den(z) with den(0) != 0.
 */
struct RationalDilatation {
    ComplexPolynomial numerator;
    ComplexPolynomial denominator;
    int prefactor_power = 0;
    double prefactor_phase = 0.0;

    Complex eval(Complex z) const;
    TruncatedSeries to_series(int order) const;
};

RationalDilatation monomial_dilatation(double theta, int n);  // e^{i theta} z^n
RationalDilatation mobius_dilatation(double a);               // (a - z)/(1 - a z)

/**
 * Harmonic mapping h + conj(g) as a pair of truncated series.  Both parts
 * vanish at 0; b_1 = coefficient of z in g is tracked explicitly because
 * the half-plane maps F_a carry b_1 = a/(1+a) != 0.
 */
struct HarmonicMapping {
    TruncatedSeries analytic;    // h
    TruncatedSeries coanalytic;  // g
    DilatationKind kind = DilatationKind::Explicit;

    Complex b1() const { return coanalytic.coeff(1); }
    Complex eval(Complex z) const;
};

/// Shear construction: h + g = F, g' = omega h', via h' = F'/(1 + omega).
HarmonicMapping shear(const TruncatedSeries& F, const RationalDilatation& omega);

/// Vertical strip mapping sheared with omega = e^{i theta} z^n.
HarmonicMapping make_f_beta(double beta, double theta, int n, int N);

/// Half-plane mapping: shear of z/(1-z) with omega_a = (a - z)/(1 - a z).
HarmonicMapping make_F_a(double a, int N);

/// Hadamard (coefficient-wise) product on analytic and co-analytic parts.
HarmonicMapping convolve(const HarmonicMapping& F, const HarmonicMapping& f);

/**
 * Dilatation of (half-plane map) * (strip map shear) for general beta, as a
 * cleared rational pair in z with omega = e^{i theta} z^n substituted:
 *   num = 2 w (1+w)(a + a z cos b + z cos b + z^2) - z w' (1-a)(1 + 2 z cos b + z^2)
 *   den = 2 (1 + z cos b + a z cos b + a z^2)(1+w) - z w' (1-a)(1 + 2 z cos b + z^2).
 */
RationalDilatation dilatation_general(const DilatationParams& params);

/**
 * The critical polynomial
 *   p(z) = z^{n+2} + a z^n + (1/2)(2+an-n) e^{-i theta} z^2
 *        + (1/2)(2a+an-n) e^{-i theta};
 * for n = 2 the two z^2 contributions combine.
 */
ComplexPolynomial build_p(int n, double a, double theta);

/// beta = pi/2 convolution dilatation z^n e^{2 i theta} p/p*.
RationalDilatation convolution_dilatation(int n, double a, double theta);

/**
 * Degenerate parameter branches.  Each returns a factor list whose product
 * reproduces p (for the theta branches) or the reduced dilatation numerator
 * (for the critical a): see each case.
 */
enum class SpecialBranch {
    ThetaOddPi,      // theta = (2m+1)pi, n = 0 mod 4:  p = (z^2+1) q
    ThetaEvenPi,     // theta = 2m pi,    n = 2 mod 4:  p = (z^2+1) eta
    ThetaHalfPiOddN, // theta = (2m+1)pi/2, n odd:      p = (z -+ i) zeta/xi
    ACritical        // a = n/(n+2):  dilatation numerator reduces to beta(z)
};

std::vector<ComplexPolynomial> special_case_polys(int n, double a, double theta,
                                                  SpecialBranch branch);

}  // namespace hcv

#endif
