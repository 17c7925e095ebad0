#ifndef HCV_MAPS_HPP
#define HCV_MAPS_HPP

#include <vector>

#include "hcv/harmonic.hpp"
#include "hcv/scalar.hpp"

namespace hcv {

// Closed-form evaluation of the mappings on paths in the disk.  Series
// truncation is never used here: the strip-shear difference h - g is
// obtained by integrating its closed-form derivative along paths, so render
// and sampling fidelity is limited only by quadrature step, not truncation.

/// h'(z) of f_beta with omega = e^{i theta} z^n:
///   1 / ((1 + 2 z cos beta + z^2)(1 + e^{i theta} z^n)).
Complex fbeta_hprime(double beta, double theta, int n, Complex z);

/// h + g of f_beta (closed form, principal logs).
Complex fbeta_sum(double beta, Complex z);

/// (1 - omega) h', the derivative of h - g.
Complex fbeta_diff_prime(double beta, double theta, int n, Complex z);

/// (h - g)(z) by composite Gauss-Legendre quadrature along [0, z].
Complex fbeta_diff_at(double beta, double theta, int n, Complex z, int panels = 32);

/// (h - g) at the points r e^{2 pi i j / samples}, j = 0..samples-1, by RK4
/// integration around the circle from an initial segment integral.
std::vector<Complex> fbeta_diff_circle(double beta, double theta, int n, double r, int samples);

/// (h - g) at the points (r k / samples) e^{i angle}, k = 1..samples, by
/// cumulative quadrature along the ray.
std::vector<Complex> fbeta_diff_ray(double beta, double theta, int n, double angle, double r,
                                    int samples);

/// Analytic and co-analytic parts of the half-plane map F_a (closed forms):
///   H_a = z/(2(1-z)) + c z/(1-z)^2,  G_a = z/(1-z) - H_a,
/// with c = (1-a)/(2(1+a)).
Complex half_plane_analytic(double a, Complex z);
Complex half_plane_coanalytic(double a, Complex z);

/**
 * Boundary samples of the convolution F_a * f_{pi/2} on |z| = r:
 *   phi  = H*h - G*g = (h-g)/2 + c z/(1+z^2)   (the shear criterion object)
 *   fmap = H*h + conj(G*g)                      (the mapped curve itself)
 * where H*h = h/2 + c z h' and G*g = g/2 - c z g'.
 */
struct ConvBoundary {
    std::vector<Complex> z;
    std::vector<Complex> phi;
    std::vector<Complex> fmap;
};
ConvBoundary conv_boundary(int n, double theta, double a, double r, int samples);

struct ChdReport {
    int max_crossings = 0;
    double y_min = 0.0, y_max = 0.0;
};

/// Trace phi on |z| = r and count crossings with `lines` horizontal lines
/// spread over the image's vertical extent; convexity in the direction of
/// the real axis requires at most 2 each.
ChdReport chd_crossings(int n, double theta, double a, double r = 0.99, int samples = 4096,
                        int lines = 64);

/// Max of |omega~| over a radial-angular grid, r <= r_max.
double max_dilatation_on_grid(const RationalDilatation& omega, int radial, int angular,
                              double r_max);

}  // namespace hcv

#endif
