#include "hcv/maps.hpp"

#include <algorithm>
#include <cmath>

#include "hcv/errors.hpp"

namespace hcv {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGlNode[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                               -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                               0.7966664774136267,  0.9602898564975363};
constexpr double kGlWeight[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                 0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};

}  // namespace

Complex fbeta_hprime(double beta, double theta, int n, Complex z) {
    const Complex quad = Complex(1.0) + 2.0 * std::cos(beta) * z + z * z;
    const Complex omega = unit_phase(theta) * cpow(z, n);
    return Complex(1.0) / (quad * (Complex(1.0) + omega));
}

Complex fbeta_sum(double beta, Complex z) {
    const double s = std::sin(beta);
    if (std::abs(s) < 1e-12) throw DegenerateParameter("fbeta_sum: beta in {0, pi}");
    const Complex num = Complex(1.0) + z * unit_phase(beta);
    const Complex den = Complex(1.0) + z * unit_phase(-beta);
    return std::log(num / den) / (Complex(0.0, 2.0) * s);
}

Complex fbeta_diff_prime(double beta, double theta, int n, Complex z) {
    const Complex omega = unit_phase(theta) * cpow(z, n);
    const Complex quad = Complex(1.0) + 2.0 * std::cos(beta) * z + z * z;
    return (Complex(1.0) - omega) / (quad * (Complex(1.0) + omega));
}

Complex fbeta_diff_at(double beta, double theta, int n, Complex z, int panels) {
    Complex acc(0.0);
    for (int p = 0; p < panels; ++p) {
        const Complex z0 = z * (static_cast<double>(p) / panels);
        const Complex z1 = z * (static_cast<double>(p + 1) / panels);
        const Complex mid = 0.5 * (z0 + z1), half = 0.5 * (z1 - z0);
        for (int q = 0; q < 8; ++q)
            acc += kGlWeight[q] * half * fbeta_diff_prime(beta, theta, n, mid + kGlNode[q] * half);
    }
    return acc;
}

std::vector<Complex> fbeta_diff_circle(double beta, double theta, int n, double r, int samples) {
    if (samples < 4) throw Error("fbeta_diff_circle: too few samples");
    std::vector<Complex> out(static_cast<size_t>(samples));
    Complex y = fbeta_diff_at(beta, theta, n, Complex(r, 0.0));
    const double h = 2.0 * kPi / samples;
    auto deriv = [&](double t) {
        const Complex z = r * unit_phase(t);
        return fbeta_diff_prime(beta, theta, n, z) * Complex(0.0, 1.0) * z;
    };
    // The integrand does not depend on y, so the RK4 step collapses to
    // Simpson's rule per step.
    Complex left = deriv(0.0);
    for (int j = 0; j < samples; ++j) {
        out[static_cast<size_t>(j)] = y;
        const double t = j * h;
        const Complex mid = deriv(t + 0.5 * h);
        const Complex right = deriv(t + h);
        y += (h / 6.0) * (left + 4.0 * mid + right);
        left = right;
    }
    return out;
}

std::vector<Complex> fbeta_diff_ray(double beta, double theta, int n, double angle, double r,
                                    int samples) {
    std::vector<Complex> out(static_cast<size_t>(samples));
    const Complex dir = unit_phase(angle);
    Complex acc(0.0);
    for (int k = 0; k < samples; ++k) {
        const Complex z0 = dir * (r * k / samples);
        const Complex z1 = dir * (r * (k + 1) / samples);
        const Complex mid = 0.5 * (z0 + z1), half = 0.5 * (z1 - z0);
        for (int q = 0; q < 8; ++q)
            acc += kGlWeight[q] * half * fbeta_diff_prime(beta, theta, n, mid + kGlNode[q] * half);
        out[static_cast<size_t>(k)] = acc;
    }
    return out;
}

Complex half_plane_analytic(double a, Complex z) {
    const double c = (1.0 - a) / (2.0 * (1.0 + a));
    const Complex om = Complex(1.0) - z;
    return 0.5 * z / om + c * z / (om * om);
}

Complex half_plane_coanalytic(double a, Complex z) {
    return z / (Complex(1.0) - z) - half_plane_analytic(a, z);
}

ConvBoundary conv_boundary(int n, double theta, double a, double r, int samples) {
    const double beta = kPi / 2.0;
    const double c = (1.0 - a) / (2.0 * (1.0 + a));
    ConvBoundary b;
    b.z.resize(static_cast<size_t>(samples));
    b.phi.resize(static_cast<size_t>(samples));
    b.fmap.resize(static_cast<size_t>(samples));
    const std::vector<Complex> diff = fbeta_diff_circle(beta, theta, n, r, samples);
    for (int j = 0; j < samples; ++j) {
        const Complex z = r * unit_phase(2.0 * kPi * j / samples);
        const Complex sum = fbeta_sum(beta, z);
        const Complex h = 0.5 * (sum + diff[static_cast<size_t>(j)]);
        const Complex g = 0.5 * (sum - diff[static_cast<size_t>(j)]);
        const Complex hp = fbeta_hprime(beta, theta, n, z);
        const Complex gp = unit_phase(theta) * cpow(z, n) * hp;
        const Complex Hh = 0.5 * h + c * z * hp;
        const Complex Gg = 0.5 * g - c * z * gp;
        b.z[static_cast<size_t>(j)] = z;
        b.phi[static_cast<size_t>(j)] = Hh - Gg;
        b.fmap[static_cast<size_t>(j)] = Hh + std::conj(Gg);
    }
    return b;
}

ChdReport chd_crossings(int n, double theta, double a, double r, int samples, int lines) {
    const ConvBoundary b = conv_boundary(n, theta, a, r, samples);
    ChdReport rep;
    double lo = b.phi[0].imag(), hi = lo;
    for (const Complex& w : b.phi) {
        lo = std::min(lo, w.imag());
        hi = std::max(hi, w.imag());
    }
    rep.y_min = lo;
    rep.y_max = hi;
    if (hi <= lo) return rep;
    for (int l = 0; l < lines; ++l) {
        const double y = lo + (l + 0.5) * (hi - lo) / lines;
        int crossings = 0;
        double prev = b.phi[static_cast<size_t>(samples - 1)].imag() - y;
        for (int j = 0; j < samples; ++j) {
            const double cur = b.phi[static_cast<size_t>(j)].imag() - y;
            if ((prev < 0.0 && cur >= 0.0) || (prev >= 0.0 && cur < 0.0)) ++crossings;
            prev = cur;
        }
        rep.max_crossings = std::max(rep.max_crossings, crossings);
    }
    return rep;
}

double max_dilatation_on_grid(const RationalDilatation& omega, int radial, int angular,
                              double r_max) {
    double best = 0.0;
    for (int i = 1; i <= radial; ++i) {
        const double r = r_max * i / radial;
        for (int j = 0; j < angular; ++j) {
            const Complex z = r * unit_phase(2.0 * kPi * j / angular);
            best = std::max(best, std::abs(omega.eval(z)));
        }
    }
    return best;
}

}  // namespace hcv
