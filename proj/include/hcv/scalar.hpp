#ifndef HCV_SCALAR_HPP
#define HCV_SCALAR_HPP

#include <cmath>
#include <complex>

namespace hcv {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

/// e^{i theta} without going through complex exp.
inline Complex unit_phase(double theta) {
    return Complex(std::cos(theta), std::sin(theta));
}

/// x^k for integer k (repeated multiplication; exact sign handling for
/// negative bases, unlike std::pow).
inline double ipow(double x, int k) {
    if (k < 0) return 1.0 / ipow(x, -k);
    double r = 1.0;
    while (k-- > 0) r *= x;
    return r;
}

inline Complex cpow(Complex z, int k) {
    Complex r(1.0, 0.0);
    while (k-- > 0) r *= z;
    return r;
}

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace hcv

#endif
