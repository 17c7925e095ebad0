#include "hcv/roots.hpp"

#include <algorithm>
#include <cmath>

#include "hcv/errors.hpp"

namespace hcv {

namespace {

// p and p' at z for monic coefficient vector (ascending).
void horner2(const std::vector<Complex>& c, Complex z, Complex& val, Complex& der) {
    val = Complex(0.0);
    der = Complex(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        der = der * z + val;
        val = val * z + *it;
    }
}

}  // namespace

RootSet find_roots(const ComplexPolynomial& p, const AberthOptions& opts) {
    if (p.degree() < 1) throw Error("find_roots: degree must be >= 1");

    std::vector<Complex> c = p.coeffs();
    std::vector<Complex> roots;

    // Exact factors of z.
    while (c.size() > 1 && c.front() == Complex(0.0, 0.0)) {
        roots.push_back(Complex(0.0, 0.0));
        c.erase(c.begin());
    }

    const int d = static_cast<int>(c.size()) - 1;
    if (d >= 1) {
        const Complex lead = c.back();
        std::vector<Complex> mc(c.size());
        for (size_t j = 0; j < c.size(); ++j) mc[j] = c[j] / lead;

        double radius = 0.0;
        for (int j = 0; j < d; ++j) radius = std::max(radius, std::abs(mc[static_cast<size_t>(j)]));
        radius += 1.0;

        std::vector<Complex> z(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
            z[static_cast<size_t>(i)] =
                radius * unit_phase(2.0 * kPi * (i + 0.5) / d + 0.4);

        bool converged = false;
        for (int it = 0; it < opts.max_iterations && !converged; ++it) {
            converged = true;
            for (int i = 0; i < d; ++i) {
                Complex val, der;
                horner2(mc, z[static_cast<size_t>(i)], val, der);
                if (val == Complex(0.0)) continue;
                if (der == Complex(0.0)) {
                    // Rare stationary hit; nudge deterministically and retry next sweep.
                    z[static_cast<size_t>(i)] *= Complex(1.0 + 1e-8, 1e-8);
                    converged = false;
                    continue;
                }
                const Complex newton = val / der;
                Complex sum(0.0);
                for (int j = 0; j < d; ++j) {
                    if (j == i) continue;
                    const Complex diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                    if (diff == Complex(0.0)) {
                        sum = Complex(0.0);
                        break;
                    }
                    sum += Complex(1.0) / diff;
                }
                const Complex denom = Complex(1.0) - newton * sum;
                const Complex w = (denom == Complex(0.0)) ? newton : newton / denom;
                z[static_cast<size_t>(i)] -= w;
                if (std::abs(w) >= opts.correction_tol * (1.0 + std::abs(z[static_cast<size_t>(i)])))
                    converged = false;
            }
        }
        if (!converged) throw NonConvergence("find_roots: Aberth iteration cap reached");
        roots.insert(roots.end(), z.begin(), z.end());
    }

    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    double residual = 0.0;
    for (Complex r : roots) residual = std::max(residual, std::abs(poly_eval(p, r)));
    return RootSet{std::move(roots), residual};
}

}  // namespace hcv
