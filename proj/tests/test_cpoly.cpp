#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "hcv/complex_poly.hpp"
#include "hcv/errors.hpp"
#include "hcv/roots.hpp"
#include "hcv/series.hpp"

using namespace hcv;

namespace {

std::vector<double> sorted_moduli(const std::vector<Complex>& roots) {
    std::vector<double> m;
    m.reserve(roots.size());
    for (Complex r : roots) m.push_back(std::abs(r));
    std::sort(m.begin(), m.end());
    return m;
}

}  // namespace

TEST_CASE("poly_eval by Horner") {
    const ComplexPolynomial p{Complex(1.0), Complex(0.0), Complex(1.0)};  // z^2 + 1
    CHECK(std::abs(poly_eval(p, Complex(0.0, 1.0))) < 1e-15);

    const ComplexPolynomial q{Complex(0.0), Complex(0.0), Complex(1.0), Complex(0.0),
                              Complex(1.0)};  // z^4 + z^2
    CHECK(std::abs(poly_eval(q, Complex(1.0)) - Complex(2.0)) < 1e-15);

    const ComplexPolynomial c{Complex(1.0)};
    CHECK(std::abs(poly_eval(c, Complex(0.3, 0.4)) - Complex(1.0)) == 0.0);
}

TEST_CASE("zero polynomial is flagged and degree stays total") {
    const ComplexPolynomial z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    const ComplexPolynomial also_zero{Complex(0.0), Complex(0.0)};
    CHECK(also_zero.is_zero());
    CHECK_THROWS_AS(ComplexPolynomial({Complex(std::nan(""), 0.0)}), Error);
}

TEST_CASE("reciprocal_conjugate reverses and conjugates at the formal degree") {
    const ComplexPolynomial p{Complex(0.5), Complex(0.0), Complex(1.0)};
    const ComplexPolynomial ps = reciprocal_conjugate(p, 2);
    CHECK(std::abs(ps.coeff(0) - Complex(1.0)) == 0.0);
    CHECK(std::abs(ps.coeff(2) - Complex(0.5)) == 0.0);

    const ComplexPolynomial mono = ComplexPolynomial::monomial(6, Complex(1.0));
    CHECK(reciprocal_conjugate(mono, 6).degree() == 0);

    // z^4 + z^2 at formal degree 4 -> 1 + z^2.
    const ComplexPolynomial q{Complex(0.0), Complex(0.0), Complex(1.0), Complex(0.0), Complex(1.0)};
    const ComplexPolynomial qs = reciprocal_conjugate(q, 4);
    CHECK(qs.degree() == 2);
    CHECK(std::abs(qs.coeff(0) - Complex(1.0)) == 0.0);
    CHECK(std::abs(qs.coeff(2) - Complex(1.0)) == 0.0);

    CHECK_THROWS_AS(reciprocal_conjugate(q, 3), Error);
}

TEST_CASE("reciprocal_conjugate is an involution at fixed formal degree") {
    std::mt19937_64 rng(7001);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> c;
        const int deg = 1 + static_cast<int>(rng() % 9);
        for (int j = 0; j <= deg; ++j) c.emplace_back(box(rng), box(rng));
        if (c.back() == Complex(0.0)) c.back() = Complex(0.5);
        const ComplexPolynomial p(c);
        const int formal = deg + static_cast<int>(rng() % 3);
        const ComplexPolynomial back = reciprocal_conjugate(reciprocal_conjugate(p, formal), formal);
        CHECK(coeff_distance(back, p) == 0.0);
    }
}

TEST_CASE("poly_divmod recombines") {
    const ComplexPolynomial d{Complex(1.0), Complex(0.0), Complex(1.0)};
    const ComplexPolynomial q{Complex(-0.3), Complex(0.0), Complex(0.7), Complex(1.0)};
    const ComplexPolynomial r{Complex(0.25), Complex(-1.0)};
    const ComplexPolynomial p = q * d + r;
    auto [q2, r2] = poly_divmod(p, d);
    CHECK(coeff_distance(q2, q) < 1e-14);
    CHECK(coeff_distance(r2, r) < 1e-14);
}

TEST_CASE("find_roots on known factorizations") {
    SUBCASE("z^2 + 1") {
        const RootSet rs = find_roots(ComplexPolynomial{Complex(1.0), Complex(0.0), Complex(1.0)});
        REQUIRE(rs.roots.size() == 2);
        CHECK(rs.residual < 1e-12);
        CHECK(std::abs(rs.roots[0] - Complex(0.0, -1.0)) < 1e-12);
        CHECK(std::abs(rs.roots[1] - Complex(0.0, 1.0)) < 1e-12);
    }
    SUBCASE("z^4 + z^2 keeps the exact origin roots") {
        const RootSet rs = find_roots(ComplexPolynomial{Complex(0.0), Complex(0.0), Complex(1.0),
                                                        Complex(0.0), Complex(1.0)});
        REQUIRE(rs.roots.size() == 4);
        const auto m = sorted_moduli(rs.roots);
        CHECK(m[0] == 0.0);
        CHECK(m[1] == 0.0);
        CHECK(std::abs(m[2] - 1.0) < 1e-12);
        CHECK(std::abs(m[3] - 1.0) < 1e-12);
    }
    SUBCASE("(z - 0.5)(z - 2)") {
        const RootSet rs =
            find_roots(ComplexPolynomial{Complex(1.0), Complex(-2.5), Complex(1.0)});
        REQUIRE(rs.roots.size() == 2);
        CHECK(std::abs(rs.roots[0] - Complex(0.5)) < 1e-12);
        CHECK(std::abs(rs.roots[1] - Complex(2.0)) < 1e-12);
    }
}

TEST_CASE("find_roots: Horner residual at each root stays below the reported residual") {
    std::mt19937_64 rng(7002);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const int deg = 2 + static_cast<int>(rng() % 11);
        std::vector<Complex> c;
        for (int j = 0; j <= deg; ++j) c.emplace_back(box(rng), box(rng));
        if (std::abs(c.back()) < 0.1) c.back() = Complex(0.7, 0.1);
        const ComplexPolynomial p(c);
        const RootSet rs = find_roots(p);
        CHECK(rs.residual < 1e-10);
        for (Complex r : rs.roots) CHECK(std::abs(poly_eval(p, r)) <= rs.residual + 1e-300);
    }
}

TEST_CASE("find_roots: root moduli invariant under unimodular coefficient scaling") {
    std::mt19937_64 rng(7003);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 30; ++trial) {
        const int deg = 2 + static_cast<int>(rng() % 11);
        std::vector<Complex> c;
        for (int j = 0; j <= deg; ++j) c.emplace_back(box(rng), box(rng));
        if (std::abs(c.back()) < 0.1) c.back() = Complex(0.6, -0.2);
        const ComplexPolynomial p(c);
        const ComplexPolynomial q = unit_phase(angle(rng)) * p;
        const auto m1 = sorted_moduli(find_roots(p).roots);
        const auto m2 = sorted_moduli(find_roots(q).roots);
        REQUIRE(m1.size() == m2.size());
        for (size_t i = 0; i < m1.size(); ++i) CHECK(std::abs(m1[i] - m2[i]) < 1e-9);
    }
}

TEST_CASE("series_divide basics") {
    SUBCASE("geometric series") {
        TruncatedSeries num(3), den(3);
        num.set_coeff(0, Complex(1.0));
        den.set_coeff(0, Complex(1.0));
        den.set_coeff(1, Complex(1.0));
        const TruncatedSeries q = series_divide(num, den);
        for (int k = 0; k <= 3; ++k)
            CHECK(std::abs(q.coeff(k) - Complex(k % 2 == 0 ? 1.0 : -1.0)) < 1e-15);
    }
    SUBCASE("identity") {
        TruncatedSeries s(4);
        s.set_coeff(0, Complex(2.0, 1.0));
        s.set_coeff(2, Complex(-0.5));
        s.set_coeff(4, Complex(0.25, 0.25));
        const TruncatedSeries q = series_divide(s, s);
        CHECK(std::abs(q.coeff(0) - Complex(1.0)) < 1e-15);
        for (int k = 1; k <= 4; ++k) CHECK(std::abs(q.coeff(k)) < 1e-15);
    }
    SUBCASE("geometric series in z^2") {
        TruncatedSeries num(4), den(4);
        num.set_coeff(0, Complex(1.0));
        den.set_coeff(0, Complex(1.0));
        den.set_coeff(2, Complex(1.0));
        const TruncatedSeries q = series_divide(num, den);
        const double expect[5] = {1.0, 0.0, -1.0, 0.0, 1.0};
        for (int k = 0; k <= 4; ++k) CHECK(std::abs(q.coeff(k) - expect[k]) < 1e-15);
    }
    SUBCASE("zero constant term rejected") {
        TruncatedSeries num(2), den(2);
        num.set_coeff(0, Complex(1.0));
        den.set_coeff(1, Complex(1.0));
        CHECK_THROWS_AS(series_divide(num, den), ZeroConstantTerm);
    }
    SUBCASE("order mismatch rejected") {
        TruncatedSeries num(2), den(3);
        den.set_coeff(0, Complex(1.0));
        CHECK_THROWS_AS(series_divide(num, den), Error);
    }
}

TEST_CASE("series divide then multiply returns the numerator") {
    std::mt19937_64 rng(7004);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const int N = 8 + static_cast<int>(rng() % 25);
        TruncatedSeries num(N), den(N);
        // Divisors shaped like the library's: constant term 1 with a
        // contractive tail, so the quotient stays bounded.
        for (int k = 0; k <= N; ++k) {
            num.set_coeff(k, Complex(box(rng), box(rng)));
            den.set_coeff(k, Complex(box(rng), box(rng)) * (0.5 / N));
        }
        den.set_coeff(0, Complex(1.0 + 0.2 * box(rng)));
        const TruncatedSeries q = series_divide(num, den);
        const TruncatedSeries back = series_multiply(den, q);
        for (int k = 0; k <= N; ++k) CHECK(std::abs(back.coeff(k) - num.coeff(k)) < 1e-13);
    }
}

TEST_CASE("series_log_ratio_strip") {
    SUBCASE("beta = pi/2 gives the arctan series") {
        const TruncatedSeries s = series_log_ratio_strip(kPi / 2.0, 5);
        const double expect[6] = {0.0, 1.0, 0.0, -1.0 / 3.0, 0.0, 1.0 / 5.0};
        for (int k = 0; k <= 5; ++k) CHECK(std::abs(s.coeff(k) - expect[k]) < 1e-14);
    }
    SUBCASE("unit linear coefficient for any beta") {
        for (double beta : {0.3, kPi / 3.0, 1.9, 2.8})
            CHECK(std::abs(series_log_ratio_strip(beta, 4).coeff(1) - Complex(1.0)) < 1e-14);
    }
    SUBCASE("beta = pi/3 quadratic coefficient") {
        const TruncatedSeries s = series_log_ratio_strip(kPi / 3.0, 3);
        CHECK(std::abs(s.coeff(2) - Complex(-0.5)) < 1e-14);
    }
    SUBCASE("closed-form coefficient oracle up to order 64") {
        for (double beta : {kPi / 6.0, kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0}) {
            const int N = 64;
            const TruncatedSeries s = series_log_ratio_strip(beta, N);
            for (int k = 1; k <= N; ++k) {
                const double cf = (k % 2 == 0 ? -1.0 : 1.0) * std::sin(k * beta) /
                                  (k * std::sin(beta));
                CHECK(std::abs(s.coeff(k) - cf) < 1e-12);
            }
        }
    }
    SUBCASE("degenerate beta") {
        CHECK_THROWS_AS(series_log_ratio_strip(0.0, 4), DegenerateParameter);
        CHECK_THROWS_AS(series_log_ratio_strip(kPi, 4), DegenerateParameter);
    }
}
