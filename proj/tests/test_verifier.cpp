#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "hcv/errors.hpp"
#include "hcv/io.hpp"
#include "hcv/verifier.hpp"

using namespace hcv;

TEST_CASE("L_r") {
    CHECK(std::abs(L_r(5, 0.6, 2) - 0.0144) < 1e-15);
    CHECK(std::abs(L_r(5, 0.6, 3) - 0.00864) < 1e-15);
    // The (2 - n + 2a + an) factor vanishes at the endpoint; exactly when the
    // endpoint is representable, to rounding dust otherwise.
    CHECK(L_r(2, 0.0, 3) == 0.0);
    CHECK(L_r(6, 0.5, 3) == 0.0);
    for (int n = 1; n <= 9; ++n) CHECK(std::abs(L_r(n, (n - 2.0) / (n + 2.0), 3)) < 1e-45);
    // Sign flips below the interval: (2 - n + 2a + an) < 0 there.
    CHECK(L_r(5, 0.3, 1) < 0.0);
    CHECK(L_r(5, 0.5, 1) > 0.0);
}

TEST_CASE("scalar identities at hand-checked points") {
    SUBCASE("(e) at n=5, a=0.6, theta=0") {
        const auto ids = scalar_identities(5, 0.6, 0.0);
        const ScalarIdentity& e = ids[4];
        CHECK(e.name == "e");
        CHECK(std::abs(e.lhs - Complex(0.84)) < 1e-15);
        CHECK(std::abs(e.rhs - 0.84) < 1e-15);
    }
    SUBCASE("all identities collapse to 0 at the endpoint") {
        for (int n : {3, 4, 7}) {
            const auto ids = scalar_identities(n, (n - 2.0) / (n + 2.0), 1.1);
            CHECK(std::abs(ids[1].rhs) < 1e-15);  // (b) carries the (2-n+2a+an) factor
            CHECK(std::abs(ids[1].lhs) < 1e-14);
        }
    }
    SUBCASE("(d) at n=6, a=0.8, any theta") {
        for (double theta : {0.0, 0.7, 2.9}) {
            const auto ids = scalar_identities(6, 0.8, theta);
            const ScalarIdentity& d = ids[3];
            CHECK(d.abs_error < 1e-12);
            CHECK(std::abs(d.rhs - 0.25 * 6.0 * (2.0 - 6.0 + 1.6 + 4.8) * 0.2) < 1e-15);
        }
    }
    SUBCASE("random sampling stays at rounding level") {
        std::mt19937_64 rng(7301);
        std::uniform_real_distribution<double> ua(-0.95, 0.95);
        std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 12);
            for (const ScalarIdentity& id : scalar_identities(n, ua(rng), ut(rng)))
                CHECK(id.abs_error < 1e-12);
        }
    }
}

TEST_CASE("closed_form_minor examples") {
    CHECK(std::abs(closed_form_minor({CaseWhich::Case1, 3}, 5, 0.6, 0.0) - 0.54432) < 1e-12);
    CHECK(std::abs(closed_form_minor({CaseWhich::Case3}, 5, 0.6, 0.0) - L_r(5, 0.6, 6) * 40.0) <
          1e-15);
    CHECK(std::abs(closed_form_minor({CaseWhich::Case5}, 5, 0.6, kPi / 4.0) -
                   8.0 * L_r(5, 0.6, 7)) < 1e-15);
    CHECK_THROWS_AS(closed_form_minor({CaseWhich::Case1, 3}, 6, 0.6, 0.0), BranchMismatch);
    CHECK_THROWS_AS(closed_form_minor({CaseWhich::Case3}, 6, 0.6, 0.0), BranchMismatch);
}

TEST_CASE("numeric minors match the closed forms") {
    SUBCASE("Case 1 instance") {
        const double num = numeric_minor(5, 0.6, 0.9, 3);
        const double cf = closed_form_minor({CaseWhich::Case1, 3}, 5, 0.6, 0.9);
        CHECK(std::abs(num - cf) < 1e-8 * (1.0 + std::abs(cf)));
    }
    SUBCASE("Case 6 instance: n=6, theta=pi/3 gives 16(1-cos)^2 = 4") {
        const double num = numeric_minor(6, 0.8, kPi / 3.0, 8);
        const double cf = L_r(6, 0.8, 8) * 4.0;
        CHECK(std::abs(num - cf) < 1e-8 * (1.0 + std::abs(cf)));
        CHECK(std::abs(closed_form_minor({CaseWhich::Case6}, 6, 0.8, kPi / 3.0) - cf) < 1e-15);
    }
    SUBCASE("minors vanish monotonically as a -> 1 through the (1-a)^k factor") {
        double prev = 1.0;
        for (int k = 1; k <= 6; ++k) {
            const double mk = numeric_minor(4, 0.999, 0.7, k);
            CHECK(mk > 0.0);
            CHECK(mk < prev);
            prev = mk;
        }
        CHECK(prev < 1e-10);
    }
}

TEST_CASE("for k <= n the determinant follows the parity of k, not of n") {
    // M_2 = (1 - |a_0|^2)^2 = L_2 (n+2)^2 for every n; the printed n-parity
    // products therefore hold exactly when k = n mod 2 and swap otherwise.
    std::mt19937_64 rng(7302);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
    for (int n = 3; n <= 11; ++n) {
        const double lo = (n - 2.0) / (n + 2.0);
        std::uniform_real_distribution<double> ua(lo + 1e-3, 0.99);
        for (int trial = 0; trial < 5; ++trial) {
            const double a = ua(rng), theta = ut(rng);
            for (int k = 1; k <= n; ++k) {
                const double num = numeric_minor(n, a, theta, k);
                const double cf = minor_closed_form(n, k, a, theta);
                CHECK(std::abs(num - cf) < 1e-8 * (1.0 + std::abs(cf)));
                const CaseId printed{(n % 2 == 1) ? CaseWhich::Case1 : CaseWhich::Case2, k};
                const double cf_printed = closed_form_minor(printed, n, a, theta);
                if (k % 2 == n % 2)
                    CHECK(std::abs(cf_printed - cf) < 1e-15 * (1.0 + std::abs(cf)));
                else
                    CHECK(cf_printed != cf);
            }
        }
    }
}

TEST_CASE("verify_point branches") {
    SUBCASE("endpoint n=4, a=1/3, theta=2") {
        const CaseVerdict cv = verify_point(4, 1.0 / 3.0, 2.0);
        CHECK(cv.branch == "endpoint");
        CHECK(cv.verdict == PointVerdict::Pass);
        CHECK(cv.roots_max_modulus <= 1.0 + 1e-9);
        CHECK(cv.max_dilatation_sample < 1.0);
    }
    SUBCASE("near-endpoint routing via tolerance") {
        const CaseVerdict cv = verify_point(4, 0.333333333, 1.0);
        CHECK(cv.branch == "endpoint");
    }
    SUBCASE("critical a: n=2, a=1/2, theta=0") {
        const CaseVerdict cv = verify_point(2, 0.5, 0.0);
        CHECK(cv.branch == "a-critical");
        CHECK(cv.verdict == PointVerdict::Pass);
    }
    SUBCASE("exploratory below the interval") {
        const CaseVerdict cv = verify_point(5, 0.3, 0.4);
        CHECK(cv.branch == "exploratory");
        CHECK(cv.verdict == PointVerdict::Exploratory);
    }
    SUBCASE("generic interior point") {
        const CaseVerdict cv = verify_point(5, 0.6, 0.9);
        CHECK(cv.branch == "general");
        CHECK(cv.verdict == PointVerdict::Pass);
        CHECK(cv.rel_error < 1e-8);
        CHECK(cv.chd_max_crossings <= 2);
    }
    SUBCASE("degenerate theta routing") {
        CHECK(verify_point(8, 0.7, kPi).branch == "theta-odd-pi");
        CHECK(verify_point(6, 0.7, 0.0).branch == "theta-even-pi");
        CHECK(verify_point(5, 0.7, kPi / 2.0).branch == "theta-half-pi");
    }
}

TEST_CASE("sweep") {
    SUBCASE("tiny grid passes and stays deterministic") {
        PointOptions opts;
        opts.grid_radial = 16;
        opts.grid_angular = 32;
        opts.chd_samples = 1024;
        std::ostringstream s1, s2;
        {
            SweepCsvWriter w(s1);
            const SweepSummary sum =
                sweep(1, 3, 2, 4, [&](const SweepRecord& r) { w.write(r); }, opts);
            w.finish();
            CHECK(sum.total == 3 * 2 * 4);
            CHECK(sum.passed == sum.total);
            CHECK(sum.undecided == 0);
        }
        {
            SweepCsvWriter w(s2);
            sweep(1, 3, 2, 4, [&](const SweepRecord& r) { w.write(r); }, opts);
            w.finish();
        }
        CHECK(s1.str() == s2.str());
        // Row count = header + product of grid cardinalities.
        int lines = 0;
        for (char c : s1.str())
            if (c == '\n') ++lines;
        CHECK(lines == 1 + 3 * 2 * 4);
    }
    SUBCASE("empty grid emits only the header") {
        std::ostringstream os;
        SweepCsvWriter w(os);
        const SweepSummary sum =
            sweep(3, 2, 4, 4, [&](const SweepRecord& r) { w.write(r); }, {});
        w.finish();
        CHECK(sum.total == 0);
        CHECK(os.str() ==
              "n,a,theta,case_branch,min_minor,max_root_modulus,max_dilatation_sample,"
              "chd_max_crossings,verdict\n");
    }
    SUBCASE("json format carries the same fields") {
        std::ostringstream os;
        SweepJsonWriter w(os);
        PointOptions opts;
        opts.grid_radial = 8;
        opts.grid_angular = 8;
        opts.chd_samples = 512;
        sweep(2, 2, 1, 2, [&](const SweepRecord& r) { w.write(r); }, opts);
        w.finish();
        const std::string out = os.str();
        CHECK(out.find("\"case_branch\"") != std::string::npos);
        CHECK(out.find("\"max_root_modulus\"") != std::string::npos);
        CHECK(out.front() == '[');
    }
}
