// Hopf cylinders over type-A1/A2 homogeneous real hypersurfaces of CP^n:
// principal-curvature spectra, the CMC biharmonicity criterion, the roots of
// the tan^2(u) quadratic against independent radical expressions, existence
// thresholds in c, and the 3-dimensional cylinder criterion.

#include "biharm/hopf.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace biharm;
using Catch::Approx;

TEST_CASE("A1 spectrum at c = 1, n = 2, u = pi/4") {
    TakagiHypersurface h{TakagiType::A1, 2, 0, 0, M_PI / 4.0, 1.0};
    HopfSpectrum s = spectrum(h);
    REQUIRE(s.dimension == 3);
    REQUIRE(s.eigen.size() == 2);
    // r = 1: cot(pi/4) = 1 with multiplicity 2n-2 = 2, 2cot(pi/2) = 0 simple
    CHECK(s.eigen[0].value == Approx(1.0).margin(1e-14));
    CHECK(s.eigen[0].multiplicity == 2);
    CHECK(s.eigen[1].value == Approx(0.0).margin(1e-14));
    CHECK(s.eigen[1].multiplicity == 1);
    CHECK(s.second_fundamental_norm2 == Approx(2.0).margin(1e-14));
    CHECK(s.mean_curvature == Approx(2.0 / 3.0).margin(1e-14));
}

TEST_CASE("A1 mean curvature vanishes exactly at tan^2 u = 2n - 1") {
    for (int n = 2; n <= 6; ++n) {
        TakagiHypersurface h{TakagiType::A1, n, 0, 0,
                             std::atan(std::sqrt(2.0 * n - 1.0)), 1.0};
        CHECK(std::abs(spectrum(h).mean_curvature) < 1e-12);
    }
}

TEST_CASE("A2 spectrum is balanced for p = q at u = pi/4") {
    TakagiHypersurface h{TakagiType::A2, 3, 1, 1, M_PI / 4.0, 1.0};
    HopfSpectrum s = spectrum(h);
    REQUIRE(s.dimension == 5);
    CHECK(std::abs(s.mean_curvature) < 1e-14);
    // eigenvalues -tan u and cot u coincide in size, opposite sign
    CHECK(s.eigen[0].value == Approx(-s.eigen[1].value).margin(1e-14));
}

TEST_CASE("hypersurface parameter validation") {
    CHECK_THROWS_AS(
        spectrum(TakagiHypersurface{TakagiType::A1, 1, 0, 0, 0.5, 1.0}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        spectrum(TakagiHypersurface{TakagiType::A1, 2, 0, 0, 0.5, -3.0}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        spectrum(TakagiHypersurface{TakagiType::A1, 2, 0, 0, 0.0, 1.0}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        spectrum(TakagiHypersurface{TakagiType::A1, 2, 0, 0, M_PI / 2.0, 1.0}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        spectrum(TakagiHypersurface{TakagiType::A2, 3, 2, 1, 0.5, 1.0}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        spectrum(TakagiHypersurface{TakagiType::A2, 3, 0, 2, 0.5, 1.0}),
        std::invalid_argument);
}

TEST_CASE("A1 roots at c = 1, n = 2 are tan^2 u in {1, 3}") {
    auto roots = solve_biharmonic_u(TakagiType::A1, 1.0, 2);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].tan2_u == Approx(1.0).margin(1e-12));
    CHECK(roots[1].tan2_u == Approx(3.0).margin(1e-12));
    CHECK(roots[0].verdict == HopfVerdict::ProperBiharmonic);
    CHECK(roots[1].verdict == HopfVerdict::Minimal);
    // each root satisfies the CMC criterion by construction
    CHECK(roots[0].cmc_residual < 1e-9);
    CHECK(roots[1].cmc_residual < 1e-9);
    // the proper-biharmonic radius carries ||B||^2 = 2 exactly
    TakagiHypersurface h{TakagiType::A1, 2, 0, 0, roots[0].u, 1.0};
    CHECK(spectrum(h).second_fundamental_norm2 == Approx(2.0).margin(1e-12));
}

TEST_CASE("A1 radical collapses at c = 1 and roots are n +- (n - 1)") {
    for (int n = 2; n <= 8; ++n) {
        auto cf = closed_form_tan2_roots(TakagiType::A1, 1.0, n);
        REQUIRE(cf.size() == 2);
        CHECK(cf[0] == Approx(1.0).margin(1e-12));
        CHECK(cf[1] == Approx(2.0 * n - 1.0).margin(1e-12));
        auto roots = solve_biharmonic_u(TakagiType::A1, 1.0, n);
        REQUIRE(roots.size() == 2);
        // the larger root is the minimal (H = 0) one at c = 1
        CHECK(roots[1].verdict == HopfVerdict::Minimal);
        CHECK(roots[0].verdict == HopfVerdict::ProperBiharmonic);
    }
}

TEST_CASE("A2 at c = 1 always contains the minimal root tan^2 u = 1") {
    for (auto [n, p, q] : {std::tuple{3, 1, 1}, std::tuple{4, 1, 2},
                           std::tuple{5, 3, 1}, std::tuple{7, 2, 4}}) {
        auto roots = solve_biharmonic_u(TakagiType::A2, 1.0, n, p, q);
        bool found_one = false;
        for (const auto& r : roots) {
            if (std::abs(r.tan2_u - 1.0) < 1e-10) {
                found_one = true;
                // t = 1 is minimal iff p = q; otherwise proper
                if (p == q)
                    CHECK(r.verdict == HopfVerdict::Minimal);
                else
                    CHECK(r.verdict == HopfVerdict::ProperBiharmonic);
            }
        }
        CHECK(found_one);
    }
}

TEST_CASE("quadratic and radical roots agree over random parameters") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> cdist(-2.5, 20.0);
    std::uniform_int_distribution<int> ndist(2, 9);
    int compared = 0;
    for (int t = 0; t < 200; ++t) {
        double c = cdist(rng);
        int n = ndist(rng);
        TakagiType type = (t % 2 == 0 || n < 3) ? TakagiType::A1 : TakagiType::A2;
        int p = 0, q = 0;
        if (type == TakagiType::A2) {
            std::uniform_int_distribution<int> pdist(1, n - 2);
            p = pdist(rng);
            q = n - 1 - p;
        }
        TakagiHypersurface h{type, n, p, q, 0.3, c};
        auto quad_roots = biharmonic_quadratic(h).positive_roots();
        auto cf_roots = closed_form_tan2_roots(type, c, n, p, q);
        INFO("type " << to_string(type) << " c = " << c << " n = " << n
                     << " p = " << p << " q = " << q);
        REQUIRE(quad_roots.size() == cf_roots.size());
        for (size_t i = 0; i < quad_roots.size(); ++i) {
            CHECK(std::abs(quad_roots[i] - cf_roots[i])
                  <= 1e-12 * std::max(1.0, std::abs(cf_roots[i])));
            ++compared;
        }
    }
    CHECK(compared > 100);  // the draw actually exercised root-bearing cases
}

TEST_CASE("existence thresholds: closed form matches bisection") {
    // n = 2 reference value (-7 + 8 sqrt(3)) / 13
    CHECK(existence_threshold(TakagiType::A1, 2)
          == Approx((-7.0 + 8.0 * std::sqrt(3.0)) / 13.0).margin(1e-14));
    for (int n = 2; n <= 10; ++n) {
        double thr = existence_threshold(TakagiType::A1, n);
        CHECK(std::isfinite(thr));
        CHECK(thr < 1.0);
        CHECK(thr == Approx(existence_threshold_numeric(TakagiType::A1, n)).margin(1e-9));
        if (n >= 3) {
            for (int p = 1; p <= n - 2; ++p) {
                int q = n - 1 - p;
                double t2 = existence_threshold(TakagiType::A2, n, p, q);
                CHECK(std::isfinite(t2));
                // p = q degenerates to a double root at c = 1 exactly
                if (p == q)
                    CHECK(t2 == Approx(1.0).margin(1e-14));
                else
                    CHECK(t2 < 1.0);
                CHECK(t2 == Approx(existence_threshold_numeric(TakagiType::A2, n, p, q))
                                .margin(1e-9));
            }
        }
    }
}

TEST_CASE("no biharmonic radius when the CMC right-hand side is non-positive") {
    for (int n = 2; n <= 6; ++n) {
        double c = (5.0 - 3.0 * n) / (n + 1.0);  // rhs = 0 exactly
        CHECK(cmc_criterion_rhs(n, c) == Approx(0.0).margin(1e-14));
        for (double cc : {c, c - 0.5, c - 1.5}) {
            if (cc <= -3.0) continue;
            INFO("n = " << n << " c = " << cc);
            CHECK(solve_biharmonic_u(TakagiType::A1, cc, n).empty());
            if (n >= 3)
                CHECK(solve_biharmonic_u(TakagiType::A2, cc, n, 1, n - 2).empty());
        }
    }
}

TEST_CASE("roots coincide with sign changes of the criterion along a u-grid") {
    const double c = 4.0;
    const int n = 3;
    TakagiHypersurface h{TakagiType::A1, n, 0, 0, 0.1, c};
    auto roots = solve_biharmonic_u(TakagiType::A1, c, n);
    const double rhs = cmc_criterion_rhs(n, c);
    int sign_changes = 0;
    double prev = 0.0;
    for (int i = 1; i < 4000; ++i) {
        h.u = i * (M_PI / 2.0) / 4000.0;
        double f = spectrum(h).second_fundamental_norm2 - rhs;
        if (i > 1 && f * prev < 0.0) ++sign_changes;
        prev = f;
    }
    CHECK(sign_changes == static_cast<int>(roots.size()));
    for (const auto& r : roots) {
        h.u = r.u;
        CHECK(std::abs(spectrum(h).second_fundamental_norm2 - rhs) < 1e-9);
    }
}

TEST_CASE("3-dimensional cylinder criterion") {
    Hopf3Result ok = hopf3_criterion(5.0, 2.0);
    CHECK(ok.proper_possible);
    CHECK(ok.proper_biharmonic);
    CHECK(ok.required_kappa2 == Approx(4.0).margin(1e-14));

    Hopf3Result off = hopf3_criterion(5.0, 1.0);
    CHECK(off.proper_possible);
    CHECK_FALSE(off.proper_biharmonic);
    CHECK(off.residual == Approx(3.0).margin(1e-14));

    for (double c : {1.0, 0.0, -2.9}) {
        Hopf3Result low = hopf3_criterion(c, 1.0);
        CHECK_FALSE(low.proper_possible);
        CHECK_FALSE(low.proper_biharmonic);
    }
    CHECK_THROWS_AS(hopf3_criterion(-3.0, 1.0), std::invalid_argument);
}
