// Case analysis for Legendre Frenet curves: the order-4 closed-form profile,
// the constraint systems per case, and the classification of curves built by
// the explicit constructors and the Frenet ODE.

#include "biharm/bitension.hpp"
#include "biharm/classify.hpp"
#include "biharm/constructors.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace biharm;
using Catch::Approx;

namespace {

std::shared_ptr<const SpaceFormModel> shared_model(SpaceFormModel m) {
    return std::make_shared<const SpaceFormModel>(std::move(m));
}

}  // namespace

TEST_CASE("order-4 profile closed forms at c = 3") {
    Order4Profile p = order4_profile(3.0);
    REQUIRE(p.admissible);
    CHECK(p.kappa1 == Approx(std::sqrt(6.0) / 2.0).epsilon(1e-14));
    CHECK(p.kappa2 == Approx(1.0).epsilon(1e-14));
    CHECK(p.kappa3 == Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
    // the two branches carry opposite torsion signs
    CHECK(p.branches[0].tau23 == Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(p.branches[0].tau34 == Approx(-std::sqrt(2.0) / 3.0).epsilon(1e-14));
    CHECK(p.branches[1].tau23 == Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(p.branches[1].tau34 == Approx(std::sqrt(2.0) / 3.0).epsilon(1e-14));
    // alpha0 quadrants
    CHECK(p.branches[0].alpha0 > M_PI / 2);
    CHECK(p.branches[0].alpha0 < M_PI);
    CHECK(p.branches[1].alpha0 > 3 * M_PI / 2);
    CHECK(p.branches[1].alpha0 < 2 * M_PI);

    for (int b = 0; b < 2; ++b) {
        auto cs = case4_constraints(p.c, p.kappa1, p.kappa2, p.kappa3,
                                    p.branches[b].alpha0, 1e-12);
        for (const auto& ct : cs) {
            INFO("branch " << b << ": " << ct.name);
            CHECK(ct.ok);
        }
    }
}

TEST_CASE("order-4 profile admissibility window") {
    for (double c : {2.0, 5.5, 7.0 / 3.0, 5.0}) {
        Order4Profile p = order4_profile(c);
        INFO("c = " << c);
        CHECK_FALSE(p.admissible);
        CHECK_FALSE(p.reason.empty());
    }
    CHECK(order4_profile(2.4).admissible);
    CHECK(order4_profile(4.9).admissible);
}

TEST_CASE("c = 1 catalog curves classify as proper-biharmonic") {
    {
        ClassificationVerdict v = classify(circle_curve(2));
        CHECK(v.case_tag == CaseTag::I);
        CHECK(v.verdict == ClassVerdict::ProperBiharmonic);
        REQUIRE(v.required_ambient_n.has_value());
        CHECK(*v.required_ambient_n == 2);
    }
    {
        ClassificationVerdict v = classify(helix_curve(2, 0.6));
        CHECK(v.case_tag == CaseTag::I);
        CHECK(v.verdict == ClassVerdict::ProperBiharmonic);
    }
}

TEST_CASE("c = 1 circle with wrong curvature is rejected") {
    auto m = shared_model(SpaceFormModel::unit_sphere(2));
    ParamCurve c = integrate_frenet_ode(m, case2_frame(*m, 2), {0.5}, 2.0);
    ClassificationVerdict v = classify(c);
    CHECK(v.case_tag == CaseTag::I);
    CHECK(v.verdict == ClassVerdict::NotProperBiharmonic);
}

TEST_CASE("geodesics are harmonic, never proper-biharmonic") {
    ClassificationVerdict v = classify(legendre_geodesic(2));
    CHECK(v.verdict == ClassVerdict::GeodesicOnly);
}

TEST_CASE("tau12 = 0 circle at c = 5 is proper-biharmonic") {
    auto m = shared_model(SpaceFormModel::deformed_sphere(2, 0.5));  // c = 5
    REQUIRE(m->c() == Approx(5.0).epsilon(1e-14));
    const double k1 = std::sqrt((m->c() + 3.0) / 4.0);
    ParamCurve c = integrate_frenet_ode(m, case2_frame(*m, 2), {k1}, 2.0);
    ClassificationVerdict v = classify(c);
    CHECK(v.case_tag == CaseTag::II);
    CHECK(v.verdict == ClassVerdict::ProperBiharmonic);
    REQUIRE(v.required_ambient_n.has_value());
    CHECK(*v.required_ambient_n == 2);
}

TEST_CASE("tau12 = 0 at c = -3 forces geodesics") {
    auto m = shared_model(SpaceFormModel::flat_sasakian(2));
    REQUIRE(m->c() == Approx(-3.0).epsilon(1e-14));
    // unit contact frame at the origin of the flat model
    FrenetInit init;
    init.p = Vec::Zero(m->ambient_dim());
    Vec t0 = Vec::Zero(m->ambient_dim());
    t0[0] = 2.0;
    Vec e2 = Vec::Zero(m->ambient_dim());
    e2[1] = 2.0;
    init.frame = {t0, e2};
    ParamCurve c = integrate_frenet_ode(m, init, {1.0}, 2.0);
    ClassificationVerdict v = classify(c);
    CHECK(v.case_tag == CaseTag::II);
    CHECK(v.verdict == ClassVerdict::GeodesicOnly);
}

TEST_CASE("E2 parallel to phi T at c = 5: helix with kappa = (2, 1)") {
    auto m = shared_model(SpaceFormModel::deformed_sphere(2, 0.5));  // c = 5
    ParamCurve good = integrate_frenet_ode(m, case3_frame(*m), {2.0, 1.0}, 2.0);
    ClassificationVerdict v = classify(good);
    CHECK(v.case_tag == CaseTag::III);
    CHECK(v.verdict == ClassVerdict::ProperBiharmonic);

    BiharmonicReport rep = biharmonic_verdict(good);
    CHECK(rep.verdict == BihVerdict::ProperBiharmonic);
    CHECK(rep.bitension_direct_max < 1e-4);
    CHECK(rep.bitension_frenet_max < 1e-4);

    ParamCurve bad = integrate_frenet_ode(m, case3_frame(*m), {2.1, 1.0}, 2.0);
    ClassificationVerdict w = classify(bad);
    CHECK(w.case_tag == CaseTag::III);
    CHECK(w.verdict == ClassVerdict::NotProperBiharmonic);
    BiharmonicReport repb = biharmonic_verdict(bad);
    CHECK(repb.verdict == BihVerdict::NotBiharmonic);
}

TEST_CASE("E2 parallel to phi T needs c > 1") {
    auto m = shared_model(SpaceFormModel::deformed_sphere(2, 4.0));  // c = -2
    REQUIRE(m->c() == Approx(-2.0).epsilon(1e-14));
    ParamCurve c = integrate_frenet_ode(m, case3_frame(*m), {1.0, 1.0}, 2.0);
    ClassificationVerdict v = classify(c);
    CHECK(v.case_tag == CaseTag::III);
    CHECK(v.verdict == ClassVerdict::GeodesicOnly);
}

TEST_CASE("order-4 curve at c = 3 is proper-biharmonic with recovered angle") {
    auto m = shared_model(SpaceFormModel::deformed_sphere(2, 4.0 / 6.0));  // c = 3
    REQUIRE(m->c() == Approx(3.0).epsilon(1e-12));
    Order4Profile prof = order4_profile(m->c());
    REQUIRE(prof.admissible);
    for (int b = 0; b < 2; ++b) {
        INFO("branch " << b);
        ParamCurve c = integrate_frenet_ode(m, case4_frame(*m, prof, b),
                                            {prof.kappa1, prof.kappa2, prof.kappa3}, 2.0);
        ClassificationVerdict v = classify(c);
        CHECK(v.case_tag == CaseTag::IV);
        CHECK(v.verdict == ClassVerdict::ProperBiharmonic);
        CHECK(v.alpha0 == Approx(prof.branches[b].alpha0).margin(1e-3));
        BiharmonicReport rep = biharmonic_verdict(c);
        CHECK(rep.verdict == BihVerdict::ProperBiharmonic);
        CHECK(rep.bitension_direct_max < 1e-4);
    }
}

TEST_CASE("non-constant tau12 is flagged as mixed") {
    auto m = shared_model(SpaceFormModel::deformed_sphere(2, 0.5));  // c = 5
    std::mt19937 rng(7);
    ParamCurve c = random_legendre_curve(m, rng, 1.0);
    ClassificationVerdict v = classify(c);
    CHECK(v.case_tag == CaseTag::Mixed);
    CHECK(v.verdict == ClassVerdict::NotProperBiharmonic);
    CHECK_FALSE(v.note.empty());
}

TEST_CASE("verdict rendering mentions case and verdict") {
    ClassificationVerdict v = classify(circle_curve(2));
    std::string s = v.render();
    CHECK(s.find("case I") != std::string::npos);
    CHECK(s.find("proper-biharmonic") != std::string::npos);
}
