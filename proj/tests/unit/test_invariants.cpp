#include <gtest/gtest.h>

#include <cmath>

#include "ruled/error.hpp"
#include "ruled/invariants.hpp"

using namespace ruled;

namespace {

const Vec3g e3{0, 0, 1};

RuledSurfaceSpec cylinder(const char* alg = "so3") { return make_general_surface(builtin(alg), circle_curve(), e3); }

RuledSurfaceSpec helix_family(Family fam, const char* alg = "so3") {
    return make_family_surface(builtin(alg), helix_curve(0.8, 0.6), fam);
}

RuledSurfaceSpec circle_family(Family fam) { return make_family_surface(builtin("so3"), circle_curve(), fam); }

}  // namespace

TEST(DistributionParameter, Examples) {
    EXPECT_NEAR(*distribution_parameter(cylinder(), 0.3), 2.0, 1e-12);
    EXPECT_NEAR(*distribution_parameter(helix_family(Family::TangentDevelopable), 1.1), 0.0, 1e-14);
    EXPECT_FALSE(distribution_parameter(cylinder("abelian"), 0.3).has_value());
}

TEST(Striction, LeftInvariantDirectorsStayOnBase) {
    const auto spec = cylinder();
    for (double t : {0.0, 1.0, 4.0}) EXPECT_LE(max_abs(striction_point(spec, t) - spec.curve.position(t)), 1e-15);
    const Vec3g X = Vec3g{0.3, -0.5, 0.81} / norm(Vec3g{0.3, -0.5, 0.81});
    const auto h = make_general_surface(builtin("so3"), helix_curve(0.8, 0.6), X);
    EXPECT_LE(std::fabs(striction_offset(h, 0.5)), 1e-15);
}

TEST(Striction, NormalSurfaceOfHelix) {
    // D_T N = -kappa T + sigma B: <T, D_T N>/|D_T N|^2 = -kappa/(kappa^2 + sigma^2) = -0.8/1.85.
    EXPECT_NEAR(striction_offset(helix_family(Family::Normal), 0.9), -0.8 / 1.85, 1e-14);
}

TEST(Striction, CylindricalRulingHasNone) {
    EXPECT_THROW(striction_offset(cylinder("abelian"), 0.0), DegenerateRulingError);
}

TEST(GaussMean, CylinderByHand) {
    // E = 1 + v^2/4, F = 0, G = 1, e = -A, f = 1/(2A), g = 0.
    for (double v : {0.0, 0.5, 1.0, 2.0}) {
        const double A = std::sqrt(1.0 + v * v / 4.0);
        const GaussMean km = gauss_mean_definitional(cylinder(), 1.3, v);
        EXPECT_NEAR(km.K, -1.0 / (4.0 * std::pow(A, 4)), 1e-10) << v;
        EXPECT_NEAR(km.H, -1.0 / (2.0 * A), 1e-9) << v;
    }
    const GaussMean at0 = gauss_mean_definitional(cylinder(), 0.0, 0.0);
    EXPECT_NEAR(at0.K, -0.25, 1e-12);
    EXPECT_NEAR(at0.H, -0.5, 1e-9);
}

TEST(GaussMean, EuclideanCylinder) {
    const GaussMean km = gauss_mean_definitional(cylinder("abelian"), 0.7, 1.2);
    EXPECT_EQ(km.K, 0.0);
    EXPECT_NEAR(std::fabs(km.H), 0.5, 1e-9);
}

TEST(GaussMean, TangentDevelopableFlat) {
    const auto spec = helix_family(Family::TangentDevelopable);
    for (double v : {-1.0, 0.3, 2.0}) EXPECT_NEAR(gauss_mean_definitional(spec, 0.4, v).K, 0.0, 1e-12);
}

TEST(ClosedForm, CircleFamiliesByHand) {
    // kappa = 1, tau = 0, tau_G = 1/2 on the circle in so3.
    EXPECT_NEAR(gauss_mean_closed_form(circle_family(Family::TangentDevelopable), 0.2, 1.0).H, -0.25, 1e-14);
    EXPECT_NEAR(gauss_mean_closed_form(circle_family(Family::DarbouxDevelopable), 0.2, 1.0).H, -1.0, 1e-14);
    EXPECT_NEAR(gauss_mean_closed_form(circle_family(Family::Binormal), 0.2, 1.0).K, -0.16, 1e-14);
    EXPECT_NEAR(gauss_mean_definitional(circle_family(Family::Binormal), 0.2, 1.0).K, -0.16, 1e-9);
}

TEST(ClosedForm, SingularDenominators) {
    EXPECT_THROW(gauss_mean_closed_form(circle_family(Family::TangentDevelopable), 0.0, 0.0), FamilySingularityError);
    EXPECT_THROW(gauss_mean_closed_form(circle_family(Family::DarbouxDevelopable), 0.0, 0.5), FamilySingularityError);
    const InvariantRecord r = closed_form_record(circle_family(Family::TangentDevelopable), 0.0, 0.0);
    EXPECT_TRUE(r.singular);
    EXPECT_NE(r.note.find("v = 0"), std::string::npos);
}

TEST(CurveInvariants, CylinderAtZero) {
    const CurveInvariants c = curve_invariants_definitional(cylinder(), 0.5, 0.0);
    EXPECT_NEAR(c.kappa_g, 0.0, 1e-12);
    EXPECT_NEAR(c.kappa_n, -1.0, 1e-12);
    EXPECT_NEAR(c.tau_g, 0.0, 1e-9);
}

TEST(CurveInvariants, CylinderAwayFromZero) {
    // X = B here, so phi_s = T - (v/2) N and U = -(N + (v/2) T)/A.
    for (double v : {-1.0, 1.0, 2.0}) {
        const double A = std::sqrt(1.0 + v * v / 4.0);
        const CurveInvariants c = curve_invariants_definitional(cylinder(), 0.5, v);
        EXPECT_NEAR(c.kappa_g, 0.0, 1e-12);
        EXPECT_NEAR(c.kappa_n, -1.0 / A, 1e-12);
    }
}

TEST(CurveInvariants, TangentDevelopable) {
    const auto spec = helix_family(Family::TangentDevelopable);
    for (double v : {0.2, 1.5}) {
        const CurveInvariants c = curve_invariants_definitional(spec, 0.3, v);
        EXPECT_NEAR(c.kappa_g, -0.8, 1e-12);
        EXPECT_NEAR(c.kappa_n, 0.0, 1e-12);
        EXPECT_NEAR(c.tau_g, 0.0, 1e-8);
    }
}

TEST(CurveInvariants, NormalSurfaceAsymptotic) {
    const auto spec = helix_family(Family::Normal);
    for (double v : {-1.0, 0.5, 1.9}) EXPECT_NEAR(curve_invariants_definitional(spec, 2.0, v).kappa_n, 0.0, 1e-12);
}

TEST(CurveInvariants, ClosedForms) {
    const auto bin = helix_family(Family::Binormal);
    const double v = 0.9, A = std::sqrt(1.0 + v * v * 1.1 * 1.1);
    const CurveInvariants b = curve_invariants_closed_form(bin, 0.4, v);
    EXPECT_NEAR(b.kappa_g, 0.8 / A, 1e-14);
    EXPECT_NEAR(b.kappa_n, -0.8 / A, 1e-14);

    const CurveInvariants n = curve_invariants_closed_form(helix_family(Family::Normal), 0.4, 1.0 / 0.8);
    EXPECT_NEAR(n.kappa_g, 0.0, 1e-14);
    EXPECT_NEAR(curve_invariants_definitional(helix_family(Family::Normal), 0.4, 1.0 / 0.8).kappa_g, 0.0, 1e-12);

    const LieAlgebra3 so3 = builtin("so3");
    const FrenetData f = frenet_at(so3, helix_curve(0.8, 0.6), 0.4);
    for (double sign : {1.0, -1.0}) {
        const GeneralClosedForm g = general_closed_form(so3, f, sign * f.T, 0.7, 1.0);
        EXPECT_NEAR(g.kappa_g, 0.0, 1e-15);
        EXPECT_NEAR(g.tau_g, 0.0, 1e-15);
    }
}

TEST(CurveInvariants, BinormalBaseCurveIsGeodesic) {
    // phi_s = T - v sigma N, phi_v = B, so U is -(N + v sigma T)/A and U x T is parallel to B.
    const auto spec = helix_family(Family::Binormal);
    for (double v : {-1.0, 0.0, 1.3}) {
        const CurveInvariants c = curve_invariants_definitional(spec, 0.8, v);
        EXPECT_NEAR(c.kappa_g, 0.0, 1e-12);
        EXPECT_NEAR(c.kappa_n, -0.8 / std::sqrt(1.0 + v * v * 1.21), 1e-12);
    }
}

TEST(Grid, RangeValues) {
    EXPECT_EQ((Range{1.0, 1.0, 1}.values()), std::vector<double>{1.0});
    const auto r = Range{0.0, 2.0, 5}.values();
    ASSERT_EQ(r.size(), 5u);
    EXPECT_EQ(r.front(), 0.0);
    EXPECT_EQ(r.back(), 2.0);
    EXPECT_EQ(r[2], 1.0);
    EXPECT_THROW((Range{0.0, 1.0, 0}.values()), InvalidInputError);
}

TEST(Grid, JobsDoNotChangeResults) {
    const auto spec = helix_family(Family::Rectifying);
    const SurfaceGrid g{{0.0, 3.0, 7}, {-1.0, 1.0, 5}};
    const auto a = evaluate_grid(spec, g, Pipeline::Definitional, 1);
    const auto b = evaluate_grid(spec, g, Pipeline::Definitional, 4);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].s, b[i].s);
        EXPECT_EQ(a[i].v, b[i].v);
        EXPECT_EQ(a[i].K, b[i].K);
        EXPECT_EQ(a[i].tau_g, b[i].tau_g);
    }
    EXPECT_EQ(a[6].s, 0.5);
    EXPECT_EQ(a[6].v, -0.5);
}

TEST(Classify, PointTypeTieBreak) {
    EXPECT_EQ(point_type(-1e-9), PointType::Parabolic);
    EXPECT_EQ(point_type(1e-8), PointType::Parabolic);
    EXPECT_EQ(point_type(-2e-8), PointType::Hyperbolic);
    EXPECT_EQ(point_type(0.1), PointType::Elliptic);
}

TEST(Classify, TangentDevelopable) {
    const Classification c = classify(helix_family(Family::TangentDevelopable), {{0.0, 6.0, 9}, {0.1, 2.0, 9}});
    EXPECT_TRUE(c.developable);
    EXPECT_FALSE(c.minimal);
    EXPECT_EQ(c.parabolic, 81u);
    EXPECT_TRUE(c.base_curve.asymptotic);
    EXPECT_TRUE(c.base_curve.principal);
    EXPECT_FALSE(c.base_curve.geodesic);
}

TEST(Classify, Binormal) {
    const Classification c = classify(helix_family(Family::Binormal), {{0.0, 6.0, 9}, {-2.0, 2.0, 9}});
    EXPECT_FALSE(c.developable);
    EXPECT_EQ(c.hyperbolic, 81u);
    EXPECT_FALSE(c.base_curve.asymptotic);
    EXPECT_TRUE(c.base_curve.geodesic);
}

TEST(Classify, Cylinders) {
    const SurfaceGrid g{{0.0, 6.0, 7}, {-1.0, 1.0, 5}};
    const Classification so3 = classify(cylinder(), g);
    EXPECT_FALSE(so3.developable);
    EXPECT_EQ(so3.lambda_state, LambdaState::Regular);
    const Classification ab = classify(cylinder("abelian"), g);
    EXPECT_TRUE(ab.developable);
    EXPECT_EQ(ab.lambda_state, LambdaState::Degenerate);
}

TEST(Classify, AbelianRectifyingHelix) {
    const Classification c = classify(helix_family(Family::Rectifying, "abelian"), {{0.0, 6.0, 9}, {-1.0, 1.0, 5}});
    EXPECT_TRUE(c.developable);
}

TEST(Classify, NormalSurfaceOfHelixIsMinimal) {
    // e = v(v sigma kappa' + sigma'(1 - v kappa))/A vanishes when kappa and tau are constant; g = 0, F = 0.
    const Classification c = classify(helix_family(Family::Normal), {{0.0, 6.0, 9}, {-2.0, 2.0, 9}});
    EXPECT_TRUE(c.minimal);
    EXPECT_EQ(c.minimal_locus, "entire grid");
}

TEST(Classify, GaussCurvatureNonPositive) {
    const SurfaceGrid g{{0.0, 6.0, 9}, {-2.0, 2.0, 9}};
    for (const auto& name : builtin_algebra_names()) {
        for (Family fam : {Family::TangentDevelopable, Family::Normal, Family::Binormal, Family::Rectifying}) {
            const Classification c = classify(helix_family(fam, name.c_str()), g);
            EXPECT_LE(c.max_K, 1e-12) << name << " " << to_string(fam);
            EXPECT_EQ(c.elliptic, 0u);
        }
    }
}
