#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ruled/error.hpp"
#include "ruled/frenet.hpp"

using namespace ruled;

namespace {

Vec3g circle_T(double t) { return {-std::sin(t), std::cos(t), 0.0}; }

}  // namespace

TEST(CovariantDerivative, AbelianIsPlainDerivative) {
    const Vec3g T{0.6, 0.8, 0}, W{1, -2, 3}, Wd{0.1, 0.2, 0.3};
    EXPECT_EQ(covariant_derivative(builtin("abelian"), T, W, Wd), Wd);
}

TEST(CovariantDerivative, LeftInvariantAlongCircle) {
    for (double t : {0.0, 0.9, 2.5}) {
        const Vec3g d = covariant_derivative(builtin("so3"), circle_T(t), Vec3g{0, 0, 1}, Vec3g{});
        EXPECT_LE(max_abs(d - Vec3g{0.5 * std::cos(t), 0.5 * std::sin(t), 0.0}), 1e-15);
    }
}

TEST(CovariantDerivative, OfTangentIsAcceleration) {
    const Vec3g T{0.48, 0.64, 0.6}, Td{-0.3, 0.1, 0.7};
    EXPECT_LE(max_abs(covariant_derivative(builtin("so3"), T, T, Td) - Td), 1e-16);
}

TEST(FrenetAt, CircleInSo3) {
    const Curve c = circle_curve();
    for (double t : {0.0, 1.0, -2.2}) {
        const FrenetData f = frenet_at(builtin("so3"), c, t);
        EXPECT_NEAR(f.kappa, 1.0, 1e-14);
        EXPECT_NEAR(f.tau, 0.0, 1e-14);
        EXPECT_NEAR(f.tau_G, 0.5, 1e-15);
        EXPECT_LE(max_abs(f.N - Vec3g{-std::cos(t), -std::sin(t), 0.0}), 1e-14);
        EXPECT_LE(max_abs(f.B - Vec3g{0, 0, 1}), 1e-14);
    }
}

TEST(FrenetAt, CircleInOtherAlgebras) {
    const FrenetData a = frenet_at(builtin("abelian"), circle_curve(), 0.4);
    EXPECT_NEAR(a.kappa, 1.0, 1e-14);
    EXPECT_NEAR(a.tau, 0.0, 1e-14);
    EXPECT_EQ(a.tau_G, 0.0);
    // [T,N] = 2 T x N = 2B, so tau_G = <2B, B>/2 = 1.
    EXPECT_NEAR(frenet_at(builtin("so3-scaled-2"), circle_curve(), 0.4).tau_G, 1.0, 1e-8);
}

TEST(FrenetAt, HelixCurvatureAndTorsion) {
    // Euclidean helix: kappa = a/(a^2+b^2), torsion = b/(a^2+b^2); in so3 tau is the Euclidean torsion.
    for (double b : {0.6, -0.6}) {
        const FrenetData f = frenet_at(builtin("so3"), helix_curve(0.8, b), 1.3);
        EXPECT_NEAR(f.kappa, 0.8, 1e-14);
        EXPECT_NEAR(f.tau, b, 1e-12);
        EXPECT_NEAR(f.tau_G, 0.5, 1e-15);
        EXPECT_NEAR(f.binormal_rate, std::fabs(b + 0.5), 1e-12);
    }
}

TEST(TauG, Frames) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int i = 0; i < 20; ++i) {
        Vec3g T{g(rng), g(rng), g(rng)};
        T = T / norm(T);
        Vec3g N = cross(T, Vec3g{g(rng), g(rng), g(rng)});
        N = N / norm(N);
        const Vec3g B = cross(T, N);
        EXPECT_NEAR(tau_G(builtin("so3"), T, N, B), 0.5, 1e-14);
        EXPECT_NEAR(tau_G(builtin("so3"), T, N, -1.0 * B), -0.5, 1e-14);
        EXPECT_EQ(tau_G(builtin("abelian"), T, N, B), 0.0);
    }
}

TEST(FrameField, CircleConstantCurvature) {
    std::vector<double> grid;
    for (int i = 0; i < 11; ++i) grid.push_back(0.5 * i);
    const FrameField ff(builtin("so3"), circle_curve(), grid);
    ASSERT_EQ(ff.records().size(), 11u);
    for (const auto& r : ff.records()) EXPECT_NEAR(r.kappa, 1.0, 1e-14);
}

TEST(FrameField, HelixInvariantsConstant) {
    const FrameField ff(builtin("so3"), helix_curve(0.8, 0.6), {-5.0, 0.0, 7.5});
    const FrenetData a = ff.records().front(), b = ff.records().back();
    EXPECT_NEAR(a.kappa, b.kappa, 1e-5);
    EXPECT_NEAR(a.tau, b.tau, 1e-5);
    EXPECT_NEAR(ff.kappa().deriv(2.0, 1), 0.0, 1e-8);
    EXPECT_NEAR(ff.tau().deriv(2.0, 1), 0.0, 1e-8);
    EXPECT_LE(max_abs(ff.tangent()(1.0) - frenet_at(builtin("so3"), helix_curve(0.8, 0.6), 1.0).T), 1e-15);
}

TEST(FrameField, SinglePointAndBadGrid) {
    const FrameField one(builtin("so3"), circle_curve(), {0.3});
    EXPECT_EQ(one.records().size(), 1u);
    EXPECT_THROW(FrameField(builtin("so3"), circle_curve(), {1.0, 1.0}), InvalidInputError);
}

TEST(Curves, HelixParametersMustBeUnitSpeed) {
    EXPECT_THROW(helix_curve(0.8, 0.8), InvalidInputError);
    EXPECT_THROW(frenet_at(builtin("so3"), helix_curve(0.0, 1.0), 0.0), CurvatureDegenerateError);
}

TEST(Curves, NotUnitSpeedRejected) {
    std::vector<Vec3g> pts;
    for (int i = 0; i < 20; ++i) pts.emplace_back(2.0 * std::cos(0.1 * i), 2.0 * std::sin(0.1 * i), 0.0);
    const Curve c = tabulated_curve(pts, 0.0, 0.1);
    EXPECT_THROW(frenet_at(builtin("so3"), c, 1.0), NotUnitSpeedError);
}

TEST(Curves, TabulatedHelix) {
    const double a = 0.8, b = 0.6, ds = 0.02;
    std::vector<Vec3g> pts;
    for (int i = 0; i <= 400; ++i) {
        const double s = -4.0 + ds * i;
        pts.emplace_back(a * std::cos(s), a * std::sin(s), b * s);
    }
    const Curve c = tabulated_curve(pts, -4.0, ds);
    const FrenetData f = frenet_at(builtin("so3"), c, 0.31);
    EXPECT_NEAR(f.kappa, 0.8, 1e-4);
    EXPECT_NEAR(f.tau, 0.6, 1e-3);
    EXPECT_LE(unit_speed_deviation(c, {-1.0, 0.0, 1.0}), 1e-5);
    EXPECT_THROW(frenet_at(builtin("so3"), c, 4.5), DomainError);
}

TEST(Curves, RigidMotionPreservesInvariants) {
    const Curve h = helix_curve(0.6, -0.8);
    const Curve m = rigid_motion(h, Vec3g{1, 2, -0.5}, 1.1, Vec3g{3, -1, 2});
    for (const auto& name : builtin_algebra_names()) {
        const FrenetData a = frenet_at(builtin(name), h, 0.9), b = frenet_at(builtin(name), m, 0.9);
        EXPECT_NEAR(a.kappa, b.kappa, 1e-13) << name;
        EXPECT_NEAR(a.tau, b.tau, 1e-12) << name;
        EXPECT_NEAR(a.tau_G, b.tau_G, 1e-13) << name;
    }
}

TEST(Curves, FiniteDifferenceModeAgrees) {
    const Curve h = helix_curve(0.8, 0.6);
    const Curve fd = with_finite_differences(h, FiniteDifference{std::nullopt, Stencil::Richardson});
    EXPECT_FALSE(fd.position.is_analytic());
    const FrenetData a = frenet_at(builtin("so3"), h, 0.5), b = frenet_at(builtin("so3"), fd, 0.5);
    EXPECT_NEAR(a.kappa, b.kappa, 1e-7);
    EXPECT_NEAR(a.tau, b.tau, 1e-5);
}

TEST(FrenetResiduals, BuiltinCombinations) {
    for (const auto& name : builtin_algebra_names()) {
        for (const Curve& c : {circle_curve(), helix_curve(0.8, 0.6), helix_curve(0.3, -std::sqrt(0.91))}) {
            const FrenetResiduals r = frenet_residuals(builtin(name), c, 0.77);
            EXPECT_LE(r.max_structure(), 1e-4) << name << " " << c.name;
            EXPECT_LE(std::max(r.bracket_TN, r.bracket_TB), 1e-6) << name << " " << c.name;
        }
    }
}
