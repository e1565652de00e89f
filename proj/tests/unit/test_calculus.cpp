#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "ruled/calculus.hpp"

using namespace ruled;

TEST(Deriv, SineAtZeroFiniteDifference) {
    const SmoothFn f = SmoothFn::finite_difference([](double s) { return std::sin(s); });
    EXPECT_NEAR(deriv(f, 0.0, 1), 1.0, 1e-8);
}

TEST(Deriv, ConstantIsFlat) {
    const SmoothFn c = SmoothFn::constant(5.0);
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(c.deriv(0.7, k), 0.0);
}

TEST(Deriv, CubicSecondDerivative) {
    auto cube = [](double s) { return s * s * s; };
    const SmoothFn exact = SmoothFn::analytic(cube, [](double s) { return 3 * s * s; },
                                              [](double s) { return 6 * s; }, [](double) { return 6.0; });
    const SmoothFn fd = SmoothFn::finite_difference(cube);
    const double oracle = exact.deriv(2.0, 2);
    EXPECT_EQ(oracle, 12.0);
    EXPECT_NEAR(fd.deriv(2.0, 2), oracle, 1e-5);
    EXPECT_NEAR(fd.deriv(2.0, 3), 6.0, 1e-4);
}

TEST(Deriv, RichardsonBeatsCentral) {
    auto f = [](double s) { return std::exp(s); };
    const FiniteDifference central{1e-2, Stencil::Central}, rich{1e-2, Stencil::Richardson};
    const double e_c = std::fabs(finite_difference(f, 0.3, 1, central) - std::exp(0.3));
    const double e_r = std::fabs(finite_difference(f, 0.3, 1, rich) - std::exp(0.3));
    EXPECT_LT(e_r, 1e-3 * e_c);
}

TEST(Deriv, DefaultSteps) {
    const double eps = std::numeric_limits<double>::epsilon();
    EXPECT_DOUBLE_EQ(default_step(1, 0.5), std::cbrt(eps));
    EXPECT_DOUBLE_EQ(default_step(2, -4.0), 4.0 * std::pow(eps, 0.25));
    EXPECT_DOUBLE_EQ(default_step(3, 1.0), std::pow(eps, 0.2));
}

TEST(Deriv, StencilOutsideDomainThrows) {
    const SmoothFn f = SmoothFn::finite_difference([](double s) { return std::sqrt(s); }, {}, Domain{0.0, 1.0});
    EXPECT_THROW(f.deriv(0.0, 1), DomainError);
    EXPECT_NO_THROW(f.deriv(0.5, 1));
}

TEST(Deriv, BadOrderThrows) {
    const SmoothFn f = SmoothFn::constant(1.0);
    EXPECT_THROW(f.deriv(0.0, 4), InvalidInputError);
    EXPECT_THROW(finite_difference([](double s) { return s; }, 0.0, 0, FiniteDifference{}), InvalidInputError);
}

TEST(DerivVec, CircleVelocity) {
    const SmoothVec3Fn a = SmoothVec3Fn::finite_difference(
        [](double t) { return Vec3g{std::cos(t), std::sin(t), 0.0}; });
    for (double t : {-1.0, 0.0, 0.4, 2.0}) {
        const Vec3g d = deriv_vec(a, t, 1);
        EXPECT_LE(max_abs(d - Vec3g{-std::sin(t), std::cos(t), 0.0}), 1e-9) << t;
    }
    EXPECT_LE(max_abs(deriv_vec(a, 0.0, 2) - Vec3g{-1.0, 0.0, 0.0}), 1e-6);
}

TEST(DerivVec, ConstantVector) {
    const SmoothVec3Fn c = SmoothVec3Fn::constant(Vec3g{1, 2, 3});
    EXPECT_EQ(deriv_vec(c, 0.3, 1), Vec3g{});
    EXPECT_EQ(c(9.0), (Vec3g{1, 2, 3}));
}

TEST(DerivVec, ComponentsRoundTrip) {
    const SmoothFn x = SmoothFn::analytic([](double s) { return s * s; }, [](double s) { return 2 * s; },
                                          [](double) { return 2.0; }, [](double) { return 0.0; });
    const SmoothVec3Fn v = SmoothVec3Fn::from_components(x, SmoothFn::constant(1.0), x);
    EXPECT_TRUE(v.is_analytic());
    EXPECT_EQ(v.deriv(3.0, 1), (Vec3g{6, 0, 6}));
    EXPECT_EQ(v.component(2)(2.0), 4.0);
}
