#ifndef RULED_FRENET_HPP
#define RULED_FRENET_HPP

#include <memory>
#include <string>
#include <vector>

#include "ruled/algebra.hpp"
#include "ruled/calculus.hpp"
#include "ruled/vec3.hpp"

namespace ruled {

/// Unit-speed curve in chart coordinates, parametrized by arc length.
struct Curve {
    std::string name;
    SmoothVec3Fn position;

    const Domain& domain() const { return position.domain(); }
};

inline constexpr double kMinCurvature = 1e-8;
inline constexpr double kUnitSpeedTol = 1e-6;

/// alpha(t) = (cos t, sin t, 0), analytic derivatives.
Curve circle_curve();
/// alpha(t) = (a cos t, a sin t, b t) with a^2 + b^2 = 1, analytic derivatives.
Curve helix_curve(double a, double b);
/// Rotates a curve by the rotation with the given axis and angle, then
/// translates it. Unit speed is preserved.
Curve rigid_motion(const Curve& curve, const Vec3g& axis, double angle, const Vec3g& offset);
/// Natural cubic spline through points sampled at s0, s0 + ds, ... Derivatives
/// are those of the interpolant.
Curve tabulated_curve(const std::vector<Vec3g>& points, double s0, double ds);
/// Same positions, derivatives replaced by finite differences.
Curve with_finite_differences(const Curve& curve, FiniteDifference fd);

/// Checks |alpha'(s)| = 1 on the given samples; returns the largest deviation.
double unit_speed_deviation(const Curve& curve, const std::vector<double>& samples);

struct FrenetData {
    double s = 0.0;
    Vec3g T, N, B;
    double kappa = 0.0;
    double tau = 0.0;
    double tau_G = 0.0;
    /// |D_T B|, which equals |tau + tau_G| by the Frenet formulas.
    double binormal_rate = 0.0;

    double total_torsion() const { return tau + tau_G; }
};

/// D_T W = Wdot + 1/2 [T, W] along a curve.
Vec3g covariant_derivative(const LieAlgebra3& alg, const Vec3g& T, const Vec3g& W,
                           const Vec3g& Wdot);

/// tau_G = 1/2 <[T, N], B>
double tau_G(const LieAlgebra3& alg, const Vec3g& T, const Vec3g& N, const Vec3g& B);

/// Frenet apparatus at s. B = T x N; tau carries the sign of <D_T N, B> - tau_G.
/// Throws CurvatureDegenerateError when kappa <= kMinCurvature and
/// NotUnitSpeedError when |alpha'| deviates from 1 by more than kUnitSpeedTol.
FrenetData frenet_at(const LieAlgebra3& alg, const Curve& curve, double s);

/// Residuals of the structure equations at s, with every derivative of the
/// frame taken by finite differences of the computed frame field.
struct FrenetResiduals {
    double orthonormality = 0.0;  ///< max of |<T,N>|, |<T,B>|, |<N,B>|, ||T|-1|, ...
    double orientation = 0.0;     ///< |B - T x N|
    double tangent_eq = 0.0;      ///< |D_T T - kappa N|
    double normal_eq = 0.0;       ///< |D_T N + kappa T - (tau + tau_G) B|
    double binormal_eq = 0.0;     ///< |D_T B + (tau + tau_G) N|
    double bracket_TN = 0.0;      ///< |[T,N] - 2 tau_G B|
    double bracket_TB = 0.0;      ///< |[T,B] + 2 tau_G N|
    double binormal_rate = 0.0;   ///< | |D_T B| - |tau + tau_G| |

    double max_structure() const;
};

FrenetResiduals frenet_residuals(const LieAlgebra3& alg, const Curve& curve, double s);

/// Frenet data on a grid plus the derived scalar and frame fields as smooth
/// functions, so that kappa', tau', ... can be taken without analytic input.
/// Immutable after construction.
class FrameField {
public:
    FrameField(const LieAlgebra3& alg, const Curve& curve, std::vector<double> grid);

    const std::vector<FrenetData>& records() const { return records_; }
    const std::vector<double>& grid() const { return grid_; }

    FrenetData at(double s) const;

    SmoothFn kappa() const;
    SmoothFn tau() const;
    SmoothFn tau_G() const;
    SmoothVec3Fn tangent() const;
    SmoothVec3Fn normal() const;
    SmoothVec3Fn binormal() const;

    const LieAlgebra3& algebra() const { return state_->alg; }
    const Curve& curve() const { return state_->curve; }

private:
    struct State {
        LieAlgebra3 alg;
        Curve curve;
    };
    SmoothFn scalar(double FrenetData::*member) const;
    SmoothVec3Fn vector(Vec3g FrenetData::*member) const;

    std::shared_ptr<const State> state_;
    std::vector<double> grid_;
    std::vector<FrenetData> records_;
};

FrameField frame_field(const LieAlgebra3& alg, const Curve& curve, std::vector<double> grid);

}  // namespace ruled

#endif  // RULED_FRENET_HPP
