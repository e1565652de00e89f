#include "ruled/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ruled/error.hpp"

namespace ruled {

Curve circle_curve() {
    auto p = [](double t) { return Vec3g{std::cos(t), std::sin(t), 0.0}; };
    auto d1 = [](double t) { return Vec3g{-std::sin(t), std::cos(t), 0.0}; };
    auto d2 = [](double t) { return Vec3g{-std::cos(t), -std::sin(t), 0.0}; };
    auto d3 = [](double t) { return Vec3g{std::sin(t), -std::cos(t), 0.0}; };
    return {"circle", SmoothVec3Fn::analytic(p, d1, d2, d3)};
}

Curve helix_curve(double a, double b) {
    if (std::fabs(a * a + b * b - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "helix(" << a << ", " << b << ") is not unit speed: a^2 + b^2 must equal 1";
        throw InvalidInputError(os.str());
    }
    auto p = [a, b](double t) { return Vec3g{a * std::cos(t), a * std::sin(t), b * t}; };
    auto d1 = [a, b](double t) { return Vec3g{-a * std::sin(t), a * std::cos(t), b}; };
    auto d2 = [a](double t) { return Vec3g{-a * std::cos(t), -a * std::sin(t), 0.0}; };
    auto d3 = [a](double t) { return Vec3g{a * std::sin(t), -a * std::cos(t), 0.0}; };
    std::ostringstream name;
    name.precision(17);
    name << "helix(" << a << "," << b << ")";
    return {name.str(), SmoothVec3Fn::analytic(p, d1, d2, d3)};
}

namespace {

using Matrix3 = std::array<Vec3g, 3>;  // rows

Vec3g rotate(const Matrix3& m, const Vec3g& x) { return {dot(m[0], x), dot(m[1], x), dot(m[2], x)}; }

Matrix3 rotation(const Vec3g& axis, double angle) {
    const double n = norm(axis);
    if (!(n > 0.0)) throw InvalidInputError("rotation axis must be non-zero");
    const Vec3g k = axis / n;
    const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    return {Vec3g{c + t * k[0] * k[0], t * k[0] * k[1] - s * k[2], t * k[0] * k[2] + s * k[1]},
            Vec3g{t * k[1] * k[0] + s * k[2], c + t * k[1] * k[1], t * k[1] * k[2] - s * k[0]},
            Vec3g{t * k[2] * k[0] - s * k[1], t * k[2] * k[1] + s * k[0], c + t * k[2] * k[2]}};
}

}  // namespace

Curve rigid_motion(const Curve& curve, const Vec3g& axis, double angle, const Vec3g& offset) {
    const Matrix3 r = rotation(axis, angle);
    const SmoothVec3Fn base = curve.position;
    auto p = [base, r, offset](double s) { return rotate(r, base(s)) + offset; };
    if (!base.is_analytic()) {
        return {curve.name + "+motion", SmoothVec3Fn::finite_difference(p, base.fd(), base.domain())};
    }
    auto order = [base, r](int k) { return [base, r, k](double s) { return rotate(r, base.deriv(s, k)); }; };
    return {curve.name + "+motion",
            SmoothVec3Fn::analytic(p, order(1), order(2), order(3), base.domain())};
}

namespace {

/// Natural cubic spline on a uniform grid, one per coordinate.
class UniformSpline {
public:
    UniformSpline(std::vector<double> y, double s0, double ds) : y_(std::move(y)), s0_(s0), h_(ds) {
        const std::size_t n = y_.size();
        m_.assign(n, 0.0);
        if (n < 3) return;
        // Tridiagonal system for interior second derivatives: M_{i-1} + 4 M_i + M_{i+1} = rhs.
        std::vector<double> diag(n, 4.0), rhs(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) rhs[i] = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (h_ * h_);
        for (std::size_t i = 2; i + 1 < n; ++i) {
            const double w = 1.0 / diag[i - 1];
            diag[i] -= w;
            rhs[i] -= w * rhs[i - 1];
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            m_[i] = (rhs[i] - (i + 2 < n ? m_[i + 1] : 0.0)) / diag[i];
            if (i == 1) break;
        }
    }

    /// Value (order 0) or derivative of the given order at s.
    double eval(double s, int order) const {
        const std::size_t n = y_.size();
        double u = (s - s0_) / h_;
        std::size_t i = static_cast<std::size_t>(std::clamp(std::floor(u), 0.0, static_cast<double>(n - 2)));
        const double t = s - (s0_ + static_cast<double>(i) * h_);
        const double a = y_[i];
        const double c = 0.5 * m_[i];
        const double d = (m_[i + 1] - m_[i]) / (6.0 * h_);
        const double b = (y_[i + 1] - y_[i]) / h_ - h_ * (2.0 * m_[i] + m_[i + 1]) / 6.0;
        switch (order) {
            case 0: return a + t * (b + t * (c + t * d));
            case 1: return b + t * (2.0 * c + 3.0 * d * t);
            case 2: return 2.0 * c + 6.0 * d * t;
            default: return 6.0 * d;
        }
    }

private:
    std::vector<double> y_;
    double s0_, h_;
    std::vector<double> m_;
};

}  // namespace

Curve tabulated_curve(const std::vector<Vec3g>& points, double s0, double ds) {
    if (points.size() < 4) throw InvalidInputError("tabulated curve needs at least 4 points");
    if (!(ds > 0.0)) throw InvalidInputError("tabulated curve spacing must be positive");
    std::array<std::shared_ptr<const UniformSpline>, 3> splines;
    for (std::size_t k = 0; k < 3; ++k) {
        std::vector<double> y;
        y.reserve(points.size());
        for (const auto& p : points) y.push_back(p[k]);
        splines[k] = std::make_shared<UniformSpline>(std::move(y), s0, ds);
    }
    const Domain domain{s0, s0 + ds * static_cast<double>(points.size() - 1)};
    auto order = [splines](int k) {
        return [splines, k](double s) {
            return Vec3g{splines[0]->eval(s, k), splines[1]->eval(s, k), splines[2]->eval(s, k)};
        };
    };
    return {"tabulated", SmoothVec3Fn::analytic(order(0), order(1), order(2), order(3), domain)};
}

Curve with_finite_differences(const Curve& curve, FiniteDifference fd) {
    const SmoothVec3Fn base = curve.position;
    return {curve.name, SmoothVec3Fn::finite_difference([base](double s) { return base(s); }, fd,
                                                        base.domain())};
}

double unit_speed_deviation(const Curve& curve, const std::vector<double>& samples) {
    double worst = 0.0;
    for (double s : samples) worst = std::fmax(worst, std::fabs(norm(curve.position.deriv(s, 1)) - 1.0));
    return worst;
}

Vec3g covariant_derivative(const LieAlgebra3& alg, const Vec3g& T, const Vec3g& W,
                           const Vec3g& Wdot) {
    return Wdot + 0.5 * bracket(alg, T, W);
}

double tau_G(const LieAlgebra3& alg, const Vec3g& T, const Vec3g& N, const Vec3g& B) {
    return 0.5 * dot(bracket(alg, T, N), B);
}

namespace {

struct TangentAndNormal {
    Vec3g T, Tdot, N;
    double kappa;
};

TangentAndNormal tangent_and_normal(const Curve& curve, double s) {
    const Vec3g velocity = curve.position.deriv(s, 1);
    const double speed = norm(velocity);
    if (std::fabs(speed - 1.0) > kUnitSpeedTol) {
        std::ostringstream os;
        os << "curve '" << curve.name << "' is not unit speed at s=" << s << " (|alpha'| = " << speed << ")";
        throw NotUnitSpeedError(os.str());
    }
    const Vec3g T = velocity / speed;
    const Vec3g Tdot = curve.position.deriv(s, 2);
    const double kappa = norm(Tdot);
    if (!(kappa > kMinCurvature)) {
        std::ostringstream os;
        os << "curvature of '" << curve.name << "' vanishes at s=" << s << " (kappa = " << kappa << ")";
        throw CurvatureDegenerateError(os.str());
    }
    Vec3g n = Tdot - dot(Tdot, T) * T;
    return {T, Tdot, n / norm(n), kappa};
}

Vec3g normal_rate(const Curve& curve, double s, const TangentAndNormal& tn) {
    if (curve.position.is_analytic()) {
        // d/ds (alpha'' / |alpha''|)
        const Vec3g third = curve.position.deriv(s, 3);
        return (third - dot(third, tn.N) * tn.N) / tn.kappa;
    }
    auto field = [&curve](double x) { return tangent_and_normal(curve, x).N; };
    return finite_difference(field, s, 1, FiniteDifference{kFieldStep, Stencil::Richardson},
                             curve.domain());
}

}  // namespace

FrenetData frenet_at(const LieAlgebra3& alg, const Curve& curve, double s) {
    const auto tn = tangent_and_normal(curve, s);
    FrenetData f;
    f.s = s;
    f.T = tn.T;
    f.N = tn.N;
    f.B = cross(tn.T, tn.N);
    f.kappa = tn.kappa;
    f.tau_G = tau_G(alg, f.T, f.N, f.B);

    const Vec3g Ndot = normal_rate(curve, s, tn);
    const Vec3g DTN = covariant_derivative(alg, f.T, f.N, Ndot);
    f.tau = dot(DTN, f.B) - f.tau_G;

    // B' = T' x N + T x N' and T' is parallel to N.
    const Vec3g DTB = covariant_derivative(alg, f.T, f.B, cross(f.T, Ndot));
    f.binormal_rate = norm(DTB);
    return f;
}

double FrenetResiduals::max_structure() const {
    return std::max({tangent_eq, normal_eq, binormal_eq});
}

FrenetResiduals frenet_residuals(const LieAlgebra3& alg, const Curve& curve, double s) {
    const FrenetData f = frenet_at(alg, curve, s);
    const FiniteDifference fd{kFieldStep, Stencil::Richardson};
    auto frame_rate = [&](Vec3g FrenetData::*member) {
        auto field = [&](double x) { return frenet_at(alg, curve, x).*member; };
        return finite_difference(field, s, 1, fd, curve.domain());
    };
    const Vec3g DTT = covariant_derivative(alg, f.T, f.T, frame_rate(&FrenetData::T));
    const Vec3g DTN = covariant_derivative(alg, f.T, f.N, frame_rate(&FrenetData::N));
    const Vec3g DTB = covariant_derivative(alg, f.T, f.B, frame_rate(&FrenetData::B));
    const double sigma = f.total_torsion();

    FrenetResiduals r;
    r.orthonormality = std::max({std::fabs(dot(f.T, f.N)), std::fabs(dot(f.T, f.B)),
                                 std::fabs(dot(f.N, f.B)), std::fabs(norm(f.T) - 1.0),
                                 std::fabs(norm(f.N) - 1.0), std::fabs(norm(f.B) - 1.0)});
    r.orientation = norm(f.B - cross(f.T, f.N));
    r.tangent_eq = norm(DTT - f.kappa * f.N);
    r.normal_eq = norm(DTN + f.kappa * f.T - sigma * f.B);
    r.binormal_eq = norm(DTB + sigma * f.N);
    r.bracket_TN = norm(bracket(alg, f.T, f.N) - 2.0 * f.tau_G * f.B);
    r.bracket_TB = norm(bracket(alg, f.T, f.B) + 2.0 * f.tau_G * f.N);
    r.binormal_rate = std::fabs(norm(DTB) - std::fabs(sigma));
    return r;
}

FrameField::FrameField(const LieAlgebra3& alg, const Curve& curve, std::vector<double> grid)
    : state_(std::make_shared<const State>(State{alg, curve})), grid_(std::move(grid)) {
    for (std::size_t i = 1; i < grid_.size(); ++i) {
        if (!(grid_[i] > grid_[i - 1])) throw InvalidInputError("frame grid must be strictly increasing");
    }
    records_.reserve(grid_.size());
    for (double s : grid_) {
        if (!curve.domain().contains(s)) {
            throw DomainError("frame grid point s=" + std::to_string(s) + " outside the curve domain");
        }
        records_.push_back(frenet_at(alg, curve, s));
    }
}

FrenetData FrameField::at(double s) const { return frenet_at(state_->alg, state_->curve, s); }

SmoothFn FrameField::scalar(double FrenetData::*member) const {
    auto state = state_;
    return SmoothFn::finite_difference(
        [state, member](double s) { return frenet_at(state->alg, state->curve, s).*member; },
        FiniteDifference{kFieldStep, Stencil::Richardson}, state->curve.domain());
}

SmoothVec3Fn FrameField::vector(Vec3g FrenetData::*member) const {
    auto state = state_;
    return SmoothVec3Fn::finite_difference(
        [state, member](double s) { return frenet_at(state->alg, state->curve, s).*member; },
        FiniteDifference{kFieldStep, Stencil::Richardson}, state->curve.domain());
}

SmoothFn FrameField::kappa() const { return scalar(&FrenetData::kappa); }
SmoothFn FrameField::tau() const { return scalar(&FrenetData::tau); }
SmoothFn FrameField::tau_G() const { return scalar(&FrenetData::tau_G); }
SmoothVec3Fn FrameField::tangent() const { return vector(&FrenetData::T); }
SmoothVec3Fn FrameField::normal() const { return vector(&FrenetData::N); }
SmoothVec3Fn FrameField::binormal() const { return vector(&FrenetData::B); }

FrameField frame_field(const LieAlgebra3& alg, const Curve& curve, std::vector<double> grid) {
    return FrameField(alg, curve, std::move(grid));
}

}  // namespace ruled
