#include "ruled/surfaces.hpp"

#include <cmath>
#include <sstream>

#include "ruled/error.hpp"

namespace ruled {

namespace {

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::General, "general"},
    {Family::TangentDevelopable, "tangent-developable"},
    {Family::Normal, "normal"},
    {Family::Binormal, "binormal"},
    {Family::DarbouxDevelopable, "darboux-developable"},
    {Family::Rectifying, "rectifying"},
};

}  // namespace

std::string_view to_string(Family family) {
    for (const auto& [f, name] : kFamilyNames)
        if (f == family) return name;
    return "unknown";
}

Family family_from_string(std::string_view name) {
    for (const auto& [f, n] : kFamilyNames)
        if (n == name) return f;
    std::string msg = "unknown surface family '" + std::string(name) + "'; available:";
    for (const auto& [f, n] : kFamilyNames) msg += " " + std::string(n);
    throw UnknownNameError(msg);
}

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (const auto& [f, n] : kFamilyNames) out.emplace_back(n);
    return out;
}

RuledSurfaceSpec make_general_surface(const LieAlgebra3& alg, const Curve& curve, const Vec3g& X) {
    if (!is_finite(X) || std::fabs(norm(X) - 1.0) > kDirectorUnitTol) {
        std::ostringstream os;
        os << "left-invariant director must be a unit vector, got " << X << " with norm " << norm(X);
        throw InvalidInputError(os.str());
    }
    return {alg, curve, LeftInvariantDirector{X}, Family::General};
}

RuledSurfaceSpec make_family_surface(const LieAlgebra3& alg, const Curve& curve, Family family) {
    const SmoothFn zero = SmoothFn::constant(0.0);
    const SmoothFn one = SmoothFn::constant(1.0);
    switch (family) {
        case Family::General:
            throw InvalidInputError("the general family needs an explicit left-invariant director");
        case Family::TangentDevelopable:
        case Family::DarbouxDevelopable:
            return {alg, curve, FrenetComboDirector{one, zero, zero}, family};
        case Family::Normal:
            return {alg, curve, FrenetComboDirector{zero, one, zero}, family};
        case Family::Binormal:
            return {alg, curve, FrenetComboDirector{zero, zero, one}, family};
        case Family::Rectifying: {
            // Modified Darboux field W = (tau T + kappa B) / sqrt(kappa^2 + tau^2).
            const FrameField field(alg, curve, {});
            const SmoothFn kappa = field.kappa();
            const SmoothFn tau = field.tau();
            const FiniteDifference fd{kFieldStep, Stencil::Richardson};
            auto ct = [kappa, tau](double s) {
                const double k = kappa(s), t = tau(s);
                return t / std::hypot(k, t);
            };
            auto ck = [kappa, tau](double s) {
                const double k = kappa(s), t = tau(s);
                return k / std::hypot(k, t);
            };
            return {alg, curve,
                    FrenetComboDirector{SmoothFn::finite_difference(ct, fd, curve.domain()), zero,
                                        SmoothFn::finite_difference(ck, fd, curve.domain())},
                    family};
        }
    }
    throw InvalidInputError("unhandled surface family");
}

RulingData ruling_at(const RuledSurfaceSpec& spec, double s) {
    RulingData r;
    r.frame = frenet_at(spec.alg, spec.curve, s);
    const FrenetData& f = r.frame;

    if (const auto* li = std::get_if<LeftInvariantDirector>(&spec.director)) {
        r.X = li->X;
        r.DX = 0.5 * bracket(spec.alg, f.T, li->X);
    } else {
        const auto& combo = std::get<FrenetComboDirector>(spec.director);
        const double a = combo.a(s), b = combo.b(s), c = combo.c(s);
        const double unit = a * a + b * b + c * c;
        if (std::fabs(unit - 1.0) > kComboUnitTol) {
            std::ostringstream os;
            os << "Frenet-combination director is not unit at s=" << s << " (a^2+b^2+c^2 = " << unit << ")";
            throw InvalidInputError(os.str());
        }
        const double da = combo.a.deriv(s, 1), db = combo.b.deriv(s, 1), dc = combo.c.deriv(s, 1);
        const double sigma = f.total_torsion();
        r.X = a * f.T + b * f.N + c * f.B;
        // Expansion of D_T (aT + bN + cB) with the Frenet formulas.
        r.DX = (da - b * f.kappa) * f.T + (db + a * f.kappa - c * sigma) * f.N + (dc + b * sigma) * f.B;
    }

    if (spec.family == Family::DarbouxDevelopable) {
        r.base = f.B;
        r.base_velocity = -f.total_torsion() * f.N;
    } else {
        r.base = spec.curve.position(s);
        r.base_velocity = f.T;
    }
    return r;
}

Vec3g evaluate(const RuledSurfaceSpec& spec, double s, double v) {
    if (!spec.curve.domain().contains(s)) {
        throw DomainError("s=" + std::to_string(s) + " outside the curve domain");
    }
    if (spec.family == Family::General) {
        // Needs no frame, so singular and low-curvature points still evaluate.
        return spec.curve.position(s) + v * std::get<LeftInvariantDirector>(spec.director).X;
    }
    const RulingData r = ruling_at(spec, s);
    return r.base + v * r.X;
}

Vec3g tangent_s(const RuledSurfaceSpec& spec, double s, double v) {
    const RulingData r = ruling_at(spec, s);
    return r.base_velocity + v * r.DX;
}

SurfacePartials partials(const RuledSurfaceSpec& spec, double s, double v) {
    const RulingData r = ruling_at(spec, s);
    SurfacePartials p;
    p.phi_s = r.base_velocity + v * r.DX;
    p.phi_v = r.X;
    p.phi_sv = r.DX;
    p.phi_vv = Vec3g{};
    auto field = [&spec, v](double x) { return tangent_s(spec, x, v); };
    const Vec3g rate = finite_difference(field, s, 1, FiniteDifference{kFieldStep, Stencil::Richardson},
                                         spec.curve.domain());
    p.phi_ss = covariant_derivative(spec.alg, r.frame.T, p.phi_s, rate);
    return p;
}

namespace {

SurfaceNormal normal_from(const Vec3g& phi_s, const Vec3g& phi_v, double s, double v) {
    const Vec3g n = cross(phi_s, phi_v);
    const double A = norm(n);
    if (!(A > kSingularThreshold)) {
        std::ostringstream os;
        os << "singular surface point at (s, v) = (" << s << ", " << v << "): |phi_s x phi_v| = " << A;
        throw SingularPointError(os.str());
    }
    return {n / A, A};
}

}  // namespace

SurfaceNormal normal(const RuledSurfaceSpec& spec, double s, double v) {
    const RulingData r = ruling_at(spec, s);
    return normal_from(r.base_velocity + v * r.DX, r.X, s, v);
}

FundamentalForms fundamental_forms(const RuledSurfaceSpec& spec, double s, double v) {
    const SurfacePartials p = partials(spec, s, v);
    const SurfaceNormal n = normal_from(p.phi_s, p.phi_v, s, v);
    FundamentalForms ff;
    ff.E = dot(p.phi_s, p.phi_s);
    ff.F = dot(p.phi_s, p.phi_v);
    ff.G = dot(p.phi_v, p.phi_v);
    ff.e = dot(p.phi_ss, n.U);
    ff.f = dot(p.phi_sv, n.U);
    ff.g = dot(p.phi_vv, n.U);
    ff.U = n.U;
    ff.A = n.A;
    return ff;
}

}  // namespace ruled
