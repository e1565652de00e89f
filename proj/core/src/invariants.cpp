#include "ruled/invariants.hpp"

#include <cmath>
#include <sstream>

#include "ruled/error.hpp"

namespace ruled {

std::string_view to_string(Pipeline p) {
    return p == Pipeline::Definitional ? "definitional" : "closed-form";
}

std::optional<double> distribution_parameter(const RuledSurfaceSpec& spec, double s) {
    const RulingData r = ruling_at(spec, s);
    const double rate = norm(r.DX);
    if (!(rate > kDegenerateRulingThreshold)) return std::nullopt;
    return det3(r.frame.T, r.X, r.DX) / (rate * rate);
}

double striction_offset(const RuledSurfaceSpec& spec, double s) {
    const RulingData r = ruling_at(spec, s);
    const double rate = norm(r.DX);
    if (!(rate > kDegenerateRulingThreshold)) {
        std::ostringstream os;
        os << "cylindrical ruling at s=" << s << ": |D_T X| = " << rate << ", no striction point";
        throw DegenerateRulingError(os.str());
    }
    return dot(r.base_velocity, r.DX) / (rate * rate);
}

Vec3g striction_point(const RuledSurfaceSpec& spec, double s) {
    const RulingData r = ruling_at(spec, s);
    return r.base - striction_offset(spec, s) * r.X;
}

GaussMean gauss_mean_definitional(const RuledSurfaceSpec& spec, double s, double v) {
    const FundamentalForms ff = fundamental_forms(spec, s, v);
    const double det = ff.E * ff.G - ff.F * ff.F;
    return {(ff.e * ff.g - ff.f * ff.f) / det,
            (ff.E * ff.g + ff.G * ff.e - 2.0 * ff.F * ff.f) / (2.0 * det)};
}

CurveInvariants curve_invariants_definitional(const RuledSurfaceSpec& spec, double s, double v) {
    const FrenetData f = frenet_at(spec.alg, spec.curve, s);
    const Vec3g U = normal(spec, s, v).U;
    auto field = [&spec, v](double x) { return normal(spec, x, v).U; };
    const Vec3g Udot = finite_difference(field, s, 1, FiniteDifference{kFieldStep, Stencil::Richardson},
                                         spec.curve.domain());
    const Vec3g DTU = covariant_derivative(spec.alg, f.T, U, Udot);
    const Vec3g DTT = f.kappa * f.N;
    return {dot(cross(U, f.T), DTT), dot(DTT, U), dot(cross(U, DTU), DTT)};
}

InvariantRecord definitional_record(const RuledSurfaceSpec& spec, double s, double v) {
    InvariantRecord rec;
    rec.s = s;
    rec.v = v;
    rec.pipeline = Pipeline::Definitional;
    rec.lambda = distribution_parameter(spec, s);
    try {
        rec.forms = fundamental_forms(spec, s, v);
        const auto& ff = rec.forms;
        const double det = ff.E * ff.G - ff.F * ff.F;
        rec.K = (ff.e * ff.g - ff.f * ff.f) / det;
        rec.H = (ff.E * ff.g + ff.G * ff.e - 2.0 * ff.F * ff.f) / (2.0 * det);
        const CurveInvariants ci = curve_invariants_definitional(spec, s, v);
        rec.kappa_g = ci.kappa_g;
        rec.kappa_n = ci.kappa_n;
        rec.tau_g = ci.tau_g;
    } catch (const SingularPointError& e) {
        rec.singular = true;
        rec.note = e.what();
        rec.forms = FundamentalForms{kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, Vec3g{kNaN, kNaN, kNaN}, kNaN};
        rec.K = rec.H = rec.kappa_g = rec.kappa_n = rec.tau_g = kNaN;
    }
    return rec;
}

}  // namespace ruled
