#include <cmath>
#include <sstream>

#include "ruled/error.hpp"
#include "ruled/invariants.hpp"

// Closed-form invariants, one block per surface family. Nothing here calls
// into the definitional pipeline.

namespace ruled {

namespace {

[[noreturn]] void family_singularity(Family family, const std::string& what, double s, double v) {
    std::ostringstream os;
    os << to_string(family) << " closed form is singular at (s, v) = (" << s << ", " << v << "): " << what;
    throw FamilySingularityError(os.str());
}

constexpr double kDenominatorFloor = 1e-12;

struct ClosedValues {
    std::optional<double> lambda;
    double K = kNaN, H = kNaN, kappa_g = kNaN, kappa_n = kNaN, tau_g = kNaN;
    FundamentalForms forms{kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, Vec3g{kNaN, kNaN, kNaN}, kNaN};
};

const FiniteDifference kFieldFd{kFieldStep, Stencil::Richardson};

template <class F>
double rate(const F& f, double s, const Domain& domain, int order = 1) {
    return finite_difference(f, s, order, kFieldFd, domain);
}

// -- left-invariant director ------------------------------------------------

ClosedValues general_values(const RuledSurfaceSpec& spec, double s, double v) {
    const FrenetData f = frenet_at(spec.alg, spec.curve, s);
    const Vec3g X = std::get<LeftInvariantDirector>(spec.director).X;
    const Vec3g TX = bracket(spec.alg, f.T, X);
    const double TdotX = dot(f.T, X);
    const double det = 1.0 + 0.25 * v * v * dot(TX, TX) - TdotX * TdotX;
    if (!(det > kSingularThreshold * kSingularThreshold)) {
        family_singularity(spec.family, "A = |phi_s x phi_v| vanishes", s, v);
    }
    const GeneralClosedForm g = general_closed_form(spec.alg, f, X, v, std::sqrt(det));
    ClosedValues out;
    out.lambda = g.lambda;
    out.K = g.K;
    out.H = g.H;
    out.kappa_g = g.kappa_g;
    out.kappa_n = g.kappa_n;
    out.tau_g = g.tau_g;
    out.forms.E = g.E;
    out.forms.F = g.F;
    out.forms.G = g.G;
    out.forms.e = g.e;
    out.forms.f = g.f;
    out.forms.g = 0.0;
    out.forms.A = std::sqrt(det);
    return out;
}

// -- Frenet families ---------------------------------------------------------

ClosedValues tangent_developable_values(const FrenetData& f, double s, double v) {
    const double sigma = f.total_torsion();
    ClosedValues out;
    out.lambda = 0.0;
    out.K = 0.0;
    out.kappa_g = -f.kappa;
    out.kappa_n = 0.0;
    out.tau_g = 0.0;
    out.forms.E = 1.0 + v * v * f.kappa * f.kappa;
    out.forms.F = 1.0;
    out.forms.G = 1.0;
    out.forms.e = -f.kappa * sigma;
    out.forms.f = 0.0;
    out.forms.g = 0.0;
    if (std::fabs(v) < kDenominatorFloor) family_singularity(Family::TangentDevelopable, "v = 0 in H", s, v);
    out.H = -sigma / (2.0 * v * v * f.kappa);
    return out;
}

ClosedValues normal_values(const RuledSurfaceSpec& spec, const FrenetData& f, double s, double v) {
    const auto& alg = spec.alg;
    const auto& curve = spec.curve;
    const double kappa = f.kappa, sigma = f.total_torsion();
    const double A = std::sqrt(v * v * sigma * sigma + (1.0 - v * kappa) * (1.0 - v * kappa));
    if (!(A > kSingularThreshold)) family_singularity(Family::Normal, "A vanishes", s, v);
    const double dkappa = rate([&](double x) { return frenet_at(alg, curve, x).kappa; }, s, curve.domain());

    auto p = [&](double x) {
        const FrenetData g = frenet_at(alg, curve, x);
        const double sg = g.total_torsion();
        return v * sg / std::sqrt(v * v * sg * sg + (1.0 - v * g.kappa) * (1.0 - v * g.kappa));
    };
    auto q = [&](double x) {
        const FrenetData g = frenet_at(alg, curve, x);
        const double sg = g.total_torsion();
        return (1.0 - v * g.kappa) / std::sqrt(v * v * sg * sg + (1.0 - v * g.kappa) * (1.0 - v * g.kappa));
    };
    const double pv = v * sigma / A, qv = (1.0 - v * kappa) / A;
    const double dp = rate(p, s, curve.domain()), dq = rate(q, s, curve.domain());

    ClosedValues out;
    const double lam_den = kappa * kappa + sigma * sigma;
    out.lambda = sigma / lam_den;
    out.K = -std::pow(sigma / (A * A), 2);
    out.H = -v * sigma * (1.0 - v * kappa + v * dkappa) / (2.0 * A * A * A);
    out.kappa_g = kappa * (1.0 - v * kappa) / A;
    out.kappa_n = 0.0;
    out.tau_g = kappa * (pv * dq - qv * dp);
    out.forms.E = A * A;
    out.forms.F = 0.0;
    out.forms.G = 1.0;
    out.forms.e = v * sigma * (1.0 - v * kappa + v * dkappa) / A;
    out.forms.f = sigma / A;
    out.forms.g = 0.0;
    out.forms.A = A;
    return out;
}

ClosedValues binormal_values(const RuledSurfaceSpec& spec, const FrenetData& f, double s, double v) {
    const auto& alg = spec.alg;
    const auto& curve = spec.curve;
    const double kappa = f.kappa, sigma = f.total_torsion();
    const double A = std::sqrt(1.0 + v * v * sigma * sigma);
    const double dtau = rate([&](double x) { return frenet_at(alg, curve, x).tau; }, s, curve.domain());

    ClosedValues out;
    if (std::fabs(sigma) > kDenominatorFloor) out.lambda = 1.0 / sigma;
    const double numer = -v * v * kappa * sigma + v * dtau - kappa;
    out.K = -std::pow(sigma / (A * A), 2);
    out.H = -numer / (2.0 * A * A * A);
    out.kappa_g = kappa / A;
    out.kappa_n = -kappa / A;
    out.tau_g = v * kappa * sigma * (A * sigma - f.tau_G) / (A * A);
    out.forms.E = 1.0 + v * v * sigma * sigma;
    out.forms.F = 0.0;
    out.forms.G = 1.0;
    out.forms.e = numer / A;
    out.forms.f = sigma / A;
    out.forms.g = 0.0;
    out.forms.A = A;
    return out;
}

ClosedValues darboux_values(const FrenetData& f, double s, double v) {
    const double kappa = f.kappa, sigma = f.total_torsion();
    ClosedValues out;
    out.lambda = 0.0;
    out.K = 0.0;
    out.kappa_g = kappa;
    out.kappa_n = 0.0;
    out.tau_g = 0.0;
    out.forms.E = (v * kappa - sigma) * (v * kappa - sigma);
    out.forms.F = 0.0;
    out.forms.G = 1.0;
    out.forms.e = v * kappa - sigma;
    out.forms.f = 0.0;
    out.forms.g = 0.0;
    if (std::fabs(sigma - v * kappa) < kDenominatorFloor) {
        family_singularity(Family::DarbouxDevelopable, "tau + tau_G - v kappa = 0 in H", s, v);
    }
    out.H = 1.0 / (2.0 * (sigma - v * kappa));
    return out;
}

// -- rectifying surface --------------------------------------------------------
//
// c = 1/sqrt(kappa^2 + tau^2), primes are d/ds. K and H share the E - F^2 denominator.

struct RectTerms {
    double c, kappa, tau, tau_G;
    double ck1, ct1;  ///< (c kappa)', (c tau)'
    double A;
};

class Rectifying {
public:
    Rectifying(const RuledSurfaceSpec& spec, double v) : spec_(spec), v_(v) {}

    double ck(double x) const {
        const FrenetData g = frame(x);
        return g.kappa / std::hypot(g.kappa, g.tau);
    }
    double ct(double x) const {
        const FrenetData g = frame(x);
        return g.tau / std::hypot(g.kappa, g.tau);
    }

    RectTerms terms(double x) const {
        const FrenetData g = frame(x);
        RectTerms t{};
        t.c = 1.0 / std::hypot(g.kappa, g.tau);
        t.kappa = g.kappa;
        t.tau = g.tau;
        t.tau_G = g.tau_G;
        t.ck1 = rate([this](double y) { return ck(y); }, x, domain());
        t.ct1 = rate([this](double y) { return ct(y); }, x, domain());
        const double v = v_, c = t.c, k = t.kappa, tu = t.tau, tg = t.tau_G;
        const double lead = v * c * t.ck1 * (tu - k) - c * k;
        t.A = std::sqrt(v * v * std::pow(c, 4) * k * k * tg * tg * (k * k + tu * tu) + lead * lead);
        return t;
    }

    double ck2(double x) const {
        return rate([this](double y) { return ck(y); }, x, domain(), 2);
    }

    const Domain& domain() const { return spec_.curve.domain(); }

private:
    FrenetData frame(double x) const { return frenet_at(spec_.alg, spec_.curve, x); }

    const RuledSurfaceSpec& spec_;
    double v_;
};

ClosedValues rectifying_values(const RuledSurfaceSpec& spec, double s, double v) {
    const Rectifying rect(spec, v);
    const RectTerms t = rect.terms(s);
    const double c = t.c, k = t.kappa, tu = t.tau, tg = t.tau_G;
    const double ck1 = t.ck1, ct1 = t.ct1, A = t.A;
    const double ck2 = rect.ck2(s);

    ClosedValues out;
    const double lam_den = ct1 * ct1 + ck1 * ck1 + c * c * k * k * tg * tg;
    if (lam_den > kDenominatorFloor * kDenominatorFloor) out.lambda = c * c * k * k * tg / lam_den;

    const double E = std::pow(1.0 + v * ck1, 2) + std::pow(v * ck1, 2) + std::pow(v * c * k * tg, 2);
    const double F = c * tu + v * c * ck1 * (k + tu);
    const double f_num = c * c * k * k * tg * (1.0 + v * (ck1 - ct1));
    const double e_num = -v * v * c * c * k * tg * ck2 * (k + tu)
                         - v * v * c * std::pow(k - tu, 2) * ck1 * ck1
                         - 2.0 * v * v * c * tg * ck1 * ck1 * (k + tu)
                         + 2.0 * v * c * k * ck1 * (tu - k - tg)
                         - c * k * k
                         + v * v * std::pow(c, 3) * k * k * tg * tg * (tu * tu - k * k + tu * tg);
    const double den = E - F * F;

    out.forms.E = E;
    out.forms.F = F;
    out.forms.G = 1.0;
    out.forms.e = e_num;
    out.forms.f = f_num;
    out.forms.g = 0.0;
    out.forms.A = A;

    if (!(A > kSingularThreshold)) family_singularity(Family::Rectifying, "A vanishes", s, v);
    if (std::fabs(den) < kDenominatorFloor) family_singularity(Family::Rectifying, "E - F^2 vanishes", s, v);

    out.K = -(1.0 / (A * A)) * f_num * f_num / den;
    out.H = (1.0 / A) * (e_num - 2.0 * F * f_num) / (2.0 * den);
    out.kappa_g = v * c * c * k * k * tu * tg / A;
    out.kappa_n = k * (v * c * ck1 * (tu - k) - c * k) / A;

    auto P = [&rect, v](double x) {
        const RectTerms r = rect.terms(x);
        return -v * r.c * r.c * r.kappa * r.kappa * r.tau_G / r.A;
    };
    auto Q = [&rect, v](double x) {
        const RectTerms r = rect.terms(x);
        return v * r.c * r.c * r.kappa * r.tau * r.tau_G / r.A;
    };
    const double dP = rate(P, s, rect.domain());
    const double dQ = rate(Q, s, rect.domain());
    const double first = v * c * c * k * tu * tg * (dP - (v * c * k * ck1 * (tu - k) - c * k * k) / A);
    const double second =
        v * c * c * k * k * tg * ((v * c * ck1 * (tu - k) - c * k) * (tu + 2.0 * tg) / A + dQ);
    out.tau_g = (k / A) * (first - second);
    return out;
}

ClosedValues closed_values(const RuledSurfaceSpec& spec, double s, double v) {
    if (spec.family == Family::General) return general_values(spec, s, v);
    const FrenetData f = frenet_at(spec.alg, spec.curve, s);
    switch (spec.family) {
        case Family::TangentDevelopable:
            return tangent_developable_values(f, s, v);
        case Family::Normal:
            return normal_values(spec, f, s, v);
        case Family::Binormal:
            return binormal_values(spec, f, s, v);
        case Family::DarbouxDevelopable:
            return darboux_values(f, s, v);
        case Family::Rectifying:
            return rectifying_values(spec, s, v);
        case Family::General:
            break;
    }
    throw InvalidInputError("unhandled surface family");
}

}  // namespace

GeneralClosedForm general_closed_form(const LieAlgebra3& alg, const FrenetData& fr, const Vec3g& X,
                                      double v, double A) {
    if (!(std::fabs(A) > 0.0)) throw FamilySingularityError("general closed form needs A != 0");
    const Vec3g& T = fr.T;
    const Vec3g& N = fr.N;
    const Vec3g& B = fr.B;
    const double kappa = fr.kappa;
    const double tauG = fr.tau_G;

    const Vec3g TxX = cross(T, X);
    const Vec3g TX = bracket(alg, T, X);
    const Vec3g NX = bracket(alg, N, X);
    const Vec3g T_TX = bracket(alg, T, TX);
    const Vec3g TXxX = cross(TX, X);
    const double TX2 = dot(TX, TX);
    const double TdotX = dot(T, X);
    const double orth = dot(TxX, TX);  // <T x X, [T, X]>

    GeneralClosedForm g;
    if (0.5 * std::sqrt(TX2) > kDegenerateRulingThreshold) g.lambda = 2.0 * orth / TX2;

    g.E = 1.0 + 0.25 * v * v * TX2;
    g.F = TdotX;
    g.G = 1.0;
    const double det = 1.0 + 0.25 * v * v * TX2 - TdotX * TdotX;

    const double e_bracket = -kappa * dot(B, X)
                             - 0.5 * v * kappa * dot(cross(N, X), TX)
                             + 0.5 * v * kappa * dot(NX, TxX)
                             + 0.25 * v * v * kappa * dot(NX, TXxX)
                             + 0.5 * dot(T_TX, TxX)
                             + 0.25 * v * dot(T_TX, TXxX);
    g.e = e_bracket / A;
    g.f = orth / (2.0 * A);
    g.K = -(orth * orth) / (4.0 * A * A * det);
    g.H = (e_bracket / A - TdotX * orth / A) / (2.0 * det);

    g.kappa_g = (kappa / A) * (dot(X, N) + v * tauG * dot(X, B));
    g.kappa_n = (kappa / A) * (-dot(X, B) + 0.5 * v * dot(TX, cross(X, N)));

    const Vec3g L = kappa * bracket(alg, X, N) + 0.5 * T_TX;
    const Vec3g LxX = cross(L, X);
    const Vec3g TX_T = bracket(alg, TX, T);
    const double A2 = A * A;
    const double inner = (kappa / A2) * (kappa * dot(X, B) + 0.5 * v * dot(T, LxX))
                         + (v * kappa / (2.0 * A2)) * (kappa * dot(TX, cross(N, X)) + 0.5 * v * dot(TX, LxX))
                         + (1.0 / (2.0 * A2)) * (0.5 * v * kappa * dot(TX_T, TxX)
                                                 + 0.25 * v * v * kappa * dot(TX_T, TXxX));
    g.tau_g = dot(X, N) * inner - (v * kappa * tauG / A2) * dot(TX, TxX) * dot(X, B);
    return g;
}

std::optional<double> closed_form_lambda(const RuledSurfaceSpec& spec, double s) {
    switch (spec.family) {
        case Family::General: {
            const FrenetData f = frenet_at(spec.alg, spec.curve, s);
            return general_closed_form(spec.alg, f, std::get<LeftInvariantDirector>(spec.director).X, 0.0, 1.0)
                .lambda;
        }
        case Family::TangentDevelopable:
        case Family::DarbouxDevelopable:
            return 0.0;
        default:
            return closed_values(spec, s, 0.0).lambda;
    }
}

GaussMean gauss_mean_closed_form(const RuledSurfaceSpec& spec, double s, double v) {
    const ClosedValues c = closed_values(spec, s, v);
    return {c.K, c.H};
}

CurveInvariants curve_invariants_closed_form(const RuledSurfaceSpec& spec, double s, double v) {
    const ClosedValues c = closed_values(spec, s, v);
    return {c.kappa_g, c.kappa_n, c.tau_g};
}

InvariantRecord closed_form_record(const RuledSurfaceSpec& spec, double s, double v) {
    InvariantRecord rec;
    rec.s = s;
    rec.v = v;
    rec.pipeline = Pipeline::ClosedForm;
    try {
        const ClosedValues c = closed_values(spec, s, v);
        rec.lambda = c.lambda;
        rec.K = c.K;
        rec.H = c.H;
        rec.kappa_g = c.kappa_g;
        rec.kappa_n = c.kappa_n;
        rec.tau_g = c.tau_g;
        rec.forms = c.forms;
    } catch (const FamilySingularityError& e) {
        rec.singular = true;
        rec.note = e.what();
        rec.forms = FundamentalForms{kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, Vec3g{kNaN, kNaN, kNaN}, kNaN};
    }
    return rec;
}

}  // namespace ruled
