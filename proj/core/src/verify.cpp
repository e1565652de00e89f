#include "ruled/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "ruled/error.hpp"

namespace ruled {

namespace {

std::string cell_label(double s, double v) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << s << ", " << v << ")";
    return os.str();
}

struct Quantity {
    std::string name;
    std::function<std::optional<double>(const InvariantRecord&)> get;
    bool asserting;
};

std::optional<double> finite_or_empty(double x) {
    if (std::isfinite(x)) return x;
    return std::nullopt;
}

std::vector<Quantity> quantities(Family family) {
    const bool all = family != Family::General && family != Family::Rectifying;
    const bool core = family != Family::Rectifying;
    return {
        {"lambda", [](const InvariantRecord& r) { return r.lambda; }, core},
        {"K", [](const InvariantRecord& r) { return finite_or_empty(r.K); }, core},
        {"H", [](const InvariantRecord& r) { return finite_or_empty(r.H); }, all},
        {"kappa_g", [](const InvariantRecord& r) { return finite_or_empty(r.kappa_g); }, all},
        {"kappa_n", [](const InvariantRecord& r) { return finite_or_empty(r.kappa_n); }, all},
        {"tau_g", [](const InvariantRecord& r) { return finite_or_empty(r.tau_g); }, all},
        {"E", [](const InvariantRecord& r) { return finite_or_empty(r.forms.E); }, false},
        {"F", [](const InvariantRecord& r) { return finite_or_empty(r.forms.F); }, false},
        {"G", [](const InvariantRecord& r) { return finite_or_empty(r.forms.G); }, false},
        {"e", [](const InvariantRecord& r) { return finite_or_empty(r.forms.e); }, false},
        {"f", [](const InvariantRecord& r) { return finite_or_empty(r.forms.f); }, false},
    };
}

}  // namespace

bool PipelineComparison::passed() const {
    return std::all_of(reports.begin(), reports.end(),
                       [](const ComparisonReport& r) { return !r.asserting || r.pass; });
}

const ComparisonReport& PipelineComparison::report(const std::string& quantity) const {
    for (const auto& r : reports) {
        if (r.quantity == quantity) return r;
    }
    throw UnknownNameError("no comparison report for " + quantity);
}

PipelineComparison compare_pipelines(const RuledSurfaceSpec& spec, const SurfaceGrid& grid, double tol,
                                     unsigned jobs) {
    const auto def = evaluate_grid(spec, grid, Pipeline::Definitional, jobs);
    const auto closed = evaluate_grid(spec, grid, Pipeline::ClosedForm, jobs);

    PipelineComparison out;
    out.family = std::string(to_string(spec.family));
    for (const Quantity& q : quantities(spec.family)) {
        ComparisonReport rep;
        rep.quantity = q.name;
        rep.ns = grid.s.n;
        rep.nv = grid.v.n;
        rep.tol = tol;
        rep.asserting = q.asserting;
        for (std::size_t k = 0; k < def.size(); ++k) {
            const InvariantRecord& d = def[k];
            const InvariantRecord& c = closed[k];
            const std::string where = cell_label(d.s, d.v);
            if (d.singular) {
                rep.skipped.push_back(where + ": " + d.note);
                continue;
            }
            if (c.singular) {
                rep.skipped.push_back(where + ": " + c.note);
                continue;
            }
            const auto dv = q.get(d);
            const auto cv = q.get(c);
            if (!dv && !cv) {
                if (q.name == "lambda") ++rep.compared;  // both report a cylindrical ruling
                continue;
            }
            if (!cv && q.name != "lambda") continue;  // no closed coefficient stated
            double abs = std::numeric_limits<double>::infinity();
            double rel = abs;
            if (dv && cv) {
                abs = std::fabs(*cv - *dv);
                rel = abs / (1.0 + std::fabs(*dv));
            }
            ++rep.compared;
            if (!rep.worst_s || rel > rep.max_rel) {
                rep.worst_s = d.s;
                rep.worst_v = d.v;
            }
            rep.max_abs = std::max(rep.max_abs, abs);
            rep.max_rel = std::max(rep.max_rel, rel);
        }
        rep.pass = rep.max_rel <= tol;
        out.reports.push_back(std::move(rep));
    }
    return out;
}

// ---------------------------------------------------------------------------

bool PropertyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.pass(); });
}

const PropertyCheck& PropertyReport::check(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return c;
    }
    throw UnknownNameError("no property check named " + name);
}

namespace {

using Rng = std::mt19937_64;

Vec3g random_unit(Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        const Vec3g x{gauss(rng), gauss(rng), gauss(rng)};
        const double n = norm(x);
        if (n > 1e-6) return x / n;
    }
}

struct Case {
    std::size_t index = 0;
    Curve curve;
    std::string curve_label;
    Vec3g X;
    double s = 0.0, v = 0.0;
    double scale = 1.0;  ///< multiplier for the random cross-product algebra
    int tangent_sign = 1;
};

Case draw_case(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index & 0xffffffffu),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
    Rng rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Case c;
    c.index = index;
    std::ostringstream label;
    label.precision(17);
    Curve base;
    if (unit(rng) < 0.2) {
        base = circle_curve();
        label << "circle";
    } else {
        const double a = 0.2 + 0.79 * unit(rng);
        const double b = (unit(rng) < 0.5 ? -1.0 : 1.0) * std::sqrt(1.0 - a * a);
        base = helix_curve(a, b);
        label << "helix(" << a << ", " << b << ")";
    }
    const Vec3g axis = random_unit(rng);
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    const Vec3g offset{4.0 * unit(rng) - 2.0, 4.0 * unit(rng) - 2.0, 4.0 * unit(rng) - 2.0};
    c.curve = rigid_motion(base, axis, angle, offset);
    label << " moved by angle " << angle << " about " << axis;
    c.curve_label = label.str();
    c.X = random_unit(rng);
    c.s = 6.0 * unit(rng) - 3.0;
    c.v = 4.0 * unit(rng) - 2.0;
    c.scale = 0.1 + 2.9 * unit(rng);
    c.tangent_sign = unit(rng) < 0.5 ? -1 : 1;
    return c;
}

std::string describe(const Case& c, const std::string& algebra) {
    std::ostringstream os;
    os.precision(17);
    os << "case " << c.index << ": algebra " << algebra << ", curve " << c.curve_label << ", X " << c.X
       << ", s " << c.s << ", v " << c.v;
    return os.str();
}

/// One property: residual per case, or empty when the case does not apply.
struct Property {
    std::string name;
    double tol;
    std::function<std::optional<std::pair<double, std::string>>(const Case&)> run;
};

using Outcome = std::optional<std::pair<double, std::string>>;

Outcome striction(const Case& c, const std::string& algebra) {
    const LieAlgebra3 alg = builtin(algebra);
    const RuledSurfaceSpec spec = make_general_surface(alg, c.curve, c.X);
    try {
        return std::make_pair(std::fabs(striction_offset(spec, c.s)), describe(c, algebra));
    } catch (const DegenerateRulingError&) {
        return std::nullopt;
    }
}

Outcome tau_G_value(const Case& c, const std::string& algebra, double expected) {
    const FrenetData f = frenet_at(builtin(algebra), c.curve, c.s);
    return std::make_pair(std::fabs(f.tau_G - expected), describe(c, algebra));
}

Outcome frenet_check(const Case& c, bool brackets) {
    double worst = 0.0;
    std::string where;
    for (const auto& name : builtin_algebra_names()) {
        const FrenetResiduals r = frenet_residuals(builtin(name), c.curve, c.s);
        const double val = brackets ? std::max(r.bracket_TN, r.bracket_TB) : r.max_structure();
        if (val >= worst) {
            worst = val;
            where = describe(c, name);
        }
    }
    return std::make_pair(worst, where);
}

Outcome developable_iff_orthogonal(const Case& c, const std::string& algebra) {
    const LieAlgebra3 alg = builtin(algebra);
    const FrenetData f = frenet_at(alg, c.curve, c.s);
    const double orth = std::fabs(dot(cross(f.T, c.X), bracket(alg, f.T, c.X)));
    const RuledSurfaceSpec spec = make_general_surface(alg, c.curve, c.X);
    const SurfaceGrid grid{{c.s - 0.05, c.s + 0.05, 3}, {c.v - 0.5, c.v + 0.5, 3}};
    const bool developable = classify(spec, grid).developable;
    const bool orthogonal = orth <= 1e-8;
    return std::make_pair(developable == orthogonal ? 0.0 : 1.0, describe(c, algebra));
}

Outcome tangent_director(const Case& c, bool singular_check) {
    const LieAlgebra3 alg = builtin("so3");
    const FrenetData f = frenet_at(alg, c.curve, c.s);
    const Vec3g X = static_cast<double>(c.tangent_sign) * f.T;
    if (singular_check) {
        const RuledSurfaceSpec spec = make_general_surface(alg, c.curve, X);
        const InvariantRecord rec = definitional_record(spec, c.s, c.v);
        return std::make_pair(rec.singular ? 0.0 : 1.0, describe(c, "so3"));
    }
    const GeneralClosedForm g = general_closed_form(alg, f, X, c.v, 1.0);
    return std::make_pair(std::max(std::fabs(g.kappa_g), std::fabs(g.tau_g)), describe(c, "so3"));
}

Outcome scaled_algebra(const Case& c) {
    std::array<double, 27> k{};
    const auto& eps = builtin("so3").constants();
    for (std::size_t i = 0; i < 27; ++i) k[i] = c.scale * eps[i];
    const LieAlgebra3 alg("random-scaled", k);
    const ValidationReport rep = validate(alg);
    const FrenetData f = frenet_at(alg, c.curve, c.s);
    const double residual = std::max(rep.passed() ? 0.0 : std::max(1.0, rep.max_violation()),
                                     std::fabs(f.tau_G - 0.5 * c.scale));
    std::ostringstream name;
    name.precision(17);
    name << c.scale << " * so3";
    return std::make_pair(residual, describe(c, name.str()));
}

Outcome gauss_sign(const Case& c, const std::string& algebra) {
    const RuledSurfaceSpec spec = make_general_surface(builtin(algebra), c.curve, c.X);
    const InvariantRecord rec = definitional_record(spec, c.s, c.v);
    if (rec.singular) return std::nullopt;
    return std::make_pair(std::max(0.0, rec.K), describe(c, algebra));
}

Outcome lambda_agreement(const Case& c, const std::string& algebra) {
    const RuledSurfaceSpec spec = make_general_surface(builtin(algebra), c.curve, c.X);
    const auto d = distribution_parameter(spec, c.s);
    const auto k = closed_form_lambda(spec, c.s);
    if (!d && !k) return std::make_pair(0.0, describe(c, algebra));
    if (!d || !k) return std::make_pair(std::numeric_limits<double>::infinity(), describe(c, algebra));
    return std::make_pair(std::fabs(*d - *k), describe(c, algebra));
}

std::vector<Property> properties() {
    return {
        {"striction-so3", 1e-10, [](const Case& c) { return striction(c, "so3"); }},
        {"striction-so3-scaled-2", 1e-10, [](const Case& c) { return striction(c, "so3-scaled-2"); }},
        {"tau-G-so3", 1e-8, [](const Case& c) { return tau_G_value(c, "so3", 0.5); }},
        {"tau-G-abelian", 0.0, [](const Case& c) { return tau_G_value(c, "abelian", 0.0); }},
        {"tau-G-so3-scaled-2", 1e-8, [](const Case& c) { return tau_G_value(c, "so3-scaled-2", 1.0); }},
        {"bracket-relations", 1e-6, [](const Case& c) { return frenet_check(c, true); }},
        {"frenet-structure", 1e-4, [](const Case& c) { return frenet_check(c, false); }},
        {"developable-iff-orthogonal-so3", 0.0, [](const Case& c) { return developable_iff_orthogonal(c, "so3"); }},
        {"developable-iff-orthogonal-abelian", 0.0,
         [](const Case& c) { return developable_iff_orthogonal(c, "abelian"); }},
        {"tangent-director-closed-numerators", 1e-6, [](const Case& c) { return tangent_director(c, false); }},
        {"tangent-director-singular", 0.0, [](const Case& c) { return tangent_director(c, true); }},
        {"scaled-cross-product-algebra", 1e-8, [](const Case& c) { return scaled_algebra(c); }},
        {"gauss-curvature-nonpositive-so3", 1e-12, [](const Case& c) { return gauss_sign(c, "so3"); }},
        {"gauss-curvature-nonpositive-so3-scaled-2", 1e-12,
         [](const Case& c) { return gauss_sign(c, "so3-scaled-2"); }},
        {"lambda-closed-vs-definitional-so3", 1e-9, [](const Case& c) { return lambda_agreement(c, "so3"); }},
    };
}

}  // namespace

PropertyReport property_suite(std::uint64_t seed, std::size_t n_cases, unsigned jobs) {
    if (n_cases == 0) throw InvalidInputError("property suite needs at least one case");
    const std::vector<Property> props = properties();
    std::vector<std::vector<Outcome>> results(n_cases, std::vector<Outcome>(props.size()));

    auto run_case = [&](std::size_t i) {
        const Case c = draw_case(seed, i);
        for (std::size_t p = 0; p < props.size(); ++p) results[i][p] = props[p].run(c);
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n_cases)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n_cases; ++i) run_case(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex m;
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < n_cases;) {
                    try {
                        run_case(i);
                    } catch (...) {
                        std::lock_guard lock(m);
                        if (!failure) failure = std::current_exception();
                        next.store(n_cases);
                    }
                }
            });
        }
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    }

    PropertyReport report;
    report.seed = seed;
    report.n_cases = n_cases;
    for (std::size_t p = 0; p < props.size(); ++p) {
        PropertyCheck chk;
        chk.name = props[p].name;
        chk.tol = props[p].tol;
        bool first = true;
        for (std::size_t i = 0; i < n_cases; ++i) {
            const Outcome& o = results[i][p];
            if (!o) {
                ++chk.skipped;
                continue;
            }
            ++chk.cases;
            const double r = o->first;
            if (!(r <= chk.tol)) ++chk.failures;
            if (first || r > chk.max_residual || std::isnan(r)) {
                chk.max_residual = r;
                chk.worst = o->second;
                first = false;
            }
        }
        report.checks.push_back(std::move(chk));
    }
    return report;
}

// ---------------------------------------------------------------------------

TauGAltResult tau_G_alt_check(const LieAlgebra3& alg, const Curve& curve, double s) {
    const FrenetData f = frenet_at(alg, curve, s);
    TauGAltResult out;
    out.reference = f.tau_G;
    const double sigma = f.total_torsion();
    if (std::fabs(f.tau) < 1e-8) {
        out.skipped = true;
        out.reason = "tau vanishes";
        return out;
    }
    if (std::fabs(sigma) < 1e-8) {
        out.skipped = true;
        out.reason = "tau + tau_G vanishes";
        return out;
    }
    const Vec3g Tdot = curve.position.deriv(s, 2);
    const Vec3g Tddot = curve.position.deriv(s, 3);
    const Vec3g TTd = bracket(alg, f.T, Tdot);
    const double k2 = f.kappa * f.kappa;
    const double num1 = dot(Tddot, TTd);
    const double num2 = dot(TTd, TTd);
    out.alternative = num1 / (2.0 * k2 * sigma) + num2 / (4.0 * k2 * sigma);
    out.verbatim = num1 / (2.0 * k2 * f.tau) + num2 / (4.0 * k2 * f.tau);
    out.residual = std::fabs(out.alternative - out.reference);
    return out;
}

DerivativeCheck derivative_check(const Curve& curve, double s) {
    if (!curve.position.is_analytic()) throw InvalidInputError("derivative check needs analytic derivatives");
    const Curve fd = with_finite_differences(curve, FiniteDifference{});
    DerivativeCheck out;
    for (int order = 1; order <= 3; ++order) {
        out.residual[static_cast<std::size_t>(order - 1)] =
            max_abs(fd.position.deriv(s, order) - curve.position.deriv(s, order));
    }
    return out;
}

}  // namespace ruled
