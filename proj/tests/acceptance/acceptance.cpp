// Acceptance criteria, one line each. Exit status is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ruled/cli/app.hpp"
#include "ruled/cli/config.hpp"
#include "ruled/verify.hpp"

using namespace ruled;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

const Vec3g e3{0, 0, 1};
constexpr double kTwoPi = 6.283185307179586;

RuledSurfaceSpec helix_family(Family fam, const char* alg = "so3") {
    return make_family_surface(builtin(alg), helix_curve(0.8, 0.6), fam);
}

/// Worst value of `metric` over regular cells, with its location.
struct Worst {
    double value = 0.0;
    double s = 0.0, v = 0.0;
    void update(double x, const InvariantRecord& r) {
        if (!(x <= value)) {
            value = x;
            s = r.s;
            v = r.v;
        }
    }
    std::string where() const { return "(s, v) = (" + fmt(s) + ", " + fmt(v) + ")"; }
};

Outcome c1_example_exact() {
    const auto cyl = make_general_surface(builtin("so3"), circle_curve(), e3);
    double dl = 0.0, dk = 0.0, dt = 0.0, dg = 0.0;
    for (double t = 0.0; t < kTwoPi; t += 0.5) {
        const auto lambda = distribution_parameter(cyl, t);
        dl = std::max(dl, lambda ? std::fabs(*lambda - 2.0) : INFINITY);
        const FrenetData f = frenet_at(cyl.alg, cyl.curve, t);
        dk = std::max(dk, std::fabs(f.kappa - 1.0));
        dt = std::max(dt, std::fabs(f.tau));
        dg = std::max(dg, std::fabs(f.tau_G - 0.5));
    }
    const bool ok = dl <= 1e-9 && dk <= 1e-8 && dt <= 1e-8 && dg <= 1e-8;
    return {ok, "|dlambda| " + fmt(dl) + ", |dkappa| " + fmt(dk) + ", |dtau| " + fmt(dt) + ", |dtau_G| " + fmt(dg)};
}

Outcome c2_example_v0() {
    const auto cyl = make_general_surface(builtin("so3"), circle_curve(), e3);
    double worst = 0.0;
    for (double t : {0.0, 1.0, 2.5, 4.0}) {
        const InvariantRecord r = definitional_record(cyl, t, 0.0);
        for (double d : {r.K + 0.25, r.H + 0.5, r.kappa_g, r.kappa_n + 1.0, r.tau_g}) {
            worst = std::max(worst, std::isfinite(d) ? std::fabs(d) : INFINITY);
        }
    }
    return {worst <= 1e-6, "max deviation " + fmt(worst)};
}

Outcome c3_paper_compat() {
    const fs::path out = fs::path(RULED_TEST_OUT) / "acceptance";
    const std::string out_s = out.string();
    const char* argv[] = {"ruled", "example-cylinder", "--paper-compat", "--out", out_s.c_str()};
    std::ostringstream so, se;
    if (cli::run(5, argv, so, se) != 0) return {false, "example-cylinder failed: " + se.str()};
    const json j = json::parse(so.str());
    const json& block = j["paper_compat"];
    double worst = 0.0;
    std::string bad;
    for (const auto& row : block["rows"]) {
        for (const char* q : {"K", "H", "kappa_g", "kappa_n", "tau_g"}) {
            const double d = std::fabs(row[q]["closed_form_A1"].get<double>() - row[q]["reference"].get<double>());
            worst = std::max(worst, d);
            if (d > 1e-9) bad += std::string(bad.empty() ? "" : ", ") + q + " at v=" + fmt(row["v"].get<double>());
        }
    }
    const bool note = !block["note"].get<std::string>().empty();
    return {worst <= 1e-9 && note,
            "max deviation " + fmt(worst) + (bad.empty() ? "" : " (" + bad + ")") + (note ? ", note emitted" : ", no note")};
}

Outcome c4_tau_G(const PropertyReport& p50) {
    const auto& so3 = p50.check("tau-G-so3");
    const auto& ab = p50.check("tau-G-abelian");
    return {so3.pass() && ab.pass() && so3.cases == 50 && ab.cases == 50,
            "so3 max |tau_G - 1/2| " + fmt(so3.max_residual) + ", abelian max |tau_G| " + fmt(ab.max_residual)};
}

Outcome c5_striction(const PropertyReport& p50) {
    const auto& a = p50.check("striction-so3");
    const auto& b = p50.check("striction-so3-scaled-2");
    return {a.pass() && b.pass() && a.cases == 50 && b.cases == 50,
            "so3 max offset " + fmt(a.max_residual) + ", so3-scaled-2 max offset " + fmt(b.max_residual)};
}

Outcome c6_tangent_developable() {
    const auto spec = helix_family(Family::TangentDevelopable);
    const auto recs = evaluate_grid(spec, {{0.0, kTwoPi, 21}, {0.1, 2.0, 21}}, Pipeline::Definitional, 4);
    Worst lam, K, kn, tg, kg, H;
    std::size_t singular = 0;
    for (const auto& r : recs) {
        if (r.singular) {
            ++singular;
            continue;
        }
        const FrenetData f = frenet_at(spec.alg, spec.curve, r.s);
        lam.update(r.lambda ? std::fabs(*r.lambda) : INFINITY, r);
        K.update(std::fabs(r.K), r);
        kn.update(std::fabs(r.kappa_n), r);
        tg.update(std::fabs(r.tau_g), r);
        kg.update(std::fabs(r.kappa_g + f.kappa), r);
        const double ref = -f.total_torsion() / (2.0 * r.v * r.v * f.kappa);
        H.update(std::fabs(r.H - ref) / std::fabs(ref), r);
    }
    const bool ok = singular == 0 && lam.value <= 1e-8 && K.value <= 1e-8 && kn.value <= 1e-6 && tg.value <= 1e-6 &&
                    kg.value <= 1e-6 && H.value <= 1e-5;
    return {ok, "|lambda| " + fmt(lam.value) + ", |K| " + fmt(K.value) + ", |kappa_n| " + fmt(kn.value) +
                    ", |tau_g| " + fmt(tg.value) + ", |kappa_g + kappa| " + fmt(kg.value) + ", H rel " +
                    fmt(H.value) + " at " + H.where()};
}

Outcome c7_dual_pipeline() {
    const SurfaceGrid grid{{0.0, kTwoPi, 21}, {0.1, 2.0, 21}};
    bool ok = true;
    std::string detail;
    for (Family fam : {Family::Normal, Family::Binormal}) {
        const PipelineComparison c = compare_pipelines(helix_family(fam), grid, 1e-5, 4);
        detail += std::string(detail.empty() ? "" : "; ") + std::string(to_string(fam)) + ":";
        for (const char* q : {"K", "H", "kappa_g", "kappa_n", "tau_g"}) {
            const ComparisonReport& r = c.report(q);
            const bool pass = r.pass && r.skipped.empty();
            ok = ok && pass;
            detail += std::string(" ") + q + (pass ? " ok" : " rel " + fmt(r.max_rel));
        }
    }
    return {ok, detail};
}

Outcome c8_darboux() {
    // The singular locus is v = (tau + tau_G)/kappa = 1.375; the grid stays below it.
    const auto spec = helix_family(Family::DarbouxDevelopable);
    const auto recs = evaluate_grid(spec, {{0.0, kTwoPi, 21}, {0.1, 1.2, 21}}, Pipeline::Definitional, 4);
    Worst lam, K, kg, kn, tg, H;
    std::size_t singular = 0;
    for (const auto& r : recs) {
        if (r.singular) {
            ++singular;
            continue;
        }
        const FrenetData f = frenet_at(spec.alg, spec.curve, r.s);
        lam.update(r.lambda ? std::fabs(*r.lambda) : INFINITY, r);
        K.update(std::fabs(r.K), r);
        kg.update(std::fabs(r.kappa_g - f.kappa), r);
        kn.update(std::fabs(r.kappa_n), r);
        tg.update(std::fabs(r.tau_g), r);
        const double ref = 1.0 / (2.0 * (f.total_torsion() - r.v * f.kappa));
        H.update(std::fabs(r.H - ref) / std::fabs(ref), r);
    }
    const bool ok = singular == 0 && lam.value <= 1e-8 && K.value <= 1e-8 && kg.value <= 1e-6 && kn.value <= 1e-6 &&
                    tg.value <= 1e-6 && H.value <= 1e-5;
    return {ok, "|lambda| " + fmt(lam.value) + ", |K| " + fmt(K.value) + ", |kappa_g - kappa| " + fmt(kg.value) +
                    ", |kappa_n| " + fmt(kn.value) + ", |tau_g| " + fmt(tg.value) + ", H rel " + fmt(H.value) +
                    " at " + H.where()};
}

Outcome c9_abelian() {
    const SurfaceGrid grid{{0.0, kTwoPi, 21}, {-1.0, 1.0, 11}};
    const Classification cyl = classify(make_general_surface(builtin("abelian"), circle_curve(), e3), grid);
    const Classification rect = classify(helix_family(Family::Rectifying, "abelian"), grid);
    return {cyl.developable && rect.developable,
            std::string("cylinder ") + (cyl.developable ? "developable" : "not developable") + " (lambda " +
                std::string(to_string(cyl.lambda_state)) + ", max |f| " + fmt(cyl.max_abs_f_degenerate) +
                "), rectifying " + (rect.developable ? "developable" : "not developable") + " (lambda " +
                std::string(to_string(rect.lambda_state)) + ", max |lambda| " + fmt(rect.max_abs_lambda) +
                ", max |f| " + fmt(rect.max_abs_f_degenerate) + ")"};
}

Outcome c10_orthogonality(const PropertyReport& p100) {
    const auto& c = p100.check("developable-iff-orthogonal-so3");
    return {c.pass() && c.cases == 100, std::to_string(c.failures) + " counterexamples in " + std::to_string(c.cases)};
}

Outcome c11_frenet() {
    double structure = 0.0, brackets = 0.0;
    for (const auto& name : builtin_algebra_names()) {
        for (const Curve& curve : {circle_curve(), helix_curve(0.8, 0.6)}) {
            for (double s = -3.0; s <= 3.0; s += 0.5) {
                const FrenetResiduals r = frenet_residuals(builtin(name), curve, s);
                structure = std::max(structure, r.max_structure());
                brackets = std::max(brackets, std::max(r.bracket_TN, r.bracket_TB));
            }
        }
    }
    return {structure <= 1e-4 && brackets <= 1e-6,
            "max structure residual " + fmt(structure) + ", max bracket residual " + fmt(brackets)};
}

Outcome c12_gauss_sign() {
    double worst = -INFINITY;
    std::size_t cells = 0, scenarios = 0;
    auto scan = [&](const RuledSurfaceSpec& spec, const SurfaceGrid& grid) {
        ++scenarios;
        for (const auto& r : evaluate_grid(spec, grid, Pipeline::Definitional, 4)) {
            if (r.singular) continue;
            ++cells;
            worst = std::max(worst, r.K);
        }
    };
    for (const auto& entry : fs::directory_iterator(RULED_SCENARIO_DIR)) {
        const cli::ScenarioConfig c = cli::load_config(entry.path());
        if (!c.surface || !validate(cli::build_algebra(c.algebra)).passed()) continue;
        scan(cli::build_surface(c), cli::build_grid(c));
    }
    const SurfaceGrid grid{{0.0, kTwoPi, 11}, {-2.0, 2.0, 11}};
    for (const auto& name : builtin_algebra_names()) {
        for (const auto& fam : family_names()) {
            if (fam == "general") {
                const Vec3g X = Vec3g{0.3, -0.4, 0.8} / norm(Vec3g{0.3, -0.4, 0.8});
                scan(make_general_surface(builtin(name), helix_curve(0.8, 0.6), X), grid);
            } else {
                scan(helix_family(family_from_string(fam), name.c_str()), grid);
            }
        }
    }
    return {worst <= 1e-12, "max K " + fmt(worst) + " over " + std::to_string(cells) + " regular cells in " +
                                std::to_string(scenarios) + " scenarios"};
}

}  // namespace

int main() {
    const PropertyReport p50 = property_suite(kDefaultSeed, 50, 4);
    const PropertyReport p100 = property_suite(kDefaultSeed, 100, 4);

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"cylinder example: lambda, kappa, tau, tau_G", c1_example_exact},
        {"cylinder example at v = 0 (definitional)", c2_example_v0},
        {"cylinder example, A := 1 reference block", c3_paper_compat},
        {"tau_G constants (so3, abelian)", [&] { return c4_tau_G(p50); }},
        {"striction curve of left-invariant directors", [&] { return c5_striction(p50); }},
        {"tangent developable of helix(0.8, 0.6)", c6_tangent_developable},
        {"normal and binormal closed forms vs definitional", c7_dual_pipeline},
        {"Darboux developable of helix(0.8, 0.6)", c8_darboux},
        {"abelian reduction: cylinder and rectifying helix", c9_abelian},
        {"developable iff <T x X, [T, X]> = 0 (100 directors)", [&] { return c10_orthogonality(p100); }},
        {"Frenet and bracket residuals on builtins", c11_frenet},
        {"K <= 0 at regular points", c12_gauss_sign},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("[%s] %2zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    }
    std::printf("%zu of %zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed;
}
