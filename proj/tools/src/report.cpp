#include "ruled/cli/report.hpp"

#include <cmath>
#include <cstdio>

namespace ruled::cli {

using nlohmann::json;

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json optional_number(const std::optional<double>& x) { return x ? number_or_null(*x) : json(nullptr); }

}  // namespace

json to_json(const Vec3g& x) { return json::array({x[0], x[1], x[2]}); }

json to_json(const FrenetData& f) {
    return {{"s", f.s},         {"T", to_json(f.T)},     {"N", to_json(f.N)},
            {"B", to_json(f.B)}, {"kappa", f.kappa},      {"tau", f.tau},
            {"tau_G", f.tau_G}, {"binormal_rate", f.binormal_rate}};
}

json to_json(const FrenetResiduals& r) {
    return {{"orthonormality", r.orthonormality}, {"orientation", r.orientation},
            {"tangent_eq", r.tangent_eq},         {"normal_eq", r.normal_eq},
            {"binormal_eq", r.binormal_eq},       {"bracket_TN", r.bracket_TN},
            {"bracket_TB", r.bracket_TB},         {"binormal_rate", r.binormal_rate}};
}

json to_json(const ValidationReport& r) {
    return {{"passed", r.passed()},           {"tol", r.tol},
            {"antisymmetry", r.antisymmetry}, {"jacobi", r.jacobi},
            {"bi_invariance", r.bi_invariance}, {"violations", r.violations}};
}

json to_json(const InvariantRecord& r) {
    json j = {{"s", r.s},
              {"v", r.v},
              {"pipeline", std::string(to_string(r.pipeline))},
              {"singular", r.singular},
              {"lambda", optional_number(r.lambda)},
              {"K", number_or_null(r.K)},
              {"H", number_or_null(r.H)},
              {"kappa_g", number_or_null(r.kappa_g)},
              {"kappa_n", number_or_null(r.kappa_n)},
              {"tau_g", number_or_null(r.tau_g)}};
    if (r.singular) j["note"] = r.note;
    return j;
}

json to_json(const Classification& c, bool include_cells) {
    json j = {{"tol", c.tol},
              {"developable", c.developable},
              {"lambda_state", std::string(to_string(c.lambda_state))},
              {"max_abs_lambda", c.max_abs_lambda},
              {"max_abs_f_degenerate", c.max_abs_f_degenerate},
              {"minimal", c.minimal},
              {"minimal_cells", c.minimal_cells},
              {"minimal_locus", c.minimal_locus},
              {"point_counts",
               {{"hyperbolic", c.hyperbolic},
                {"parabolic", c.parabolic},
                {"elliptic", c.elliptic},
                {"singular", c.singular}}},
              {"max_K", number_or_null(c.max_K)},
              {"base_curve",
               {{"geodesic", c.base_curve.geodesic},
                {"asymptotic", c.base_curve.asymptotic},
                {"principal", c.base_curve.principal},
                {"max_abs_kappa_g", c.base_curve.max_kappa_g},
                {"max_abs_kappa_n", c.base_curve.max_kappa_n},
                {"max_abs_tau_g", c.base_curve.max_tau_g},
                {"skipped", c.base_curve.skipped}}}};
    if (include_cells) {
        json cells = json::array();
        for (const auto& t : c.point_types) cells.push_back(t ? json(std::string(to_string(*t))) : json(nullptr));
        j["point_types"] = cells;
    }
    return j;
}

json to_json(const ComparisonReport& r) {
    return {{"quantity", r.quantity},
            {"grid", {r.ns, r.nv}},
            {"compared", r.compared},
            {"max_abs", number_or_null(r.max_abs)},
            {"max_rel", number_or_null(r.max_rel)},
            {"worst", r.worst_s ? json{{"s", *r.worst_s}, {"v", *r.worst_v}} : json(nullptr)},
            {"tol", r.tol},
            {"asserting", r.asserting},
            {"pass", r.pass},
            {"skipped", r.skipped}};
}

json to_json(const PipelineComparison& c) {
    json reports = json::array();
    for (const auto& r : c.reports) reports.push_back(to_json(r));
    return {{"family", c.family}, {"passed", c.passed()}, {"reports", reports}};
}

json to_json(const PropertyReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"tol", c.tol},
                          {"cases", c.cases},
                          {"skipped", c.skipped},
                          {"failures", c.failures},
                          {"max_residual", number_or_null(c.max_residual)},
                          {"worst", c.worst},
                          {"pass", c.pass()}});
    }
    return {{"seed", r.seed}, {"cases", r.n_cases}, {"passed", r.passed()}, {"checks", checks}};
}

json to_json(const TauGAltResult& r) {
    if (r.skipped) return {{"skipped", true}, {"reason", r.reason}, {"reference", r.reference}};
    return {{"skipped", false},
            {"reference", r.reference},
            {"alternative", r.alternative},
            {"verbatim", r.verbatim},
            {"residual", r.residual}};
}

void write_table(std::ostream& out, const std::vector<InvariantRecord>& records, double classify_tol) {
    out << kTableHeader << '\n';
    for (const auto& r : records) {
        const auto& f = r.forms;
        out << format_number(r.s) << ',' << format_number(r.v) << ',' << format_number(f.E) << ','
            << format_number(f.F) << ',' << format_number(f.G) << ',' << format_number(f.e) << ','
            << format_number(f.f) << ',' << format_number(f.g) << ',' << format_number(r.K) << ','
            << format_number(r.H) << ',' << (r.lambda ? format_number(*r.lambda) : std::string("degenerate"))
            << ',' << format_number(r.kappa_g) << ',' << format_number(r.kappa_n) << ','
            << format_number(r.tau_g) << ','
            << (r.singular || !std::isfinite(r.K) ? std::string() : std::string(to_string(point_type(r.K, classify_tol))))
            << ',' << to_string(r.pipeline) << ',' << (r.singular ? 1 : 0) << '\n';
    }
}

void write_obj(std::ostream& out, const RuledSurfaceSpec& spec, const SurfaceGrid& grid) {
    const auto ss = grid.s.values();
    const auto vs = grid.v.values();
    out << "# ruled surface " << to_string(spec.family) << " on " << spec.curve.name << ", " << ss.size()
        << " x " << vs.size() << " grid\n";
    for (double s : ss) {
        for (double v : vs) {
            const Vec3g p = evaluate(spec, s, v);
            out << "v " << format_number(p[0]) << ' ' << format_number(p[1]) << ' ' << format_number(p[2]) << '\n';
        }
    }
    const std::size_t nv = vs.size();
    for (std::size_t i = 0; i + 1 < ss.size(); ++i) {
        for (std::size_t j = 0; j + 1 < nv; ++j) {
            const std::size_t a = i * nv + j + 1;
            out << "f " << a << ' ' << a + 1 << ' ' << a + nv + 1 << ' ' << a + nv << '\n';
        }
    }
}

}  // namespace ruled::cli
