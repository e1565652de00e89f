#include "ruled/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ruled/error.hpp"

namespace ruled::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
}

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
    if (!j.is_object()) fail(where, "expected an object");
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [k, _] : j.items()) {
        if (!ok.contains(k)) fail(where, "unknown key '" + k + "'");
    }
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) fail(where, "expected a finite number");
    return x;
}

std::string string(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

std::array<double, 3> triple(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) fail(where, "expected an array of three numbers");
    return {number(j[0], where + "[0]"), number(j[1], where + "[1]"), number(j[2], where + "[2]")};
}

RangeConfig range(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) fail(where, "expected [min, max, n]");
    RangeConfig r;
    r.min = number(j[0], where + "[0]");
    r.max = number(j[1], where + "[1]");
    if (!j[2].is_number_integer() || j[2].get<long long>() < 1) fail(where + "[2]", "n must be an integer >= 1");
    r.n = j[2].get<std::size_t>();
    if (r.max < r.min) fail(where, "max must not be below min");
    return r;
}

AlgebraConfig parse_algebra(const json& j) {
    AlgebraConfig a;
    if (j.is_string()) {
        a.name = j.get<std::string>();
        const auto names = builtin_algebra_names();
        if (std::find(names.begin(), names.end(), a.name) == names.end()) {
            fail("algebra", "unknown builtin '" + a.name + "'");
        }
        return a;
    }
    allow_keys(j, "algebra", {"name", "structure_constants"});
    a.name = j.contains("name") ? string(j["name"], "algebra.name") : "custom";
    if (!j.contains("structure_constants")) fail("algebra", "missing structure_constants");
    const json& c = j["structure_constants"];
    std::array<double, 27> k{};
    if (!c.is_array() || c.size() != 3) fail("algebra.structure_constants", "expected a 3x3x3 array");
    for (std::size_t i = 0; i < 3; ++i) {
        if (!c[i].is_array() || c[i].size() != 3) fail("algebra.structure_constants", "expected a 3x3x3 array");
        for (std::size_t jj = 0; jj < 3; ++jj) {
            const auto row = triple(c[i][jj], "algebra.structure_constants");
            for (std::size_t m = 0; m < 3; ++m) k[9 * i + 3 * jj + m] = row[m];
        }
    }
    a.structure_constants = k;
    return a;
}

CurveConfig parse_curve(const json& j) {
    allow_keys(j, "curve", {"type", "a", "b", "s0", "ds", "points", "motion"});
    CurveConfig c;
    if (!j.contains("type")) fail("curve", "missing type");
    c.type = string(j["type"], "curve.type");
    if (c.type == "helix") {
        if (!j.contains("a") || !j.contains("b")) fail("curve", "helix needs a and b");
        c.a = number(j["a"], "curve.a");
        c.b = number(j["b"], "curve.b");
    } else if (c.type == "tabulated") {
        if (!j.contains("ds") || !j.contains("points")) fail("curve", "tabulated curve needs ds and points");
        c.s0 = j.contains("s0") ? number(j["s0"], "curve.s0") : 0.0;
        c.ds = number(j["ds"], "curve.ds");
        if (!(c.ds > 0.0)) fail("curve.ds", "must be positive");
        if (!j["points"].is_array()) fail("curve.points", "expected an array");
        for (std::size_t i = 0; i < j["points"].size(); ++i) {
            c.points.push_back(triple(j["points"][i], "curve.points[" + std::to_string(i) + "]"));
        }
        if (c.points.size() < 4) fail("curve.points", "need at least 4 samples");
    } else if (c.type != "circle") {
        fail("curve.type", "unknown curve '" + c.type + "' (circle, helix, tabulated)");
    }
    if (j.contains("motion")) {
        const json& m = j["motion"];
        allow_keys(m, "curve.motion", {"axis", "angle", "offset"});
        MotionConfig mc;
        if (m.contains("axis")) mc.axis = triple(m["axis"], "curve.motion.axis");
        if (m.contains("angle")) mc.angle = number(m["angle"], "curve.motion.angle");
        if (m.contains("offset")) mc.offset = triple(m["offset"], "curve.motion.offset");
        c.motion = mc;
    }
    return c;
}

DerivativeConfig parse_derivatives(const json& j) {
    allow_keys(j, "derivatives", {"mode", "step", "stencil"});
    DerivativeConfig d;
    if (j.contains("mode")) d.mode = string(j["mode"], "derivatives.mode");
    if (d.mode != "analytic" && d.mode != "finite-difference") {
        fail("derivatives.mode", "expected analytic or finite-difference");
    }
    if (j.contains("step") && !j["step"].is_null()) {
        d.step = number(j["step"], "derivatives.step");
        if (!(*d.step > 0.0)) fail("derivatives.step", "must be positive");
    }
    if (j.contains("stencil")) d.stencil = string(j["stencil"], "derivatives.stencil");
    if (d.stencil != "central" && d.stencil != "richardson") {
        fail("derivatives.stencil", "expected central or richardson");
    }
    return d;
}

SurfaceConfig parse_surface(const json& j) {
    allow_keys(j, "surface", {"family", "director"});
    SurfaceConfig s;
    if (j.contains("family")) s.family = string(j["family"], "surface.family");
    try {
        (void)family_from_string(s.family);
    } catch (const UnknownNameError& e) {
        fail("surface.family", e.what());
    }
    if (j.contains("director")) {
        if (s.family != "general") fail("surface.director", "only the general family takes a director");
        s.director = triple(j["director"], "surface.director");
    }
    return s;
}

ExpectConfig parse_expect(const json& j) {
    allow_keys(j, "expect",
               {"developable", "minimal", "lambda", "point_type", "geodesic", "asymptotic", "principal"});
    ExpectConfig e;
    auto flag = [&](const char* key, std::optional<bool>& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_boolean()) fail(std::string("expect.") + key, "expected a boolean");
        out = j[key].get<bool>();
    };
    flag("developable", e.developable);
    flag("minimal", e.minimal);
    flag("geodesic", e.geodesic);
    flag("asymptotic", e.asymptotic);
    flag("principal", e.principal);
    if (j.contains("lambda")) e.lambda = number(j["lambda"], "expect.lambda");
    if (j.contains("point_type")) {
        e.point_type = string(j["point_type"], "expect.point_type");
        if (*e.point_type != "hyperbolic" && *e.point_type != "parabolic" && *e.point_type != "elliptic") {
            fail("expect.point_type", "expected hyperbolic, parabolic or elliptic");
        }
    }
    return e;
}

}  // namespace

ScenarioConfig parse_config(const json& j) {
    allow_keys(j, "config",
               {"algebra", "curve", "derivatives", "surface", "grid", "tolerances", "outputs", "verify", "expect"});
    ScenarioConfig c;
    if (j.contains("algebra")) c.algebra = parse_algebra(j["algebra"]);
    if (j.contains("curve")) c.curve = parse_curve(j["curve"]);
    if (j.contains("derivatives")) c.derivatives = parse_derivatives(j["derivatives"]);
    if (j.contains("surface")) c.surface = parse_surface(j["surface"]);
    if (j.contains("grid")) {
        const json& g = j["grid"];
        allow_keys(g, "grid", {"s", "v"});
        if (g.contains("s")) c.s = range(g["s"], "grid.s");
        if (g.contains("v")) c.v = range(g["v"], "grid.v");
    }
    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        allow_keys(t, "tolerances", {"classify", "pipeline"});
        if (t.contains("classify")) c.tolerances.classify = number(t["classify"], "tolerances.classify");
        if (t.contains("pipeline")) c.tolerances.pipeline = number(t["pipeline"], "tolerances.pipeline");
        if (!(c.tolerances.classify >= 0.0) || !(c.tolerances.pipeline >= 0.0)) {
            fail("tolerances", "must be non-negative");
        }
    }
    if (j.contains("outputs")) {
        const json& o = j["outputs"];
        allow_keys(o, "outputs", {"table", "summary", "mesh", "frenet"});
        if (o.contains("table")) c.outputs.table = string(o["table"], "outputs.table");
        if (o.contains("summary")) c.outputs.summary = string(o["summary"], "outputs.summary");
        if (o.contains("mesh")) c.outputs.mesh = string(o["mesh"], "outputs.mesh");
        if (o.contains("frenet")) c.outputs.frenet = string(o["frenet"], "outputs.frenet");
    }
    if (j.contains("verify")) {
        const json& v = j["verify"];
        allow_keys(v, "verify", {"seed", "cases", "compare"});
        if (v.contains("seed")) {
            if (!v["seed"].is_number_unsigned()) fail("verify.seed", "expected a non-negative integer");
            c.verify.seed = v["seed"].get<std::uint64_t>();
        }
        if (v.contains("cases")) {
            if (!v["cases"].is_number_integer() || v["cases"].get<long long>() < 1) {
                fail("verify.cases", "expected an integer >= 1");
            }
            c.verify.cases = v["cases"].get<std::size_t>();
        }
        if (v.contains("compare")) {
            if (!v["compare"].is_boolean()) fail("verify.compare", "expected a boolean");
            c.verify.compare = v["compare"].get<bool>();
        }
    }
    if (j.contains("expect")) c.expect = parse_expect(j["expect"]);
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return parse_config(j);
}

json to_json(const ScenarioConfig& c) {
    json j;
    if (c.algebra.structure_constants) {
        json k = json::array();
        for (std::size_t i = 0; i < 3; ++i) {
            json plane = json::array();
            for (std::size_t jj = 0; jj < 3; ++jj) {
                const auto& sc = *c.algebra.structure_constants;
                plane.push_back({sc[9 * i + 3 * jj], sc[9 * i + 3 * jj + 1], sc[9 * i + 3 * jj + 2]});
            }
            k.push_back(plane);
        }
        j["algebra"] = {{"name", c.algebra.name}, {"structure_constants", k}};
    } else {
        j["algebra"] = c.algebra.name;
    }

    json curve = {{"type", c.curve.type}};
    if (c.curve.type == "helix") {
        curve["a"] = c.curve.a;
        curve["b"] = c.curve.b;
    } else if (c.curve.type == "tabulated") {
        curve["s0"] = c.curve.s0;
        curve["ds"] = c.curve.ds;
        curve["points"] = c.curve.points;
    }
    if (c.curve.motion) {
        curve["motion"] = {{"axis", c.curve.motion->axis},
                           {"angle", c.curve.motion->angle},
                           {"offset", c.curve.motion->offset}};
    }
    j["curve"] = curve;

    j["derivatives"] = {{"mode", c.derivatives.mode},
                        {"step", c.derivatives.step ? json(*c.derivatives.step) : json(nullptr)},
                        {"stencil", c.derivatives.stencil}};
    if (c.surface) {
        json s = {{"family", c.surface->family}};
        if (c.surface->family == "general") s["director"] = c.surface->director;
        j["surface"] = s;
    }
    j["grid"] = {{"s", {c.s.min, c.s.max, c.s.n}}, {"v", {c.v.min, c.v.max, c.v.n}}};
    j["tolerances"] = {{"classify", c.tolerances.classify}, {"pipeline", c.tolerances.pipeline}};
    j["outputs"] = {{"table", c.outputs.table},
                    {"summary", c.outputs.summary},
                    {"mesh", c.outputs.mesh},
                    {"frenet", c.outputs.frenet}};
    j["verify"] = {{"seed", c.verify.seed}, {"cases", c.verify.cases}, {"compare", c.verify.compare}};
    if (c.expect) {
        json e = json::object();
        if (c.expect->developable) e["developable"] = *c.expect->developable;
        if (c.expect->minimal) e["minimal"] = *c.expect->minimal;
        if (c.expect->lambda) e["lambda"] = *c.expect->lambda;
        if (c.expect->point_type) e["point_type"] = *c.expect->point_type;
        if (c.expect->geodesic) e["geodesic"] = *c.expect->geodesic;
        if (c.expect->asymptotic) e["asymptotic"] = *c.expect->asymptotic;
        if (c.expect->principal) e["principal"] = *c.expect->principal;
        j["expect"] = e;
    }
    return j;
}

LieAlgebra3 build_algebra(const AlgebraConfig& c) {
    if (c.structure_constants) return LieAlgebra3(c.name, *c.structure_constants);
    return builtin(c.name);
}

Curve build_curve(const CurveConfig& c, const DerivativeConfig& d) {
    Curve curve;
    if (c.type == "circle") {
        curve = circle_curve();
    } else if (c.type == "helix") {
        curve = helix_curve(c.a, c.b);
    } else {
        std::vector<Vec3g> pts;
        pts.reserve(c.points.size());
        for (const auto& p : c.points) pts.emplace_back(p[0], p[1], p[2]);
        curve = tabulated_curve(pts, c.s0, c.ds);
    }
    if (c.motion) {
        const auto& m = *c.motion;
        curve = rigid_motion(curve, Vec3g{m.axis[0], m.axis[1], m.axis[2]}, m.angle,
                             Vec3g{m.offset[0], m.offset[1], m.offset[2]});
    }
    if (d.mode == "finite-difference") {
        curve = with_finite_differences(
            curve, FiniteDifference{d.step, d.stencil == "richardson" ? Stencil::Richardson : Stencil::Central});
    }
    return curve;
}

RuledSurfaceSpec build_surface(const ScenarioConfig& c) {
    if (!c.surface) throw ConfigError("config: this command needs a surface block");
    const LieAlgebra3 alg = build_algebra(c.algebra);
    const Curve curve = build_curve(c.curve, c.derivatives);
    const Family family = family_from_string(c.surface->family);
    if (family == Family::General) {
        const auto& d = c.surface->director;
        return make_general_surface(alg, curve, Vec3g{d[0], d[1], d[2]});
    }
    return make_family_surface(alg, curve, family);
}

SurfaceGrid build_grid(const ScenarioConfig& c) {
    return SurfaceGrid{{c.s.min, c.s.max, c.s.n}, {c.v.min, c.v.max, c.v.n}};
}

}  // namespace ruled::cli
