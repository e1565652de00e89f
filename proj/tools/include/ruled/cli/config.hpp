#ifndef RULED_CLI_CONFIG_HPP
#define RULED_CLI_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ruled/invariants.hpp"

namespace ruled::cli {

/// Raised for anything wrong with a scenario file; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AlgebraConfig {
    std::string name = "so3";
    /// Set for user-supplied constants, nested as c[i][j][k].
    std::optional<std::array<double, 27>> structure_constants;

    bool operator==(const AlgebraConfig&) const = default;
};

struct MotionConfig {
    std::array<double, 3> axis{0.0, 0.0, 1.0};
    double angle = 0.0;
    std::array<double, 3> offset{0.0, 0.0, 0.0};

    bool operator==(const MotionConfig&) const = default;
};

struct CurveConfig {
    std::string type = "circle";  ///< circle | helix | tabulated
    double a = 1.0, b = 0.0;      ///< helix parameters
    double s0 = 0.0, ds = 0.0;    ///< tabulated sampling
    std::vector<std::array<double, 3>> points;
    std::optional<MotionConfig> motion;

    bool operator==(const CurveConfig&) const = default;
};

struct DerivativeConfig {
    std::string mode = "analytic";  ///< analytic | finite-difference
    std::optional<double> step;
    std::string stencil = "central";  ///< central | richardson

    bool operator==(const DerivativeConfig&) const = default;
};

struct SurfaceConfig {
    std::string family = "general";
    std::array<double, 3> director{0.0, 0.0, 1.0};  ///< general family only

    bool operator==(const SurfaceConfig&) const = default;
};

struct RangeConfig {
    double min = 0.0, max = 0.0;
    std::size_t n = 1;

    bool operator==(const RangeConfig&) const = default;
};

struct ToleranceConfig {
    double classify = kDefaultClassifyTol;
    double pipeline = 1e-5;

    bool operator==(const ToleranceConfig&) const = default;
};

struct OutputConfig {
    std::string table = "surface.csv";
    std::string summary = "summary.json";
    std::string mesh = "surface.obj";
    std::string frenet = "frenet.csv";

    bool operator==(const OutputConfig&) const = default;
};

struct VerifyConfig {
    std::uint64_t seed = 42;
    std::size_t cases = 100;
    bool compare = true;  ///< run the pipeline comparison on the scenario surface

    bool operator==(const VerifyConfig&) const = default;
};

/// Optional expected outcomes; a mismatch makes `classify` and
/// `surface-report` exit with status 1.
struct ExpectConfig {
    std::optional<bool> developable;
    std::optional<bool> minimal;
    std::optional<double> lambda;
    std::optional<std::string> point_type;  ///< every regular cell has this type
    std::optional<bool> geodesic, asymptotic, principal;

    bool operator==(const ExpectConfig&) const = default;
};

struct ScenarioConfig {
    AlgebraConfig algebra;
    CurveConfig curve;
    DerivativeConfig derivatives;
    std::optional<SurfaceConfig> surface;
    RangeConfig s{0.0, 6.283185307179586, 21};
    RangeConfig v{-1.0, 1.0, 21};
    ToleranceConfig tolerances;
    OutputConfig outputs;
    VerifyConfig verify;
    std::optional<ExpectConfig> expect;

    bool operator==(const ScenarioConfig&) const = default;
};

ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config(const std::filesystem::path& path);
/// Canonical form; parse_config(to_json(c)) == c.
nlohmann::json to_json(const ScenarioConfig& c);

LieAlgebra3 build_algebra(const AlgebraConfig& c);
Curve build_curve(const CurveConfig& c, const DerivativeConfig& d);
/// Throws ConfigError when the scenario has no surface block.
RuledSurfaceSpec build_surface(const ScenarioConfig& c);
SurfaceGrid build_grid(const ScenarioConfig& c);

}  // namespace ruled::cli

#endif  // RULED_CLI_CONFIG_HPP
