#ifndef RULED_SURFACES_HPP
#define RULED_SURFACES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ruled/algebra.hpp"
#include "ruled/calculus.hpp"
#include "ruled/frenet.hpp"

namespace ruled {

enum class Family {
    General,
    TangentDevelopable,
    Normal,
    Binormal,
    DarbouxDevelopable,
    Rectifying,
};

std::string_view to_string(Family family);
/// Accepts the names printed by to_string(): general, tangent-developable,
/// normal, binormal, darboux-developable, rectifying.
Family family_from_string(std::string_view name);
std::vector<std::string> family_names();

/// Director fixed in the algebra: Xdot = 0 along the curve.
struct LeftInvariantDirector {
    Vec3g X;
};

/// X(s) = a(s) T + b(s) N + c(s) B.
struct FrenetComboDirector {
    SmoothFn a, b, c;
};

using DirectorSpec = std::variant<LeftInvariantDirector, FrenetComboDirector>;

inline constexpr double kDirectorUnitTol = 1e-10;
inline constexpr double kComboUnitTol = 1e-6;
inline constexpr double kSingularThreshold = 1e-10;

/// phi(s, v) = base(s) + v X(s). The base is the curve itself, except for the
/// Darboux developable surface whose base is the binormal indicatrix B(s).
struct RuledSurfaceSpec {
    LieAlgebra3 alg;
    Curve curve;
    DirectorSpec director;
    Family family = Family::General;
};

/// General ruled surface with a left-invariant unit director.
/// Throws InvalidInputError if |X| deviates from 1 by more than kDirectorUnitTol.
RuledSurfaceSpec make_general_surface(const LieAlgebra3& alg, const Curve& curve, const Vec3g& X);

/// One of the Frenet-frame families. Family::General is rejected (it needs a director).
RuledSurfaceSpec make_family_surface(const LieAlgebra3& alg, const Curve& curve, Family family);

/// Frame, director and base quantities at s, shared by both pipelines.
struct RulingData {
    FrenetData frame;
    Vec3g X;              ///< director
    Vec3g DX;             ///< D_T X
    Vec3g base;           ///< base point (alpha or B)
    Vec3g base_velocity;  ///< T, or D_T B for the Darboux developable
};

RulingData ruling_at(const RuledSurfaceSpec& spec, double s);

Vec3g evaluate(const RuledSurfaceSpec& spec, double s, double v);

struct SurfacePartials {
    Vec3g phi_s, phi_v, phi_ss, phi_sv, phi_vv;
};

/// phi_s = base' + v D_T X, phi_v = X, phi_sv = D_T X, phi_vv = 0, and phi_ss the
/// covariant s-derivative of the phi_s field (finite differences plus 1/2 [T, .]).
SurfacePartials partials(const RuledSurfaceSpec& spec, double s, double v);

/// phi_s alone, the field differentiated to obtain phi_ss.
Vec3g tangent_s(const RuledSurfaceSpec& spec, double s, double v);

struct SurfaceNormal {
    Vec3g U;
    double A = 0.0;  ///< |phi_s x phi_v|
};

/// Throws SingularPointError when A <= kSingularThreshold.
SurfaceNormal normal(const RuledSurfaceSpec& spec, double s, double v);

struct FundamentalForms {
    double E = 0.0, F = 0.0, G = 0.0;
    double e = 0.0, f = 0.0, g = 0.0;
    Vec3g U;
    double A = 0.0;
};

FundamentalForms fundamental_forms(const RuledSurfaceSpec& spec, double s, double v);

}  // namespace ruled

#endif  // RULED_SURFACES_HPP
