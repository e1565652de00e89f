#ifndef RULED_INVARIANTS_HPP
#define RULED_INVARIANTS_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ruled/surfaces.hpp"

namespace ruled {

enum class Pipeline { Definitional, ClosedForm };
std::string_view to_string(Pipeline p);

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
inline constexpr double kDegenerateRulingThreshold = 1e-10;

/// Invariants of one surface point (s, v) from one pipeline.
struct InvariantRecord {
    double s = 0.0, v = 0.0;
    Pipeline pipeline = Pipeline::Definitional;
    bool singular = false;
    std::string note;  ///< reason when singular

    std::optional<double> lambda;  ///< empty for a cylindrical (degenerate) ruling
    double K = kNaN, H = kNaN;
    double kappa_g = kNaN, kappa_n = kNaN, tau_g = kNaN;
    /// Definitional: computed coefficients. Closed form: the coefficients
    /// stated alongside the family's closed forms (NaN where none is stated).
    FundamentalForms forms;
};

// ---------------------------------------------------------------------------
// Definitional pipeline

/// det(T, X, D_T X) / |D_T X|^2, or empty when |D_T X| <= kDegenerateRulingThreshold.
std::optional<double> distribution_parameter(const RuledSurfaceSpec& spec, double s);

/// <base', D_T X> / |D_T X|^2, the coefficient of X subtracted from the base
/// point to reach the striction point. Throws DegenerateRulingError.
double striction_offset(const RuledSurfaceSpec& spec, double s);
Vec3g striction_point(const RuledSurfaceSpec& spec, double s);

struct GaussMean {
    double K = kNaN, H = kNaN;
};

struct CurveInvariants {
    double kappa_g = kNaN, kappa_n = kNaN, tau_g = kNaN;
};

/// K = (eg - f^2)/(EG - F^2), H = (Eg + Ge - 2Ff)/(2(EG - F^2)).
GaussMean gauss_mean_definitional(const RuledSurfaceSpec& spec, double s, double v);

/// Geodesic curvature, normal curvature and geodesic torsion of the base
/// curve with respect to the surface, evaluated with the normal U(s, v):
/// <U x T, D_T T>, <D_T T, U>, <U x D_T U, D_T T>.
CurveInvariants curve_invariants_definitional(const RuledSurfaceSpec& spec, double s, double v);

/// Full definitional record. Singular points yield a record with singular set.
InvariantRecord definitional_record(const RuledSurfaceSpec& spec, double s, double v);

// ---------------------------------------------------------------------------
// Closed forms

/// Closed forms for a left-invariant director, with the area element A
/// supplied by the caller (the natural value is sqrt(EG - F^2)).
struct GeneralClosedForm {
    std::optional<double> lambda;
    double E = kNaN, F = kNaN, G = kNaN, e = kNaN, f = kNaN;
    double K = kNaN, H = kNaN;
    double kappa_g = kNaN, kappa_n = kNaN, tau_g = kNaN;
};

GeneralClosedForm general_closed_form(const LieAlgebra3& alg, const FrenetData& frame,
                                      const Vec3g& X, double v, double A);

/// Distribution parameter from the family's closed form.
std::optional<double> closed_form_lambda(const RuledSurfaceSpec& spec, double s);

/// Throws FamilySingularityError naming the vanishing denominator.
GaussMean gauss_mean_closed_form(const RuledSurfaceSpec& spec, double s, double v);
CurveInvariants curve_invariants_closed_form(const RuledSurfaceSpec& spec, double s, double v);

/// Full closed-form record; family singularities mark the record singular.
InvariantRecord closed_form_record(const RuledSurfaceSpec& spec, double s, double v);

// ---------------------------------------------------------------------------
// Grids and classification

struct Range {
    double min = 0.0, max = 0.0;
    std::size_t n = 1;

    std::vector<double> values() const;
};

struct SurfaceGrid {
    Range s, v;
};

/// Records for every (s, v) cell in row-major (s-index, v-index) order.
/// `jobs` worker threads share the cells; the output order never changes.
std::vector<InvariantRecord> evaluate_grid(const RuledSurfaceSpec& spec, const SurfaceGrid& grid,
                                           Pipeline pipeline, unsigned jobs = 1);

enum class PointType { Hyperbolic, Parabolic, Elliptic };
std::string_view to_string(PointType t);

inline constexpr double kDefaultClassifyTol = 1e-8;

PointType point_type(double K, double tol = kDefaultClassifyTol);

enum class LambdaState { Regular, Degenerate, Mixed };
std::string_view to_string(LambdaState s);

struct BaseCurveFlags {
    bool geodesic = false, asymptotic = false, principal = false;
    double max_kappa_g = 0.0, max_kappa_n = 0.0, max_tau_g = 0.0;
    std::size_t skipped = 0;  ///< s values where even the v -> 0 limit was singular
};

struct Classification {
    double tol = kDefaultClassifyTol;
    bool developable = false;
    LambdaState lambda_state = LambdaState::Regular;
    double max_abs_lambda = 0.0;          ///< over regular rulings
    double max_abs_f_degenerate = 0.0;    ///< |f| over cells with degenerate rulings
    bool minimal = false;
    std::size_t minimal_cells = 0;
    std::string minimal_locus;
    std::vector<std::optional<PointType>> point_types;  ///< empty entries: singular cells
    std::size_t hyperbolic = 0, parabolic = 0, elliptic = 0, singular = 0;
    BaseCurveFlags base_curve;
    double max_K = -std::numeric_limits<double>::infinity();
};

/// Base-curve invariants in the limit v -> 0: evaluated at v = 0 when regular,
/// otherwise extrapolated from the v > 0 side.
CurveInvariants base_curve_invariants(const RuledSurfaceSpec& spec, double s);

/// Classifies from definitional records over the grid.
Classification classify(const RuledSurfaceSpec& spec, const SurfaceGrid& grid,
                        double tol = kDefaultClassifyTol, unsigned jobs = 1);
Classification classify(const RuledSurfaceSpec& spec, const SurfaceGrid& grid,
                        const std::vector<InvariantRecord>& definitional, double tol);

}  // namespace ruled

#endif  // RULED_INVARIANTS_HPP
