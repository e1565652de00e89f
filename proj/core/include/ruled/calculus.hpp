#ifndef RULED_CALCULUS_HPP
#define RULED_CALCULUS_HPP

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "ruled/error.hpp"
#include "ruled/vec3.hpp"

namespace ruled {

/// Closed interval on which a function of arc length may be evaluated.
struct Domain {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double s) const { return s >= lo && s <= hi; }
};

enum class Stencil {
    /// 2-point (order 1), 3-point (order 2) and 5-point (order 3) central stencils.
    Central,
    /// One Richardson step over the central stencils: (4 D(h/2) - D(h)) / 3.
    Richardson,
};

struct FiniteDifference {
    std::optional<double> step;  ///< unset: default step for the order and point
    Stencil stencil = Stencil::Central;
};

/// Step used when a FiniteDifference carries no explicit step.
/// eps^(1/3), eps^(1/4), eps^(1/5) for orders 1, 2, 3, scaled by max(1, |s|).
double default_step(int order, double s);

/// Step used when differentiating fields that are themselves computed
/// (curvature, torsion, frame components, surface partials).
inline constexpr double kFieldStep = 1e-3;

namespace detail {

template <class F>
auto central_stencil(const F& f, double s, int order, double h) {
    switch (order) {
        case 1:
            return (f(s + h) - f(s - h)) / (2.0 * h);
        case 2:
            return (f(s + h) - 2.0 * f(s) + f(s - h)) / (h * h);
        case 3:
            return (f(s + 2.0 * h) - 2.0 * f(s + h) + 2.0 * f(s - h) - f(s - 2.0 * h)) /
                   (2.0 * h * h * h);
        default:
            throw InvalidInputError("derivative order must be 1, 2 or 3");
    }
}

inline double stencil_reach(int order, double h) { return order == 3 ? 2.0 * h : h; }

}  // namespace detail

/// Finite-difference derivative of any callable R -> T where T supports
/// +, -, and scaling by double (double and Vec3g both qualify).
/// Throws DomainError if the stencil leaves `domain`.
template <class F>
auto finite_difference(const F& f, double s, int order, const FiniteDifference& fd,
                       const Domain& domain = {}) {
    if (order < 1 || order > 3) throw InvalidInputError("derivative order must be 1, 2 or 3");
    const double h = fd.step.value_or(default_step(order, s));
    if (!(h > 0.0)) throw InvalidInputError("finite-difference step must be positive");
    const double reach = detail::stencil_reach(order, h);
    if (!domain.contains(s - reach) || !domain.contains(s + reach)) {
        throw DomainError("finite-difference stencil at s=" + std::to_string(s) +
                          " leaves the domain [" + std::to_string(domain.lo) + ", " +
                          std::to_string(domain.hi) + "]");
    }
    if (fd.stencil == Stencil::Central) return detail::central_stencil(f, s, order, h);
    const auto coarse = detail::central_stencil(f, s, order, h);
    const auto fine = detail::central_stencil(f, s, order, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

/// Scalar function of arc length with derivatives up to order 3, either from
/// analytic callbacks or central differences.
class SmoothFn {
public:
    using Fn = std::function<double(double)>;

    SmoothFn() = default;

    static SmoothFn analytic(Fn f, Fn d1, Fn d2, Fn d3, Domain domain = {});
    static SmoothFn finite_difference(Fn f, FiniteDifference fd = {}, Domain domain = {});
    static SmoothFn constant(double value);

    double operator()(double s) const;
    double deriv(double s, int order) const;

    bool is_analytic() const { return analytic_; }
    const Domain& domain() const { return domain_; }
    const FiniteDifference& fd() const { return fd_; }

private:
    Fn f_;
    std::array<Fn, 3> d_;
    bool analytic_ = false;
    FiniteDifference fd_;
    Domain domain_;
};

/// deriv(f, s, order) as a free function.
double deriv(const SmoothFn& f, double s, int order);

/// Vector-valued function of arc length with coefficients in the algebra basis.
class SmoothVec3Fn {
public:
    using Fn = std::function<Vec3g(double)>;

    SmoothVec3Fn() = default;

    static SmoothVec3Fn analytic(Fn f, Fn d1, Fn d2, Fn d3, Domain domain = {});
    static SmoothVec3Fn finite_difference(Fn f, FiniteDifference fd = {}, Domain domain = {});
    static SmoothVec3Fn constant(const Vec3g& value);
    /// Assembles a vector function from three scalar components.
    static SmoothVec3Fn from_components(const SmoothFn& x, const SmoothFn& y, const SmoothFn& z);

    Vec3g operator()(double s) const;
    Vec3g deriv(double s, int order) const;
    SmoothFn component(std::size_t i) const;

    bool is_analytic() const { return analytic_; }
    const Domain& domain() const { return domain_; }
    const FiniteDifference& fd() const { return fd_; }

private:
    Fn f_;
    std::array<Fn, 3> d_;
    bool analytic_ = false;
    FiniteDifference fd_;
    Domain domain_;
};

Vec3g deriv_vec(const SmoothVec3Fn& f, double s, int order);

}  // namespace ruled

#endif  // RULED_CALCULUS_HPP
