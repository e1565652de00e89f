#include "ruled/calculus.hpp"

#include <string>

namespace ruled {

double default_step(int order, double s) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double scale = std::fmax(1.0, std::fabs(s));
    switch (order) {
        case 1:
            return std::cbrt(eps) * scale;
        case 2:
            return std::pow(eps, 0.25) * scale;
        case 3:
            return std::pow(eps, 0.2) * scale;
        default:
            throw InvalidInputError("derivative order must be 1, 2 or 3");
    }
}

namespace {

void check_order(int order) {
    if (order < 1 || order > 3) throw InvalidInputError("derivative order must be 1, 2 or 3");
}

void check_domain(const Domain& d, double s) {
    if (!d.contains(s)) {
        throw DomainError("s=" + std::to_string(s) + " outside the domain [" +
                          std::to_string(d.lo) + ", " + std::to_string(d.hi) + "]");
    }
}

}  // namespace

SmoothFn SmoothFn::analytic(Fn f, Fn d1, Fn d2, Fn d3, Domain domain) {
    SmoothFn out;
    out.f_ = std::move(f);
    out.d_ = {std::move(d1), std::move(d2), std::move(d3)};
    out.analytic_ = true;
    out.domain_ = domain;
    return out;
}

SmoothFn SmoothFn::finite_difference(Fn f, FiniteDifference fd, Domain domain) {
    if (fd.step && !(*fd.step > 0.0)) throw InvalidInputError("finite-difference step must be positive");
    SmoothFn out;
    out.f_ = std::move(f);
    out.fd_ = fd;
    out.domain_ = domain;
    return out;
}

SmoothFn SmoothFn::constant(double value) {
    auto zero = [](double) { return 0.0; };
    return analytic([value](double) { return value; }, zero, zero, zero);
}

double SmoothFn::operator()(double s) const {
    check_domain(domain_, s);
    return f_(s);
}

double SmoothFn::deriv(double s, int order) const {
    check_order(order);
    check_domain(domain_, s);
    if (analytic_) {
        const auto& d = d_[static_cast<std::size_t>(order - 1)];
        if (d) return d(s);
    }
    return ruled::finite_difference(f_, s, order, fd_, domain_);
}

double deriv(const SmoothFn& f, double s, int order) { return f.deriv(s, order); }

SmoothVec3Fn SmoothVec3Fn::analytic(Fn f, Fn d1, Fn d2, Fn d3, Domain domain) {
    SmoothVec3Fn out;
    out.f_ = std::move(f);
    out.d_ = {std::move(d1), std::move(d2), std::move(d3)};
    out.analytic_ = true;
    out.domain_ = domain;
    return out;
}

SmoothVec3Fn SmoothVec3Fn::finite_difference(Fn f, FiniteDifference fd, Domain domain) {
    if (fd.step && !(*fd.step > 0.0)) throw InvalidInputError("finite-difference step must be positive");
    SmoothVec3Fn out;
    out.f_ = std::move(f);
    out.fd_ = fd;
    out.domain_ = domain;
    return out;
}

SmoothVec3Fn SmoothVec3Fn::constant(const Vec3g& value) {
    auto zero = [](double) { return Vec3g{}; };
    return analytic([value](double) { return value; }, zero, zero, zero);
}

SmoothVec3Fn SmoothVec3Fn::from_components(const SmoothFn& x, const SmoothFn& y,
                                           const SmoothFn& z) {
    Domain d{std::fmax(x.domain().lo, std::fmax(y.domain().lo, z.domain().lo)),
             std::fmin(x.domain().hi, std::fmin(y.domain().hi, z.domain().hi))};
    auto value = [x, y, z](double s) { return Vec3g{x(s), y(s), z(s)}; };
    auto order = [x, y, z](int k) {
        return [x, y, z, k](double s) { return Vec3g{x.deriv(s, k), y.deriv(s, k), z.deriv(s, k)}; };
    };
    // Component derivatives already honour each component's own mode.
    return analytic(value, order(1), order(2), order(3), d);
}

Vec3g SmoothVec3Fn::operator()(double s) const {
    check_domain(domain_, s);
    return f_(s);
}

Vec3g SmoothVec3Fn::deriv(double s, int order) const {
    check_order(order);
    check_domain(domain_, s);
    if (analytic_) {
        const auto& d = d_[static_cast<std::size_t>(order - 1)];
        if (d) return d(s);
    }
    return ruled::finite_difference(f_, s, order, fd_, domain_);
}

SmoothFn SmoothVec3Fn::component(std::size_t i) const {
    auto self = *this;
    auto value = [self, i](double s) { return self(s)[i]; };
    if (!analytic_) return SmoothFn::finite_difference(value, fd_, domain_);
    auto order = [self, i](int k) { return [self, i, k](double s) { return self.deriv(s, k)[i]; }; };
    return SmoothFn::analytic(value, order(1), order(2), order(3), domain_);
}

Vec3g deriv_vec(const SmoothVec3Fn& f, double s, int order) { return f.deriv(s, order); }

}  // namespace ruled
