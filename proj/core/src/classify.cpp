#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "ruled/error.hpp"
#include "ruled/invariants.hpp"

namespace ruled {

std::vector<double> Range::values() const {
    if (n == 0) throw InvalidInputError("grid range needs at least one point");
    if (!std::isfinite(min) || !std::isfinite(max)) throw InvalidInputError("grid range bounds must be finite");
    if (n == 1) return {min};
    std::vector<double> out(n);
    const double step = (max - min) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) out[i] = min + step * static_cast<double>(i);
    out.back() = max;
    return out;
}

std::vector<InvariantRecord> evaluate_grid(const RuledSurfaceSpec& spec, const SurfaceGrid& grid,
                                           Pipeline pipeline, unsigned jobs) {
    const std::vector<double> ss = grid.s.values();
    const std::vector<double> vs = grid.v.values();
    const std::size_t total = ss.size() * vs.size();
    std::vector<InvariantRecord> out(total);

    auto cell = [&](std::size_t idx) {
        const double s = ss[idx / vs.size()];
        const double v = vs[idx % vs.size()];
        out[idx] = pipeline == Pipeline::Definitional ? definitional_record(spec, s, v)
                                                      : closed_form_record(spec, s, v);
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
    if (workers == 1) {
        for (std::size_t i = 0; i < total; ++i) cell(i);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) return;
            try {
                cell(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(total);
                return;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::string_view to_string(PointType t) {
    switch (t) {
        case PointType::Hyperbolic:
            return "hyperbolic";
        case PointType::Parabolic:
            return "parabolic";
        case PointType::Elliptic:
            return "elliptic";
    }
    return "unknown";
}

PointType point_type(double K, double tol) {
    if (K < -tol) return PointType::Hyperbolic;
    if (K > tol) return PointType::Elliptic;
    return PointType::Parabolic;
}

std::string_view to_string(LambdaState s) {
    switch (s) {
        case LambdaState::Regular:
            return "regular";
        case LambdaState::Degenerate:
            return "degenerate";
        case LambdaState::Mixed:
            return "mixed";
    }
    return "unknown";
}

CurveInvariants base_curve_invariants(const RuledSurfaceSpec& spec, double s) {
    try {
        return curve_invariants_definitional(spec, s, 0.0);
    } catch (const SingularPointError&) {
        // v = 0 lies on the singular locus (tangent developable); extrapolate.
        constexpr double delta = 1e-4;
        const CurveInvariants a = curve_invariants_definitional(spec, s, delta);
        const CurveInvariants b = curve_invariants_definitional(spec, s, 2.0 * delta);
        return {2.0 * a.kappa_g - b.kappa_g, 2.0 * a.kappa_n - b.kappa_n, 2.0 * a.tau_g - b.tau_g};
    }
}

namespace {

std::string describe_locus(const std::vector<InvariantRecord>& cells, std::size_t regular) {
    if (cells.empty()) return "none";
    if (cells.size() == regular) return "entire grid";
    double smin = cells.front().s, smax = smin, vmin = cells.front().v, vmax = vmin;
    for (const auto& r : cells) {
        smin = std::min(smin, r.s);
        smax = std::max(smax, r.s);
        vmin = std::min(vmin, r.v);
        vmax = std::max(vmax, r.v);
    }
    std::ostringstream os;
    os << cells.size() << " of " << regular << " regular cells, s in [" << smin << ", " << smax << "], v in ["
       << vmin << ", " << vmax << "]";
    return os.str();
}

}  // namespace

Classification classify(const RuledSurfaceSpec& spec, const SurfaceGrid& grid,
                        const std::vector<InvariantRecord>& definitional, double tol) {
    const std::vector<double> ss = grid.s.values();
    const std::size_t nv = grid.v.values().size();
    if (definitional.size() != ss.size() * nv) {
        throw InvalidInputError("record count does not match the grid");
    }

    Classification c;
    c.tol = tol;
    c.point_types.resize(definitional.size());

    std::size_t regular_rows = 0, degenerate_rows = 0;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const auto& first = definitional[i * nv];
        if (first.lambda) {
            ++regular_rows;
            c.max_abs_lambda = std::max(c.max_abs_lambda, std::fabs(*first.lambda));
        } else {
            ++degenerate_rows;
            for (std::size_t j = 0; j < nv; ++j) {
                const auto& r = definitional[i * nv + j];
                if (!r.singular) c.max_abs_f_degenerate = std::max(c.max_abs_f_degenerate, std::fabs(r.forms.f));
            }
        }
    }
    c.lambda_state = degenerate_rows == 0 ? LambdaState::Regular
                     : regular_rows == 0  ? LambdaState::Degenerate
                                          : LambdaState::Mixed;
    c.developable = c.max_abs_lambda <= tol && c.max_abs_f_degenerate <= tol;

    std::vector<InvariantRecord> minimal_cells;
    std::size_t regular_cells = 0;
    for (std::size_t k = 0; k < definitional.size(); ++k) {
        const auto& r = definitional[k];
        if (r.singular || !std::isfinite(r.K)) {
            ++c.singular;
            continue;
        }
        ++regular_cells;
        const PointType t = point_type(r.K, tol);
        c.point_types[k] = t;
        if (t == PointType::Hyperbolic) ++c.hyperbolic;
        if (t == PointType::Parabolic) ++c.parabolic;
        if (t == PointType::Elliptic) ++c.elliptic;
        c.max_K = std::max(c.max_K, r.K);
        if (std::fabs(r.H) <= tol) minimal_cells.push_back(r);
    }
    c.minimal_cells = minimal_cells.size();
    c.minimal = regular_cells > 0 && minimal_cells.size() == regular_cells;
    c.minimal_locus = describe_locus(minimal_cells, regular_cells);

    auto& bc = c.base_curve;
    std::size_t evaluated = 0;
    for (double s : ss) {
        CurveInvariants ci;
        try {
            ci = base_curve_invariants(spec, s);
        } catch (const SingularPointError&) {
            ++bc.skipped;
            continue;
        }
        ++evaluated;
        bc.max_kappa_g = std::max(bc.max_kappa_g, std::fabs(ci.kappa_g));
        bc.max_kappa_n = std::max(bc.max_kappa_n, std::fabs(ci.kappa_n));
        bc.max_tau_g = std::max(bc.max_tau_g, std::fabs(ci.tau_g));
    }
    bc.geodesic = evaluated > 0 && bc.max_kappa_g <= tol;
    bc.asymptotic = evaluated > 0 && bc.max_kappa_n <= tol;
    bc.principal = evaluated > 0 && bc.max_tau_g <= tol;
    return c;
}

Classification classify(const RuledSurfaceSpec& spec, const SurfaceGrid& grid, double tol, unsigned jobs) {
    return classify(spec, grid, evaluate_grid(spec, grid, Pipeline::Definitional, jobs), tol);
}

}  // namespace ruled
