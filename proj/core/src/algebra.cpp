#include "ruled/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "ruled/error.hpp"

namespace ruled {

std::ostream& operator<<(std::ostream& os, const Vec3g& v) {
    return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ')';
}

LieAlgebra3::LieAlgebra3(std::string name, const Constants& constants)
    : name_(std::move(name)), c_(constants) {
    for (double x : c_) {
        if (!std::isfinite(x)) {
            throw InvalidInputError("structure constants of '" + name_ + "' must be finite");
        }
    }
}

LieAlgebra3 LieAlgebra3::from_nested(
    std::string name, const std::array<std::array<std::array<double, 3>, 3>, 3>& c) {
    Constants flat{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) flat[9 * i + 3 * j + k] = c[i][j][k];
    return LieAlgebra3(std::move(name), flat);
}

Vec3g bracket(const LieAlgebra3& alg, const Vec3g& x, const Vec3g& y) {
    Vec3g out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const double w = x[i] * y[j];
            if (w == 0.0) continue;
            for (std::size_t k = 0; k < 3; ++k) out[k] += w * alg.structure(i, j, k);
        }
    }
    return out;
}

double ValidationReport::max_violation() const {
    return std::max({antisymmetry, jacobi, bi_invariance});
}

namespace {

Vec3g basis(std::size_t i) {
    Vec3g e;
    e[i] = 1.0;
    return e;
}

std::string label(std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << '(' << i + 1 << ',' << j + 1 << ',' << k + 1 << ')';
    return os.str();
}

}  // namespace

ValidationReport validate(const LieAlgebra3& alg, double tol) {
    if (!(tol > 0.0)) throw InvalidInputError("validation tolerance must be positive");
    ValidationReport r;
    r.tol = tol;

    std::string worst_anti, worst_bi, worst_jac;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t k = 0; k < 3; ++k) {
                const double anti = std::fabs(alg.structure(i, j, k) + alg.structure(j, i, k));
                if (anti > r.antisymmetry) {
                    r.antisymmetry = anti;
                    worst_anti = label(i, j, k);
                }
                const double bi = std::fabs(alg.structure(i, j, k) - alg.structure(j, k, i));
                if (bi > r.bi_invariance) {
                    r.bi_invariance = bi;
                    worst_bi = label(i, j, k);
                }
                const Vec3g a = basis(i), b = basis(j), c = basis(k);
                const Vec3g jac = bracket(alg, a, bracket(alg, b, c)) +
                                  bracket(alg, c, bracket(alg, a, b)) +
                                  bracket(alg, b, bracket(alg, c, a));
                if (max_abs(jac) > r.jacobi) {
                    r.jacobi = max_abs(jac);
                    worst_jac = label(i, j, k);
                }
            }
        }
    }

    auto report = [&](const char* what, double value, const std::string& where) {
        if (value > tol) {
            std::ostringstream os;
            os << what << " violated by " << value << " at (i,j,k)=" << where;
            r.violations.push_back(os.str());
        }
    };
    report("antisymmetry c_ij^k = -c_ji^k", r.antisymmetry, worst_anti);
    report("Jacobi identity", r.jacobi, worst_jac);
    report("bi-invariance <[Xi,Xj],Xk> = <Xi,[Xj,Xk]>", r.bi_invariance, worst_bi);
    return r;
}

std::vector<std::string> builtin_algebra_names() { return {"abelian", "so3", "so3-scaled-2"}; }

namespace {

LieAlgebra3 scaled_levi_civita(std::string name, double scale) {
    LieAlgebra3::Constants c{};
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, double v) { c[9 * i + 3 * j + k] = v; };
    set(0, 1, 2, scale);
    set(1, 2, 0, scale);
    set(2, 0, 1, scale);
    set(1, 0, 2, -scale);
    set(2, 1, 0, -scale);
    set(0, 2, 1, -scale);
    return LieAlgebra3(std::move(name), c);
}

}  // namespace

LieAlgebra3 builtin(std::string_view name) {
    if (name == "abelian") return LieAlgebra3("abelian", {});
    if (name == "so3") return scaled_levi_civita("so3", 1.0);
    if (name == "so3-scaled-2") return scaled_levi_civita("so3-scaled-2", 2.0);

    std::string msg = "unknown algebra '" + std::string(name) + "'; available:";
    for (const auto& n : builtin_algebra_names()) msg += " " + n;
    throw UnknownNameError(msg);
}

}  // namespace ruled
