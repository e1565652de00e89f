#ifndef RULED_ALGEBRA_HPP
#define RULED_ALGEBRA_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ruled/vec3.hpp"

namespace ruled {

/// A three-dimensional Lie algebra given by structure constants over the
/// orthonormal basis {X1, X2, X3}: [Xi, Xj] = sum_k c(i, j, k) Xk.
///
/// Indices are zero-based in code; configuration files use the nested array
/// c[i][j][k] whose positions correspond to 1-based basis labels.
class LieAlgebra3 {
public:
    using Constants = std::array<double, 27>;

    LieAlgebra3() = default;
    LieAlgebra3(std::string name, const Constants& constants);

    /// Builds constants from the nested form c[i][j][k].
    static LieAlgebra3 from_nested(std::string name,
                                   const std::array<std::array<std::array<double, 3>, 3>, 3>& c);

    const std::string& name() const { return name_; }
    double structure(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[9 * i + 3 * j + k];
    }
    const Constants& constants() const { return c_; }

private:
    std::string name_ = "abelian";
    Constants c_{};
};

/// sum_ij x_i y_j [Xi, Xj]
Vec3g bracket(const LieAlgebra3& alg, const Vec3g& x, const Vec3g& y);

struct ValidationReport {
    double tol = 0.0;
    double antisymmetry = 0.0;    ///< max |c_ij^k + c_ji^k|
    double jacobi = 0.0;          ///< max component of the cyclic double-bracket sum
    double bi_invariance = 0.0;   ///< max |c_ij^k - c_jk^i|, i.e. <[Xi,Xj],Xk> - <Xi,[Xj,Xk]>
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
    double max_violation() const;
};

constexpr double kDefaultValidationTol = 1e-10;

ValidationReport validate(const LieAlgebra3& alg, double tol = kDefaultValidationTol);

/// Names accepted by builtin(): abelian, so3, so3-scaled-2.
std::vector<std::string> builtin_algebra_names();

/// so3 is (R^3, cross); so3-scaled-2 has [Xi,Xj] = 2 eps_ijk Xk.
/// Throws UnknownNameError listing the available names.
LieAlgebra3 builtin(std::string_view name);

}  // namespace ruled

#endif  // RULED_ALGEBRA_HPP
