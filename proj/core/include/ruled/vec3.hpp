#ifndef RULED_VEC3_HPP
#define RULED_VEC3_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>

namespace ruled {

/// Coefficients of a Lie-algebra element in the fixed orthonormal, oriented
/// basis {X1, X2, X3}. Every vector-valued quantity in the library (tangents,
/// frames, directors, normals, surface partials) is a Vec3g.
struct Vec3g {
    std::array<double, 3> c{0.0, 0.0, 0.0};

    constexpr Vec3g() = default;
    constexpr Vec3g(double c1, double c2, double c3) : c{c1, c2, c3} {}

    constexpr double& operator[](std::size_t i) { return c[i]; }
    constexpr double operator[](std::size_t i) const { return c[i]; }

    constexpr Vec3g& operator+=(const Vec3g& o) {
        for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
        return *this;
    }
    constexpr Vec3g& operator-=(const Vec3g& o) {
        for (std::size_t i = 0; i < 3; ++i) c[i] -= o.c[i];
        return *this;
    }
    constexpr Vec3g& operator*=(double k) {
        for (auto& x : c) x *= k;
        return *this;
    }
    constexpr Vec3g& operator/=(double k) {
        for (auto& x : c) x /= k;
        return *this;
    }

    friend constexpr bool operator==(const Vec3g&, const Vec3g&) = default;
};

constexpr Vec3g operator+(Vec3g a, const Vec3g& b) { return a += b; }
constexpr Vec3g operator-(Vec3g a, const Vec3g& b) { return a -= b; }
constexpr Vec3g operator-(const Vec3g& a) { return {-a[0], -a[1], -a[2]}; }
constexpr Vec3g operator*(Vec3g a, double k) { return a *= k; }
constexpr Vec3g operator*(double k, Vec3g a) { return a *= k; }
constexpr Vec3g operator/(Vec3g a, double k) { return a /= k; }

/// Metric inner product; the basis is orthonormal so this is the plain dot.
constexpr double dot(const Vec3g& a, const Vec3g& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3g& a) { return std::sqrt(dot(a, a)); }

/// Right-handed cross product of coefficient triples. This is not the Lie
/// bracket; the two coincide only for so(3).
constexpr Vec3g cross(const Vec3g& a, const Vec3g& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

/// Determinant of the matrix with rows x, y, z; equals <x cross y, z>.
constexpr double det3(const Vec3g& x, const Vec3g& y, const Vec3g& z) {
    return dot(cross(x, y), z);
}

inline bool is_finite(const Vec3g& a) {
    return std::isfinite(a[0]) && std::isfinite(a[1]) && std::isfinite(a[2]);
}

inline double max_abs(const Vec3g& a) {
    return std::fmax(std::fabs(a[0]), std::fmax(std::fabs(a[1]), std::fabs(a[2])));
}

std::ostream& operator<<(std::ostream& os, const Vec3g& v);

}  // namespace ruled

#endif  // RULED_VEC3_HPP
