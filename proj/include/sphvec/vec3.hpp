#pragma once

#include <cmath>
#include <ostream>

#include "sphvec/errors.hpp"

namespace sphvec {

// Norm threshold below which a vector or quaternion counts as zero.
inline constexpr double kZeroTol = 1e-12;

// Admission tolerance on |norm - 1| for unit-norm wrappers.
inline constexpr double kUnitTol = 1e-9;

// Default tolerance for componentwise approximate comparisons.
inline constexpr double kEqualTol = 1e-9;

/// Real 3-vector in the standard basis (e_x, e_y, e_z).
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline constexpr Vec3 e_x{1.0, 0.0, 0.0};
inline constexpr Vec3 e_y{0.0, 1.0, 0.0};
inline constexpr Vec3 e_z{0.0, 0.0, 1.0};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Vec3 operator-(const Vec3& a) {
    return {-a.x, -a.y, -a.z};
}

constexpr Vec3 operator*(double s, const Vec3& a) {
    return {s * a.x, s * a.y, s * a.z};
}

constexpr Vec3 operator*(const Vec3& a, double s) {
    return s * a;
}

constexpr Vec3 operator/(const Vec3& a, double s) {
    return {a.x / s, a.y / s, a.z / s};
}

constexpr double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) {
    return std::sqrt(dot(a, a));
}

/// a / ||a||. Throws ZeroVectorError when ||a|| <= kZeroTol.
inline Vec3 normalize(const Vec3& a) {
    const double n = norm(a);
    if (n <= kZeroTol) {
        throw ZeroVectorError("normalize: vector norm below zero threshold");
    }
    return a / n;
}

/// Deterministic unit vector orthogonal to a.
///
/// Rule: take the standard basis vector e with the smallest |dot(a, e)|
/// (ties broken in order e_x, e_y, e_z), project out the a-component,
/// normalize. Throws ZeroVectorError when ||a|| <= kZeroTol.
inline Vec3 orthonormal_to(const Vec3& a) {
    const double n = norm(a);
    if (n <= kZeroTol) {
        throw ZeroVectorError("orthonormal_to: vector norm below zero threshold");
    }
    const Vec3 unit = a / n;
    const double ax = std::abs(unit.x);
    const double ay = std::abs(unit.y);
    const double az = std::abs(unit.z);
    Vec3 e = e_x;
    double best = ax;
    if (ay < best) {
        e = e_y;
        best = ay;
    }
    if (az < best) {
        e = e_z;
    }
    return normalize(e - dot(e, unit) * unit);
}

inline bool approx_equal(const Vec3& a, const Vec3& b, double tol = kEqualTol) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol &&
           std::abs(a.z - b.z) <= tol;
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& a) {
    return os << "(" << a.x << ", " << a.y << ", " << a.z << ")";
}

} // namespace sphvec
