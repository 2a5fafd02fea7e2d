#pragma once

#include <cmath>
#include <ostream>

#include "sphvec/errors.hpp"
#include "sphvec/vec3.hpp"

namespace sphvec {

// Vector <-> quaternion identification used throughout this library.
//
// A vector w = (a, b, c) is identified with the quaternion ja + kb + c,
// NOT with the pure-imaginary quaternion ia + jb + kc. Consequences,
// spelled out because every sign in this file depends on them:
//
//   vector w = (a, b, c)   <->   quaternion  c + 0*i + a*j + b*k
//   e_x <-> j      e_y <-> k      e_z <-> 1
//
//   q = s + y*i + z*j + t*k factors as q = s + i*(t, -z, y), so the
//   scalar/vector split of q is  x = s  and  w = (ck, -cj, ci).
//
//   conj of an embedded vector:  conj((a,b,c)) = (-a, -b, c), i.e. the
//   z-component survives conjugation (it sits on the real axis).

/// General quaternion s + ci*i + cj*j + ck*k over the basis (1, i, j, k).
struct Quaternion {
    double s = 0.0;
    double ci = 0.0;
    double cj = 0.0;
    double ck = 0.0;

    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }
};

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.s + q.s, p.ci + q.ci, p.cj + q.cj, p.ck + q.ck};
}

constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.s - q.s, p.ci - q.ci, p.cj - q.cj, p.ck - q.ck};
}

constexpr Quaternion operator-(const Quaternion& q) {
    return {-q.s, -q.ci, -q.cj, -q.ck};
}

constexpr Quaternion operator*(double a, const Quaternion& q) {
    return {a * q.s, a * q.ci, a * q.cj, a * q.ck};
}

constexpr Quaternion operator*(const Quaternion& q, double a) {
    return a * q;
}

constexpr Quaternion operator/(const Quaternion& q, double a) {
    return {q.s / a, q.ci / a, q.cj / a, q.ck / a};
}

/// Hamilton product, right-handed: i*j = k, j*k = i, k*i = j.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
    return {p.s * q.s - p.ci * q.ci - p.cj * q.cj - p.ck * q.ck,
            p.s * q.ci + p.ci * q.s + p.cj * q.ck - p.ck * q.cj,
            p.s * q.cj - p.ci * q.ck + p.cj * q.s + p.ck * q.ci,
            p.s * q.ck + p.ci * q.cj - p.cj * q.ci + p.ck * q.s};
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return mul(p, q);
}

constexpr Quaternion conj(const Quaternion& q) {
    return {q.s, -q.ci, -q.cj, -q.ck};
}

constexpr double norm_squared(const Quaternion& q) {
    return q.s * q.s + q.ci * q.ci + q.cj * q.cj + q.ck * q.ck;
}

inline double norm(const Quaternion& q) {
    return std::sqrt(norm_squared(q));
}

/// conj(q) / |q|^2. Throws ZeroQuaternionError when |q| <= kZeroTol.
inline Quaternion inv(const Quaternion& q) {
    const double n2 = norm_squared(q);
    if (n2 <= kZeroTol * kZeroTol) {
        throw ZeroQuaternionError("inv: quaternion norm below zero threshold");
    }
    return conj(q) / n2;
}

/// Embed w = (a, b, c) as the quaternion ja + kb + c (see table above).
constexpr Quaternion embed_vector(const Vec3& w) {
    return {w.z, 0.0, w.x, w.y};
}

/// Inverse of embed_vector for quaternions of the form ja + kb + c; the i
/// coefficient is ignored and must be checked by the caller when it matters.
constexpr Vec3 extract_vector(const Quaternion& q) {
    return {q.cj, q.ck, q.s};
}

/// The decomposition q = x + i*w with w embedded per the table above.
struct SphericalForm {
    double x = 0.0;
    Vec3 w{};
};

/// Extract (x, w) with q = x + i*embed_vector(w); exact componentwise.
constexpr SphericalForm spherical_components(const Quaternion& q) {
    return {q.s, {q.ck, -q.cj, q.ci}};
}

/// Rebuild x + i*embed_vector(w); exact inverse of spherical_components.
constexpr Quaternion from_spherical(double x, const Vec3& w) {
    return {x, w.z, -w.y, w.x};
}

/// u^{-1} v = conj(u) v = u.v - i(u x v) for unit vectors u, v.
/// Throws NotUnitError when either input is not unit within kUnitTol.
inline Quaternion vector_quotient(const Vec3& u, const Vec3& v) {
    if (std::abs(norm(u) - 1.0) > kUnitTol || std::abs(norm(v) - 1.0) > kUnitTol) {
        throw NotUnitError("vector_quotient: inputs must be unit vectors");
    }
    return from_spherical(dot(u, v), -cross(u, v));
}

inline bool approx_equal(const Quaternion& p, const Quaternion& q,
                         double tol = kEqualTol) {
    return std::abs(p.s - q.s) <= tol && std::abs(p.ci - q.ci) <= tol &&
           std::abs(p.cj - q.cj) <= tol && std::abs(p.ck - q.ck) <= tol;
}

/// Norm-1 quaternion, validated on construction and never silently
/// renormalized afterwards.
class UnitQuaternion {
public:
    /// Throws NotUnitError unless | |q| - 1 | <= kUnitTol.
    explicit UnitQuaternion(const Quaternion& q) : q_(q) {
        if (std::abs(norm(q) - 1.0) > kUnitTol) {
            throw NotUnitError("UnitQuaternion: norm differs from 1 beyond tolerance");
        }
    }

    /// Normalizing variant: accepts any non-zero quaternion.
    static UnitQuaternion normalized(const Quaternion& q) {
        const double n = norm(q);
        if (n <= kZeroTol) {
            throw ZeroQuaternionError("UnitQuaternion::normalized: zero quaternion");
        }
        return UnitQuaternion(q / n, Exact{});
    }

    const Quaternion& value() const { return q_; }
    operator const Quaternion&() const { return q_; }

private:
    struct Exact {};
    UnitQuaternion(const Quaternion& q, Exact) : q_(q) {}
    Quaternion q_;
};

inline UnitQuaternion mul(const UnitQuaternion& p, const UnitQuaternion& q) {
    return UnitQuaternion(mul(p.value(), q.value()));
}

inline UnitQuaternion conj(const UnitQuaternion& q) {
    return UnitQuaternion(conj(q.value()));
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.s << " + " << q.ci << "i + " << q.cj << "j + "
              << q.ck << "k)";
}

} // namespace sphvec
