#pragma once

#include <cmath>
#include <cstdlib>

#include "sphvec/errors.hpp"
#include "sphvec/quaternion.hpp"
#include "sphvec/spherical_vector.hpp"
#include "sphvec/vec3.hpp"

namespace sphvec {

/// arg(q) = mu^{-1}(q / |q|). Throws ZeroQuaternionError when |q| <= kZeroTol.
inline SphericalVector arg(const Quaternion& q) {
    const double n = norm(q);
    if (n <= kZeroTol) {
        throw ZeroQuaternionError("arg: zero quaternion has no argument");
    }
    return mu_inv(UnitQuaternion::normalized(q));
}

/// Scalar component lambda.
inline double cos_sv(const SphericalVector& a) {
    return a.lambda();
}

/// Vector component n.
inline Vec3 sin_sv(const SphericalVector& a) {
    return a.n();
}

/// q = r * (cos(arg) + i sin(arg)) with r = |q|.
struct PolarForm {
    double r = 1.0;
    SphericalVector argument{};
};

inline PolarForm polar(const Quaternion& q) {
    const double n = norm(q);
    if (n <= kZeroTol) {
        throw ZeroQuaternionError("polar: zero quaternion has no polar form");
    }
    return {n, arg(q)};
}

inline Quaternion to_quaternion(const PolarForm& p) {
    return p.r * from_spherical(cos_sv(p.argument), sin_sv(p.argument));
}

/// The unit quaternion whose argument is alpha; coincides with mu(alpha).
inline UnitQuaternion exp_i(const SphericalVector& a) {
    return mu(a);
}

/// m-fold sum of alpha (iterated addition; empty sum is zero(), negative m
/// goes through neg).
inline SphericalVector scale_arg(const SphericalVector& a, int m) {
    const SphericalVector step = m < 0 ? neg(a) : a;
    SphericalVector acc = zero();
    for (int r = std::abs(m); r > 0; --r) {
        acc = add(acc, step);
    }
    return acc;
}

/// Deterministic pair (u, v) representing arg(q), built from the spherical
/// components (x, omega) of q/|q|:
///   omega = 0:  u = e_x, v = x*u  (q real: zero or straight argument);
///   else:       u = orthonormal_to(omega), v = x*u + omega x u.
/// The second route v = u * conj(q/|q|) is evaluated as a consistency check.
inline PairRepresentation argument_pair(const Quaternion& q) {
    const double nq = norm(q);
    if (nq <= kZeroTol) {
        throw ZeroQuaternionError("argument_pair: zero quaternion has no argument");
    }
    const Quaternion qn = q / nq;
    const SphericalForm f = spherical_components(qn);
    if (norm(f.w) <= kZeroTol) {
        return PairRepresentation(e_x, f.x < 0.0 ? -e_x : e_x);
    }
    const Vec3 u = orthonormal_to(f.w);
    const Vec3 v = f.x * u + cross(f.w, u);
    const Quaternion alt = mul(embed_vector(u), conj(qn));
    if (!approx_equal(v, extract_vector(alt), 1e-12) || std::abs(alt.ci) > 1e-12) {
        throw InvariantViolation("argument_pair: construction routes disagree");
    }
    return PairRepresentation(u, v);
}

} // namespace sphvec
