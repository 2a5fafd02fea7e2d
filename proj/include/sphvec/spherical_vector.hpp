#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "sphvec/errors.hpp"
#include "sphvec/quaternion.hpp"
#include "sphvec/vec3.hpp"

namespace sphvec {

// Constraint-sphere drift at or below this is kept as-is; between this and
// kUnitTol the components are rescaled onto the constraint; beyond kUnitTol
// construction fails.
inline constexpr double kConstraintKeepTol = 1e-12;

/// Element of the group V: the class of ordered vector pairs with scalar
/// component lambda and vector component n, lambda^2 + ||n||^2 = 1.
class SphericalVector {
public:
    /// Zero element (1, 0).
    SphericalVector() : lambda_(1.0), n_{} {}

    /// Validates lambda^2 + ||n||^2 = 1. Drift in (kConstraintKeepTol,
    /// kUnitTol] is absorbed by rescaling; anything larger throws
    /// InvariantViolation.
    SphericalVector(double lambda, const Vec3& n) : lambda_(lambda), n_(n) {
        const double s = lambda_ * lambda_ + dot(n_, n_);
        const double drift = std::abs(s - 1.0);
        if (drift <= kConstraintKeepTol) {
            return;
        }
        if (drift <= kUnitTol) {
            const double r = std::sqrt(s);
            lambda_ /= r;
            n_ = n_ / r;
            return;
        }
        throw InvariantViolation(
            "SphericalVector: lambda^2 + ||n||^2 differs from 1 beyond tolerance");
    }

    double lambda() const { return lambda_; }
    const Vec3& n() const { return n_; }

private:
    double lambda_;
    Vec3 n_;
};

/// Ordered pair of unit vectors representing a spherical-vector.
struct PairRepresentation {
    Vec3 u;
    Vec3 v;

    PairRepresentation(const Vec3& u_, const Vec3& v_) : u(u_), v(v_) {
        if (std::abs(norm(u) - 1.0) > kUnitTol || std::abs(norm(v) - 1.0) > kUnitTol) {
            throw NotUnitError("PairRepresentation: vectors must be unit");
        }
    }
};

/// Chain (u, v, w) with alpha = (u, v), beta = (v, w), alpha + beta = (u, w).
struct ChainTriple {
    Vec3 u;
    Vec3 v;
    Vec3 w;
};

/// Selects one of the two valid chain combinations; mirrored negates all
/// three vectors of the primary one.
enum class ChainBranch { primary, mirrored };

/// Class of the ordered pair (u, v): lambda = u.v/(|u||v|), n = uxv/(|u||v|).
/// Throws ZeroVectorError when either input norm is <= kZeroTol.
inline SphericalVector from_pair(const Vec3& u, const Vec3& v) {
    const double nu = norm(u);
    const double nv = norm(v);
    if (nu <= kZeroTol || nv <= kZeroTol) {
        throw ZeroVectorError("from_pair: vectors must be non-zero");
    }
    const double scale = nu * nv;
    return SphericalVector(dot(u, v) / scale, cross(u, v) / scale);
}

/// The bijection V -> G, alpha(lambda, n) -> lambda + i*n.
inline UnitQuaternion mu(const SphericalVector& a) {
    return UnitQuaternion(from_spherical(a.lambda(), a.n()));
}

inline SphericalVector mu_inv(const UnitQuaternion& q) {
    const SphericalForm f = spherical_components(q.value());
    return SphericalVector(f.x, f.w);
}

/// Checked convenience overload; throws NotUnitError for non-unit input.
inline SphericalVector mu_inv(const Quaternion& q) {
    return mu_inv(UnitQuaternion(q));
}

inline SphericalVector zero() {
    return SphericalVector(1.0, Vec3{});
}

inline SphericalVector straight() {
    return SphericalVector(-1.0, Vec3{});
}

/// True when the vector component vanishes, i.e. alpha is zero or straight.
inline bool is_degenerate(const SphericalVector& a) {
    return norm(a.n()) <= kZeroTol;
}

/// Transported group law: alpha + beta = mu^{-1}(mu(beta) mu(alpha)).
/// The product order is reversed on purpose; mu is an anti-isomorphism.
inline SphericalVector add(const SphericalVector& a, const SphericalVector& b) {
    return mu_inv(mul(mu(b), mu(a)));
}

/// Group inverse: (lambda, n) -> (lambda, -n).
inline SphericalVector neg(const SphericalVector& a) {
    return SphericalVector(a.lambda(), -a.n());
}

inline SphericalVector operator+(const SphericalVector& a, const SphericalVector& b) {
    return add(a, b);
}

inline SphericalVector operator-(const SphericalVector& a) {
    return neg(a);
}

inline SphericalVector operator-(const SphericalVector& a, const SphericalVector& b) {
    return add(a, neg(b));
}

/// Unit normal of the support plane. Throws DegenerateSupportError for the
/// zero and straight spherical-vectors.
inline Vec3 support_normal(const SphericalVector& a) {
    if (is_degenerate(a)) {
        throw DegenerateSupportError("support_normal: zero or straight spherical-vector");
    }
    return normalize(a.n());
}

namespace detail {

inline void require_in_support(const SphericalVector& a, const Vec3& u,
                               const char* who) {
    if (is_degenerate(a)) {
        throw DegenerateSupportError(std::string(who) +
                                     ": zero or straight spherical-vector");
    }
    if (std::abs(norm(u) - 1.0) > kUnitTol) {
        throw NotUnitError(std::string(who) + ": u must be unit");
    }
    if (std::abs(dot(u, support_normal(a))) > kEqualTol) {
        throw NotInSupportError(std::string(who) + ": u not in the support plane");
    }
}

// Flip sign so the first component larger than kEqualTol in magnitude is
// positive. Both signs span the same line; this fixes the representative.
inline Vec3 canonical_sign(const Vec3& v) {
    double lead = v.x;
    if (std::abs(lead) <= kEqualTol) {
        lead = v.y;
    }
    if (std::abs(lead) <= kEqualTol) {
        lead = v.z;
    }
    return lead < 0.0 ? -v : v;
}

} // namespace detail

/// The unique unit v in the support with alpha = (u, v): v = lambda*u + n x u.
inline Vec3 solve_forward(const SphericalVector& a, const Vec3& u) {
    detail::require_in_support(a, u, "solve_forward");
    return a.lambda() * u + cross(a.n(), u);
}

/// The unique unit w in the support with alpha = (w, u): w = lambda*u - n x u.
inline Vec3 solve_backward(const SphericalVector& a, const Vec3& u) {
    detail::require_in_support(a, u, "solve_backward");
    return a.lambda() * u - cross(a.n(), u);
}

/// Deterministic representative pair (u, v) with from_pair(u, v) = alpha.
/// Non-degenerate: u = orthonormal_to(n), v = lambda*u + n x u. Degenerate:
/// u = e_x, v = lambda*u.
inline PairRepresentation canonical_pair(const SphericalVector& a) {
    if (is_degenerate(a)) {
        return PairRepresentation(e_x, a.lambda() < 0.0 ? -e_x : e_x);
    }
    const Vec3 u = orthonormal_to(a.n());
    return PairRepresentation(u, a.lambda() * u + cross(a.n(), u));
}

/// Three unit vectors (u, v, w) with alpha = (u, v) and beta = (v, w), so
/// that alpha + beta = (u, w).
///
/// Distinct supports: v spans the support intersection, sign-canonicalized
/// (see detail::canonical_sign), then u = lambda_a*v - n_a x v and
/// w = lambda_b*v + n_b x v. Shared support: v = orthonormal_to(n_a).
/// Degenerate beta reuses canonical_pair(alpha): beta zero gives (u, v, v),
/// beta straight gives (u, v, -v); degenerate alpha mirrors this around
/// canonical_pair(beta). The mirrored branch is the negated triple, which
/// represents the same two spherical-vectors.
inline ChainTriple chain_pair(const SphericalVector& a, const SphericalVector& b,
                              ChainBranch branch = ChainBranch::primary) {
    ChainTriple t{};
    if (is_degenerate(b)) {
        const PairRepresentation pa = canonical_pair(a);
        t = {pa.u, pa.v, b.lambda() < 0.0 ? -pa.v : pa.v};
    } else if (is_degenerate(a)) {
        const PairRepresentation pb = canonical_pair(b);
        t = {a.lambda() < 0.0 ? -pb.u : pb.u, pb.u, pb.v};
    } else {
        const Vec3 axis = cross(a.n(), b.n());
        Vec3 v{};
        if (norm(axis) <= kUnitTol * norm(a.n()) * norm(b.n())) {
            v = orthonormal_to(a.n());
        } else {
            v = detail::canonical_sign(normalize(axis));
        }
        t = {a.lambda() * v - cross(a.n(), v), v,
             b.lambda() * v + cross(b.n(), v)};
    }
    if (branch == ChainBranch::mirrored) {
        t = {-t.u, -t.v, -t.w};
    }
    return t;
}

inline bool approx_equal(const SphericalVector& a, const SphericalVector& b,
                         double tol = kEqualTol) {
    return std::abs(a.lambda() - b.lambda()) <= tol && approx_equal(a.n(), b.n(), tol);
}

inline std::ostream& operator<<(std::ostream& os, const SphericalVector& a) {
    return os << "(" << a.lambda() << "; " << a.n() << ")";
}

} // namespace sphvec
