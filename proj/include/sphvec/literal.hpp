#pragma once

#include <string>

#include "sphvec/quaternion.hpp"
#include "sphvec/spherical_vector.hpp"
#include "sphvec/vec3.hpp"

namespace sphvec {

// Literal grammar (whitespace is insignificant everywhere):
//
//   quaternion := [sign] term { sign term }
//   term       := unit | coeff [unit]
//   unit       := 'i' | 'j' | 'k'
//   coeff      := number | 'sqrt(' number ')' [ '/' number ]
//
// so "i", "-1", "2 - j - k" and "sqrt(2)/2 + sqrt(2)/2i" all parse, and the
// square-root form keeps golden inputs exact to the last rounding.
//
//   spherical-vector := '(' real ',' real ',' real ',' real ')'
//   real             := [sign] coeff
//
// listing lambda then the three components of n.

/// 15 significant digits, shortest general form, locale-independent;
/// negative zero prints as "0".
std::string format_real(double v);

/// "(x, y, z)" with format_real components.
std::string format_vec3(const Vec3& v);

/// Sum of the non-zero terms, e.g. "1 + 2i - k"; "0" when all four vanish.
std::string format_quaternion(const Quaternion& q);

/// Parse a single signed coefficient; the whole string must be consumed.
/// Throws ParseError.
double parse_real(const std::string& text);

/// Parse a quaternion literal. Throws ParseError.
Quaternion parse_quaternion(const std::string& text);

/// Parse a spherical-vector literal. Throws ParseError on malformed input
/// and InvariantViolation (from the constructor) off the constraint sphere.
SphericalVector parse_spherical_vector(const std::string& text);

/// Operand of the arc commands: a parenthesized literal is read as a
/// spherical-vector, anything else as a quaternion reduced via arg (which
/// throws ZeroQuaternionError for the zero quaternion).
SphericalVector parse_operand(const std::string& text);

} // namespace sphvec
