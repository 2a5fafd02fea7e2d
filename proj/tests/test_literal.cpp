#include <cmath>
#include <random>
#include <string>

#include "doctest.h"

#include "sphvec/errors.hpp"
#include "sphvec/literal.hpp"
#include "sphvec/polar.hpp"
#include "sphvec/quaternion.hpp"
#include "sphvec/spherical_vector.hpp"
#include "sphvec/vec3.hpp"

#include "test_support.hpp"

namespace sphvec {
namespace {

using testing::max_abs_diff;
using testing::random_quaternion;

TEST_CASE("parse_quaternion reads worked literals") {
    const double s2 = std::sqrt(2.0);
    const double s6 = std::sqrt(6.0);

    CHECK(max_abs_diff(parse_quaternion("i"), Quaternion::i()) == 0.0);
    CHECK(max_abs_diff(parse_quaternion("-1"), Quaternion{-1.0, 0.0, 0.0, 0.0}) == 0.0);
    CHECK(max_abs_diff(parse_quaternion("0"), Quaternion{}) == 0.0);
    CHECK(max_abs_diff(parse_quaternion("2 - j - k"),
                       Quaternion{2.0, 0.0, -1.0, -1.0}) == 0.0);
    CHECK(max_abs_diff(parse_quaternion("1 + 2i - k"),
                       Quaternion{1.0, 2.0, 0.0, -1.0}) == 0.0);

    // sqrt() coefficients are evaluated with std::sqrt, so the parse is
    // bitwise identical to building the value in code.
    CHECK(max_abs_diff(parse_quaternion("sqrt(2)/2 + sqrt(2)/2 i"),
                       Quaternion{s2 / 2, s2 / 2, 0.0, 0.0}) == 0.0);
    CHECK(max_abs_diff(parse_quaternion("sqrt(6)/3 - sqrt(6)/6 j - sqrt(6)/6 k"),
                       Quaternion{s6 / 3, 0.0, -s6 / 6, -s6 / 6}) == 0.0);

    // Scientific notation, repeated units, and sign runs are all legal.
    CHECK(max_abs_diff(parse_quaternion("2.5e-1k"),
                       Quaternion{0.0, 0.0, 0.0, 0.25}) == 0.0);
    CHECK(max_abs_diff(parse_quaternion("i + i + 1"),
                       Quaternion{1.0, 2.0, 0.0, 0.0}) == 0.0);
    CHECK(max_abs_diff(parse_quaternion("--i"), Quaternion::i()) == 0.0);
    // Whitespace never separates terms, so "1 i" is the single term 1i.
    CHECK(max_abs_diff(parse_quaternion("1 i"), Quaternion::i()) == 0.0);

    // Whitespace is insignificant everywhere, even inside sqrt().
    CHECK(max_abs_diff(parse_quaternion(" sqrt( 2 ) / 2\t+ sqrt(2)/2 i "),
                       parse_quaternion("sqrt(2)/2+sqrt(2)/2i")) == 0.0);
}

TEST_CASE("parse_quaternion rejects malformed literals") {
    CHECK_THROWS_AS(parse_quaternion(""), ParseError);
    CHECK_THROWS_AS(parse_quaternion("   "), ParseError);
    CHECK_THROWS_AS(parse_quaternion("q"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("i j"), ParseError);   // missing sign
    CHECK_THROWS_AS(parse_quaternion("1 +"), ParseError);   // dangling sign
    CHECK_THROWS_AS(parse_quaternion("1/2"), ParseError);   // plain fractions
    CHECK_THROWS_AS(parse_quaternion("2sqrt(2)"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("sqrt(2"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("sqrt(-2)"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("sqrt(2)/0"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("(1, 0, 0, 0)"), ParseError);
}

TEST_CASE("parse_real") {
    CHECK(parse_real("0.5") == 0.5);
    CHECK(parse_real("1e-3") == 1e-3);
    CHECK(parse_real("-sqrt(3)/2") == -std::sqrt(3.0) / 2);
    CHECK_THROWS_AS(parse_real(""), ParseError);
    CHECK_THROWS_AS(parse_real("abc"), ParseError);
    CHECK_THROWS_AS(parse_real("1,2"), ParseError);
}

TEST_CASE("format_real uses 15 significant digits") {
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(1.0) == "1");
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(-2.5) == "-2.5");
    CHECK(format_real(300.0) == "300");
    CHECK(format_real(1e-5) == "1e-05");
    CHECK(format_real(std::sqrt(2.0) / 2) == "0.707106781186548");

    // 15 significant digits keep the relative round-trip error far below
    // every tolerance used by the checks.
    std::mt19937_64 rng(501);
    std::uniform_real_distribution<double> mag(-10.0, 10.0);
    for (int iter = 0; iter < 500; ++iter) {
        const double x = mag(rng) * std::pow(10.0, iter % 9 - 4);
        const double back = parse_real(format_real(x));
        CHECK(std::abs(back - x) <= 1e-14 * std::abs(x));
    }
}

TEST_CASE("format_vec3") {
    CHECK(format_vec3(e_x) == "(1, 0, 0)");
    CHECK(format_vec3(Vec3{0.0, 0.5, -1.0}) == "(0, 0.5, -1)");
}

TEST_CASE("format_quaternion") {
    CHECK(format_quaternion(Quaternion{}) == "0");
    CHECK(format_quaternion(Quaternion::one()) == "1");
    CHECK(format_quaternion(Quaternion{-1.0, 0.0, 0.0, 0.0}) == "-1");
    CHECK(format_quaternion(Quaternion::i()) == "i");
    CHECK(format_quaternion(-Quaternion::i()) == "-i");
    CHECK(format_quaternion(Quaternion{1.0, 2.0, 0.0, -1.0}) == "1 + 2i - k");
    CHECK(format_quaternion(Quaternion{0.0, 0.0, 0.5, 0.0}) == "0.5j");
    CHECK(format_quaternion(Quaternion{-2.0, 0.0, 0.0, 1.0}) == "-2 + k");

    // Formatting then parsing reproduces the quaternion to working precision.
    std::mt19937_64 rng(502);
    for (int iter = 0; iter < 500; ++iter) {
        const Quaternion q = random_quaternion(rng);
        const Quaternion back = parse_quaternion(format_quaternion(q));
        CHECK(max_abs_diff(back, q) <= 1e-13);
    }
}

TEST_CASE("parse_spherical_vector") {
    const double s2 = std::sqrt(2.0);

    CHECK(max_abs_diff(parse_spherical_vector("(0, 0, 0, 1)"),
                       SphericalVector(0.0, e_z)) == 0.0);
    CHECK(max_abs_diff(parse_spherical_vector("(1, 0, 0, 0)"), zero()) == 0.0);
    CHECK(max_abs_diff(parse_spherical_vector("(-1, 0, 0, 0)"), straight()) == 0.0);

    // The constraint residual of (sqrt(2)/2)^2 * 2 is one ulp, inside the
    // keep band, so the stored components are bitwise what was written.
    const SphericalVector half = parse_spherical_vector("(sqrt(2)/2, 0, 0, sqrt(2)/2)");
    CHECK(half.lambda() == s2 / 2);
    CHECK(half.n().z == s2 / 2);

    CHECK_THROWS_AS(parse_spherical_vector("(0, 0, 0)"), ParseError);
    CHECK_THROWS_AS(parse_spherical_vector("1, 0, 0, 0"), ParseError);
    CHECK_THROWS_AS(parse_spherical_vector("(1, 0, 0, 0)x"), ParseError);
    CHECK_THROWS_AS(parse_spherical_vector("(0.8, 0, 0, 0.7)"), InvariantViolation);
}

TEST_CASE("parse_operand accepts both literal forms") {
    const SphericalVector quarter(0.0, e_z);
    CHECK(max_abs_diff(parse_operand("(0, 0, 0, 1)"), quarter) == 0.0);
    CHECK(max_abs_diff(parse_operand("i"), quarter) == 0.0);
    // Magnitude is discarded: the argument of 2i is the argument of i.
    CHECK(max_abs_diff(parse_operand("2i"), quarter) == 0.0);

    CHECK_THROWS_AS(parse_operand("0"), ZeroQuaternionError);
    CHECK_THROWS_AS(parse_operand("(0.8, 0, 0, 0.7)"), InvariantViolation);
    CHECK_THROWS_AS(parse_operand("nope"), ParseError);
}

} // namespace
} // namespace sphvec
