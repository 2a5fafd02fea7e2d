#include "sphvec/literal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <string>

#include "sphvec/errors.hpp"
#include "sphvec/polar.hpp"

namespace sphvec {

namespace {

std::string strip_whitespace(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

[[noreturn]] void fail(const std::string& text, std::size_t pos, const std::string& what) {
    throw ParseError("cannot parse \"" + text + "\": " + what + " at offset " +
                     std::to_string(pos));
}

/// Cursor over a whitespace-stripped literal.
class Scanner {
public:
    explicit Scanner(std::string text) : text_(std::move(text)) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) {
            fail(text_, pos_, std::string("expected ") + what);
        }
    }

    /// -1.0 or +1.0 from an optional run of sign characters.
    double optional_sign() {
        double sign = 1.0;
        while (peek() == '+' || peek() == '-') {
            if (text_[pos_] == '-') {
                sign = -sign;
            }
            ++pos_;
        }
        return sign;
    }

    /// One sign character, required. Used between terms.
    double require_sign() {
        if (peek() != '+' && peek() != '-') {
            fail(text_, pos_, "expected '+' or '-' between terms");
        }
        return optional_sign();
    }

    bool at_number() const {
        const char c = peek();
        return (c >= '0' && c <= '9') || c == '.';
    }

    bool at_sqrt() const { return text_.compare(pos_, 5, "sqrt(") == 0; }

    /// Unsigned decimal number via from_chars (no sign, no leading '+').
    double number() {
        double value = 0.0;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr == begin) {
            fail(text_, pos_, "expected a number");
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    /// coeff := number | 'sqrt(' digits ')' [ '/' number ]
    double coefficient() {
        if (at_sqrt()) {
            pos_ += 5;
            if (!at_number()) {
                fail(text_, pos_, "expected a number inside sqrt()");
            }
            const double radicand = number();
            expect(')', "')'");
            double value = std::sqrt(radicand);
            if (accept('/')) {
                if (!at_number()) {
                    fail(text_, pos_, "expected a denominator after '/'");
                }
                const double denom = number();
                if (denom == 0.0) {
                    fail(text_, pos_, "division by zero");
                }
                value /= denom;
            }
            return value;
        }
        if (!at_number()) {
            fail(text_, pos_, "expected a coefficient");
        }
        return number();
    }

    /// real := [sign] coeff, consuming the whole remaining text not required.
    double signed_coefficient() { return optional_sign() * coefficient(); }

    void expect_done() {
        if (!done()) {
            fail(text_, pos_, "unexpected trailing input");
        }
    }

    std::size_t position() const { return pos_; }
    const std::string& text() const { return text_; }

private:
    std::string text_;
    std::size_t pos_ = 0;
};

/// Adds sign * coeff * unit to q; unit '\0' means the real term.
void add_term(Quaternion& q, double value, char unit, Scanner& sc) {
    switch (unit) {
    case '\0': q.s += value; return;
    case 'i': q.ci += value; return;
    case 'j': q.cj += value; return;
    case 'k': q.ck += value; return;
    default: fail(sc.text(), sc.position(), "internal: bad unit");
    }
}

} // namespace

std::string format_real(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
    if (ec != std::errc{}) {
        throw Error("format_real: conversion failed");
    }
    return std::string(buf, ptr);
}

std::string format_vec3(const Vec3& v) {
    return "(" + format_real(v.x) + ", " + format_real(v.y) + ", " +
           format_real(v.z) + ")";
}

std::string format_quaternion(const Quaternion& q) {
    const double comps[4] = {q.s, q.ci, q.cj, q.ck};
    const char* units[4] = {"", "i", "j", "k"};
    std::string out;
    for (int t = 0; t < 4; ++t) {
        const double c = comps[t];
        if (c == 0.0) {
            continue;
        }
        if (out.empty()) {
            out += c < 0.0 ? "-" : "";
        } else {
            out += c < 0.0 ? " - " : " + ";
        }
        const double mag = std::abs(c);
        if (mag != 1.0 || t == 0) {
            out += format_real(mag);
        }
        out += units[t];
    }
    return out.empty() ? "0" : out;
}

double parse_real(const std::string& text) {
    Scanner sc(strip_whitespace(text));
    if (sc.done()) {
        throw ParseError("cannot parse an empty string as a number");
    }
    const double value = sc.signed_coefficient();
    sc.expect_done();
    return value;
}

Quaternion parse_quaternion(const std::string& text) {
    Scanner sc(strip_whitespace(text));
    if (sc.done()) {
        throw ParseError("cannot parse an empty string as a quaternion");
    }
    Quaternion q{};
    bool first = true;
    while (!sc.done()) {
        const double sign = first ? sc.optional_sign() : sc.require_sign();
        first = false;
        const char c = sc.peek();
        if (c == 'i' || c == 'j' || c == 'k') {
            // Bare unit term: "i", "-k", ...
            sc.accept(c);
            add_term(q, sign, c, sc);
            continue;
        }
        const double value = sign * sc.coefficient();
        const char u = sc.peek();
        if (u == 'i' || u == 'j' || u == 'k') {
            sc.accept(u);
            add_term(q, value, u, sc);
        } else {
            add_term(q, value, '\0', sc);
        }
    }
    return q;
}

SphericalVector parse_spherical_vector(const std::string& text) {
    Scanner sc(strip_whitespace(text));
    sc.expect('(', "'('");
    const double lambda = sc.signed_coefficient();
    sc.expect(',', "','");
    const double nx = sc.signed_coefficient();
    sc.expect(',', "','");
    const double ny = sc.signed_coefficient();
    sc.expect(',', "','");
    const double nz = sc.signed_coefficient();
    sc.expect(')', "')'");
    sc.expect_done();
    return SphericalVector(lambda, Vec3{nx, ny, nz});
}

SphericalVector parse_operand(const std::string& text) {
    const std::string stripped = strip_whitespace(text);
    if (!stripped.empty() && stripped.front() == '(') {
        return parse_spherical_vector(stripped);
    }
    return arg(parse_quaternion(stripped));
}

} // namespace sphvec
