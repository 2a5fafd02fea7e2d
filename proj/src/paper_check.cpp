#include "sphvec/paper_check.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "sphvec/errors.hpp"
#include "sphvec/literal.hpp"
#include "sphvec/polar.hpp"
#include "sphvec/quaternion.hpp"
#include "sphvec/scene.hpp"
#include "sphvec/spherical_vector.hpp"
#include "sphvec/vec3.hpp"

namespace sphvec {

namespace {

// Shared worked values. p and q are the two unit quaternions whose product
// geometry drives the chain checks; h = qp. u55/v55 is the worked vector
// pair; the chain points are the two canonical three-vector chains.
const double s2 = std::sqrt(2.0);
const double s3 = std::sqrt(3.0);
const double s6 = std::sqrt(6.0);

const Quaternion p_ref{2 * s6 / 6, 0.0, -s6 / 6, -s6 / 6};
const Quaternion q_ref{s2 / 2, s2 / 2, 0.0, 0.0};
const Quaternion h_ref{s3 / 3, s3 / 3, 0.0, -s3 / 3};

const Vec3 u55{s2 / 2, s2 / 2, 0.0};
const Vec3 v55{s3 / 3, s3 / 3, s3 / 3};

const Vec3 chain_u{s3 / 3, s3 / 3, s3 / 3};
const Vec3 chain_v{s2 / 2, s2 / 2, 0.0};
const Vec3 chain_w2{s3 / 3, s3 / 3, -s3 / 3};

SphericalVector alpha_p() { return SphericalVector(s6 / 3, {-s6 / 6, s6 / 6, 0.0}); }
SphericalVector alpha_q() { return SphericalVector(s2 / 2, {0.0, 0.0, s2 / 2}); }

/// What one case reports back: its worst deviation, or a hard failure with
/// an explanation (used when a required exception did not fire).
struct CaseOutcome {
    double max_error = 0.0;
    bool forced_fail = false;
    std::string message;
};

CaseOutcome ok(double err) { return {err, false, {}}; }
CaseOutcome bad(std::string message) { return {0.0, true, std::move(message)}; }

double err(double a, double b) { return std::abs(a - b); }

double err(const Vec3& a, const Vec3& b) {
    return std::max({err(a.x, b.x), err(a.y, b.y), err(a.z, b.z)});
}

double err(const Quaternion& a, const Quaternion& b) {
    return std::max({err(a.s, b.s), err(a.ci, b.ci), err(a.cj, b.cj),
                     err(a.ck, b.ck)});
}

double err(const SphericalVector& a, const SphericalVector& b) {
    return std::max(err(a.lambda(), b.lambda()), err(a.n(), b.n()));
}

struct Entry {
    const char* name;
    CaseOutcome (*fn)();
};

const Entry kCases[] = {
    // Vector algebra on the worked pair.
    {"dot-worked-pair", [] { return ok(err(dot(u55, v55), s6 / 3)); }},
    {"cross-worked-pair",
     [] { return ok(err(cross(u55, v55), Vec3{s6 / 6, -s6 / 6, 0.0})); }},

    // Quaternion arithmetic.
    {"product-ki",
     [] { return ok(err(mul(Quaternion::k(), Quaternion::i()), Quaternion::j())); }},
    {"product-qp", [] { return ok(err(mul(q_ref, p_ref), h_ref)); }},
    {"norm-unit-q", [] { return ok(err(norm(q_ref), 1.0)); }},
    {"inverse-unit-is-conj", [] { return ok(err(inv(q_ref), conj(q_ref))); }},
    {"embed-ex", [] { return ok(err(embed_vector(e_x), Quaternion::j())); }},
    {"embed-ey", [] { return ok(err(embed_vector(e_y), Quaternion::k())); }},
    {"split-i",
     [] {
         const SphericalForm f = spherical_components(Quaternion::i());
         return ok(std::max(err(f.x, 0.0), err(f.w, e_z)));
     }},
    {"split-p",
     [] {
         const SphericalForm f = spherical_components(p_ref);
         return ok(std::max(err(f.x, s6 / 3), err(f.w, Vec3{-s6 / 6, s6 / 6, 0.0})));
     }},
    {"join-i", [] { return ok(err(from_spherical(0.0, e_z), Quaternion::i())); }},
    {"join-q",
     [] { return ok(err(from_spherical(s2 / 2, {0.0, 0.0, s2 / 2}), q_ref)); }},

    // Spherical-vector classes and the transported group law.
    {"class-worked-pair",
     [] {
         return ok(err(from_pair(u55, v55),
                       SphericalVector(s6 / 3, {s6 / 6, -s6 / 6, 0.0})));
     }},
    {"class-repeated-vector", [] { return ok(err(from_pair(v55, v55), zero())); }},
    {"class-opposite-vector",
     [] { return ok(err(from_pair(v55, -v55), straight())); }},
    {"mu-straight-components",
     [] {
         return ok(err(mu(SphericalVector(-1.0, Vec3{})).value(),
                       -Quaternion::one()));
     }},
    {"mu-quarter-ez",
     [] { return ok(err(mu(SphericalVector(0.0, e_z)).value(), Quaternion::i())); }},
    {"mu-inv-q",
     [] {
         return ok(err(mu_inv(q_ref), SphericalVector(s2 / 2, {0.0, 0.0, s2 / 2})));
     }},
    {"mu-inv-j",
     [] {
         return ok(err(mu_inv(Quaternion::j()),
                       SphericalVector(0.0, {0.0, -1.0, 0.0})));
     }},
    {"add-quarters-ik",
     [] {
         return ok(err(add(mu_inv(Quaternion::i()), mu_inv(Quaternion::k())),
                       mu_inv(Quaternion::j())));
     }},
    {"add-worked-args",
     [] { return ok(err(add(mu_inv(p_ref), mu_inv(q_ref)), mu_inv(h_ref))); }},
    {"mu-zero", [] { return ok(err(mu(zero()).value(), Quaternion::one())); }},
    {"class-ex-ex", [] { return ok(err(from_pair(e_x, e_x), zero())); }},
    {"straight-components",
     [] { return ok(err(straight(), SphericalVector(-1.0, Vec3{}))); }},
    {"mu-straight", [] { return ok(err(mu(straight()).value(), -Quaternion::one())); }},
    {"support-of-zero-throws",
     [] {
         try {
             support_normal(zero());
         } catch (const DegenerateSupportError&) {
             return ok(0.0);
         }
         return bad("support_normal(zero()) did not throw DegenerateSupportError");
     }},
    {"forward-quarter-ez",
     [] { return ok(err(solve_forward(mu_inv(Quaternion::i()), e_x), e_y)); }},
    {"forward-quarter-ex",
     [] { return ok(err(solve_forward(mu_inv(Quaternion::k()), e_y), e_z)); }},
    {"backward-worked",
     [] { return ok(err(solve_backward(alpha_p(), chain_v), chain_u)); }},
    {"canonical-zero",
     [] {
         const PairRepresentation pr = canonical_pair(zero());
         return ok(err(pr.u, pr.v));
     }},
    {"canonical-straight",
     [] {
         const PairRepresentation pr = canonical_pair(straight());
         return ok(err(pr.u, -pr.v));
     }},
    {"chain-p-q",
     [] {
         const ChainTriple c = chain_pair(alpha_p(), alpha_q());
         return ok(std::max({err(c.u, chain_u), err(c.v, chain_v), err(c.w, e_y)}));
     }},
    {"chain-q-p",
     [] {
         const ChainTriple c = chain_pair(alpha_q(), alpha_p());
         return ok(std::max({err(c.u, e_x), err(c.v, chain_v), err(c.w, chain_w2)}));
     }},

    // Arguments, polar form, exponential notation.
    {"arg-i",
     [] {
         const double e1 = err(arg(Quaternion::i()), SphericalVector(0.0, e_z));
         const PairRepresentation pr = argument_pair(Quaternion::i());
         return ok(std::max({e1, err(pr.u, e_x), err(pr.v, e_y)}));
     }},
    {"arg-minus-one",
     [] { return ok(err(arg(-Quaternion::one()), straight())); }},
    {"cos-sin-worked",
     [] {
         const SphericalVector a = from_pair(u55, v55);
         return ok(std::max(err(cos_sv(a), s6 / 3),
                            err(sin_sv(a), Vec3{s6 / 6, -s6 / 6, 0.0})));
     }},
    {"exp-straight",
     [] { return ok(err(exp_i(straight()).value(), -Quaternion::one())); }},
    {"exp-arg-i",
     [] { return ok(err(exp_i(arg(Quaternion::i())).value(), Quaternion::i())); }},
    {"pair-of-i",
     [] {
         const PairRepresentation pr = argument_pair(Quaternion::i());
         return ok(std::max(err(pr.u, e_x), err(pr.v, e_y)));
     }},
    {"pair-of-j",
     [] {
         const PairRepresentation pr = argument_pair(Quaternion::j());
         return ok(std::max(err(pr.u, e_x), err(pr.v, e_z)));
     }},
    {"pair-of-k",
     [] {
         const PairRepresentation pr = argument_pair(Quaternion::k());
         return ok(std::max(err(pr.u, e_y), err(pr.v, e_z)));
     }},

    // The same values reached through the literal front-end.
    {"cli-arg-i",
     [] {
         const SphericalVector a = parse_operand("i");
         const PairRepresentation pr = argument_pair(parse_quaternion("i"));
         return ok(std::max({err(a, SphericalVector(0.0, e_z)), err(pr.u, e_x),
                             err(pr.v, e_y)}));
     }},
    {"cli-arg-minus-one", [] { return ok(err(parse_operand("-1"), straight())); }},
    {"cli-add-worked",
     [] {
         const SphericalVector a =
             parse_operand("sqrt(6)/3 - sqrt(6)/6 j - sqrt(6)/6 k");
         const SphericalVector b = parse_operand("sqrt(2)/2 + sqrt(2)/2 i");
         const double e1 = err(add(a, b), mu_inv(h_ref));
         const ChainTriple c = chain_pair(a, b);
         return ok(std::max(e1, err(c.v, chain_v)));
     }},
    {"cli-add-quarters",
     [] {
         const SphericalVector a = parse_operand("i");
         const SphericalVector b = parse_operand("k");
         return ok(err(add(a, b), parse_operand("j")));
     }},

    // Figure content.
    {"figure-basis-content",
     [] {
         const Scene s = make_figure("fig6");
         if (s.points.size() != 3 || s.arcs.size() != 3) {
             return bad("fig6 must have 3 points and 3 arcs");
         }
         if (s.arcs[0].from != 0 || s.arcs[0].to != 1 || s.arcs[1].from != 1 ||
             s.arcs[1].to != 2 || s.arcs[2].from != 0 || s.arcs[2].to != 2) {
             return bad("fig6 arcs must chain e_x -> e_y -> e_z plus e_x -> e_z");
         }
         return ok(std::max({err(s.points[0].pos, e_x), err(s.points[1].pos, e_y),
                             err(s.points[2].pos, e_z)}));
     }},
    {"figure-products-content",
     [] {
         const Scene s = make_figure("fig8");
         if (s.points.size() != 5) {
             return bad("fig8 must have 5 points");
         }
         return ok(std::max({err(s.points[0].pos, chain_u),
                             err(s.points[1].pos, chain_v),
                             err(s.points[2].pos, e_y),
                             err(s.points[3].pos, e_x),
                             err(s.points[4].pos, chain_w2)}));
     }},
};

} // namespace

bool CheckReport::all_passed() const {
    return passed_count() == results.size();
}

std::size_t CheckReport::passed_count() const {
    std::size_t count = 0;
    for (const CheckResult& r : results) {
        count += r.passed ? 1 : 0;
    }
    return count;
}

CheckReport run_paper_check(double tolerance) {
    CheckReport report;
    report.tolerance = tolerance;
    for (const Entry& entry : kCases) {
        CheckResult result;
        result.name = entry.name;
        try {
            const CaseOutcome outcome = entry.fn();
            result.max_error = outcome.max_error;
            if (outcome.forced_fail) {
                result.passed = false;
                result.message = outcome.message;
            } else {
                result.passed = outcome.max_error <= tolerance;
                if (!result.passed) {
                    result.message = "max error " + format_real(outcome.max_error) +
                                     " exceeds tolerance " + format_real(tolerance);
                }
            }
        } catch (const std::exception& e) {
            result.passed = false;
            result.message = std::string("unexpected exception: ") + e.what();
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

std::vector<std::string> paper_check_names() {
    std::vector<std::string> names;
    names.reserve(std::size(kCases));
    for (const Entry& entry : kCases) {
        names.emplace_back(entry.name);
    }
    return names;
}

std::string report_to_text(const CheckReport& report) {
    std::string out;
    for (const CheckResult& r : report.results) {
        out += r.passed ? "PASS " : "FAIL ";
        out += r.name;
        if (!r.passed && !r.message.empty()) {
            out += " (" + r.message + ")";
        }
        out += "\n";
    }
    out += std::to_string(report.passed_count()) + "/" +
           std::to_string(report.results.size()) + " checks passed at tolerance " +
           format_real(report.tolerance) + "\n";
    return out;
}

nlohmann::ordered_json report_to_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["tolerance"] = report.tolerance;
    j["total"] = report.results.size();
    j["passed"] = report.passed_count();
    j["failed"] = report.results.size() - report.passed_count();
    j["cases"] = nlohmann::ordered_json::array();
    for (const CheckResult& r : report.results) {
        nlohmann::ordered_json jc;
        jc["name"] = r.name;
        jc["passed"] = r.passed;
        jc["max_error"] = r.max_error;
        jc["message"] = r.message;
        j["cases"].push_back(std::move(jc));
    }
    return j;
}

} // namespace sphvec
