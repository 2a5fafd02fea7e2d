// Acceptance gate: ten numbered criteria, one PASS/FAIL line each. The
// process exit code is the number of failed criteria, so 0 means the build
// is accepted. Tolerances are pinned here on purpose; loosening them is a
// behavior change, not a cleanup.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

#include "sphvec/errors.hpp"
#include "sphvec/literal.hpp"
#include "sphvec/paper_check.hpp"
#include "sphvec/polar.hpp"
#include "sphvec/quaternion.hpp"
#include "sphvec/scene.hpp"
#include "sphvec/spherical_vector.hpp"
#include "sphvec/vec3.hpp"

#include "test_support.hpp"

namespace {

using namespace sphvec;
using testing::max_abs_diff;
using testing::random_spherical_vector;
using testing::random_unit_quaternion;
using testing::random_unit_vec;
using testing::random_vec;

constexpr int kIterations = 10000;

constexpr double kTolWorked = 1e-12;     // criterion 1
constexpr double kTolExact = 1e-15;      // criteria 2 and 3
constexpr double kTolAntiIso = 1e-12;    // criterion 4
constexpr double kTolGroup = 1e-9;       // criteria 5 and 6
constexpr double kNonCommuteGap = 1e-6;  // criterion 5 witness threshold
constexpr double kTolExp = 1e-12;        // criterion 7
constexpr double kTolRoundtrip = 1e-12;  // criterion 8
constexpr double kTolIdentity = 1e-12;   // criterion 9

const double s2 = std::sqrt(2.0);
const double s3 = std::sqrt(3.0);
const double s6 = std::sqrt(6.0);

/// Worst absolute component difference folded over a whole criterion.
struct ErrorMax {
    double value = 0.0;
    void fold(double e) { value = std::max(value, e); }
    void fold(const Quaternion& a, const Quaternion& b) { fold(max_abs_diff(a, b)); }
    void fold(const Vec3& a, const Vec3& b) { fold(max_abs_diff(a, b)); }
    void fold(const SphericalVector& a, const SphericalVector& b) {
        fold(max_abs_diff(a, b));
    }
};

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(3);
    out << v;
    return out.str();
}

int failures = 0;

void report(int index, const std::string& name, bool passed,
            const std::string& detail) {
    if (!passed) {
        ++failures;
    }
    std::printf("%s criterion %2d: %s (%s)\n", passed ? "PASS" : "FAIL", index,
                name.c_str(), detail.c_str());
}

// ---------------------------------------------------------------------------
// 1. The worked products and both connecting chains, under 1 ms.

void criterion_worked_products() {
    const auto t0 = std::chrono::steady_clock::now();
    ErrorMax err;

    const Quaternion p = (s6 / 6) * Quaternion{2.0, 0.0, -1.0, -1.0};
    const Quaternion q = (s2 / 2) * Quaternion{1.0, 1.0, 0.0, 0.0};
    err.fold(mul(q, p), Quaternion{s3 / 3, s3 / 3, 0.0, -s3 / 3});
    err.fold(mul(p, q), Quaternion{s3 / 3, s3 / 3, -s3 / 3, 0.0});

    const SphericalVector ap = arg(p);
    const SphericalVector aq = arg(q);
    const ChainTriple first = chain_pair(ap, aq);
    err.fold(first.u, Vec3{s3 / 3, s3 / 3, s3 / 3});
    err.fold(first.v, Vec3{s2 / 2, s2 / 2, 0.0});
    err.fold(first.w, e_y);
    const ChainTriple second = chain_pair(aq, ap);
    err.fold(second.u, e_x);
    err.fold(second.v, Vec3{s2 / 2, s2 / 2, 0.0});
    err.fold(second.w, Vec3{s3 / 3, s3 / 3, -s3 / 3});

    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    report(1, "worked products and chains",
           err.value <= kTolWorked && ms < 1.0,
           "max error " + fmt(err.value) + ", " + fmt(ms) + " ms");
}

// ---------------------------------------------------------------------------
// 2. Representative pairs of the three imaginary units.

void criterion_basis_pairs() {
    ErrorMax err;
    const PairRepresentation of_i = argument_pair(Quaternion::i());
    err.fold(of_i.u, e_x);
    err.fold(of_i.v, e_y);
    const PairRepresentation of_j = argument_pair(Quaternion::j());
    err.fold(of_j.u, e_x);
    err.fold(of_j.v, e_z);
    const PairRepresentation of_k = argument_pair(Quaternion::k());
    err.fold(of_k.u, e_y);
    err.fold(of_k.v, e_z);
    report(2, "representative pairs of the unit quaternions i, j, k",
           err.value <= kTolExact, "max error " + fmt(err.value));
}

// ---------------------------------------------------------------------------
// 3. Scalar and vector components of the worked ordered pair.

void criterion_worked_class() {
    const SphericalVector a =
        from_pair(Vec3{s2 / 2, s2 / 2, 0.0}, Vec3{s3 / 3, s3 / 3, s3 / 3});
    ErrorMax err;
    err.fold(std::abs(a.lambda() - s6 / 3));
    err.fold(a.n(), Vec3{s6 / 6, -s6 / 6, 0.0});
    report(3, "class components of the worked vector pair",
           err.value <= kTolExact, "max error " + fmt(err.value));
}

// ---------------------------------------------------------------------------
// 4. The map to unit quaternions reverses the operation order.

void criterion_anti_isomorphism() {
    std::mt19937_64 rng(1004);
    ErrorMax err;
    for (int iter = 0; iter < kIterations; ++iter) {
        const SphericalVector a = mu_inv(random_unit_quaternion(rng));
        const SphericalVector b = mu_inv(random_unit_quaternion(rng));
        err.fold(mu(add(a, b)), mul(mu(b), mu(a)));
    }
    // Named instance: ki = j on one side, the argument sum on the other.
    err.fold(mul(Quaternion::k(), Quaternion::i()), Quaternion::j());
    err.fold(add(arg(Quaternion::i()), arg(Quaternion::k())),
             arg(Quaternion::j()));
    report(4, "order-reversing correspondence with quaternion products",
           err.value <= kTolAntiIso, "max error " + fmt(err.value));
}

// ---------------------------------------------------------------------------
// 5. Group axioms, plus a witness that the group is not commutative.

void criterion_group_axioms() {
    std::mt19937_64 rng(1005);
    ErrorMax err;
    int non_commuting = 0;
    for (int iter = 0; iter < kIterations; ++iter) {
        const SphericalVector a = random_spherical_vector(rng);
        const SphericalVector b = random_spherical_vector(rng);
        const SphericalVector c = random_spherical_vector(rng);
        err.fold(add(add(a, b), c), add(a, add(b, c)));
        err.fold(add(a, zero()), a);
        err.fold(add(zero(), a), a);
        err.fold(add(a, neg(a)), zero());
        err.fold(add(neg(a), a), zero());
        if (max_abs_diff(add(a, b), add(b, a)) > kNonCommuteGap) {
            ++non_commuting;
        }
    }
    const bool witnessed = non_commuting >= (99 * kIterations) / 100;
    report(5, "group axioms and non-commutativity",
           err.value <= kTolGroup && witnessed,
           "max error " + fmt(err.value) + ", " +
               std::to_string(non_commuting) + "/" +
               std::to_string(kIterations) + " pairs non-commuting");
}

// ---------------------------------------------------------------------------
// 6. Concatenation of arcs: (u,v) + (v,w) = (u,w).

void criterion_concatenation() {
    std::mt19937_64 rng(1006);
    ErrorMax err;
    for (int iter = 0; iter < kIterations; ++iter) {
        const Vec3 u = random_unit_vec(rng);
        const Vec3 v = random_unit_vec(rng);
        const Vec3 w = random_unit_vec(rng);
        err.fold(add(from_pair(u, v), from_pair(v, w)), from_pair(u, w));
    }
    report(6, "arc concatenation across a shared middle vector",
           err.value <= kTolGroup, "max error " + fmt(err.value));
}

// ---------------------------------------------------------------------------
// 7. The six exponential laws, the last one for every m in [-5, 5].

Quaternion integer_power(const UnitQuaternion& q, int m) {
    const Quaternion factor = m < 0 ? inv(q.value()) : q.value();
    Quaternion acc = Quaternion::one();
    for (int t = 0; t < std::abs(m); ++t) {
        acc = mul(acc, factor);
    }
    return acc;
}

void criterion_exponential_laws() {
    std::mt19937_64 rng(1007);
    ErrorMax err;
    err.fold(exp_i(straight()), Quaternion{-1.0, 0.0, 0.0, 0.0});
    for (int iter = 0; iter < kIterations; ++iter) {
        const SphericalVector a = random_spherical_vector(rng);
        const SphericalVector b = random_spherical_vector(rng);

        err.fold(exp_i(add(a, b)), mul(exp_i(b), exp_i(a)));
        err.fold(inv(exp_i(a).value()), conj(exp_i(a).value()));
        err.fold(conj(exp_i(a).value()), exp_i(neg(a)));
        err.fold(exp_i(add(a, neg(b))), mul(inv(exp_i(b).value()), exp_i(a).value()));
        err.fold(-exp_i(a).value(), exp_i(add(straight(), a)).value());
        err.fold(-exp_i(a).value(), exp_i(add(a, straight())).value());
        for (int m = -5; m <= 5; ++m) {
            err.fold(exp_i(scale_arg(a, m)), integer_power(exp_i(a), m));
        }
    }
    report(7, "exponential laws including integer powers",
           err.value <= kTolExp, "max error " + fmt(err.value));
}

// ---------------------------------------------------------------------------
// 8. Component/pair roundtrip, and rejection of broken constraints.

void criterion_roundtrip() {
    std::mt19937_64 rng(1008);
    ErrorMax err;
    for (int iter = 0; iter < kIterations; ++iter) {
        const SphericalVector a = random_spherical_vector(rng);
        const PairRepresentation rep = canonical_pair(a);
        err.fold(from_pair(rep.u, rep.v), a);
    }

    // lambda^2 + ||n||^2 - 1 beyond 1e-9 must be refused, not repaired.
    bool rejects = true;
    try {
        const SphericalVector bad(1.0, Vec3{5e-5, 0.0, 0.0});  // drift 2.5e-9
        (void)bad;
        rejects = false;
    } catch (const InvariantViolation&) {
    }
    try {
        // Just past the limit: drift 1.2e-9.
        const SphericalVector bad(1.0, Vec3{std::sqrt(1.2e-9), 0.0, 0.0});
        (void)bad;
        rejects = false;
    } catch (const InvariantViolation&) {
    }
    // Just inside the limit: repaired, not refused.
    bool accepts = true;
    try {
        const SphericalVector fine(1.0, Vec3{std::sqrt(0.8e-9), 0.0, 0.0});
        (void)fine;
    } catch (const InvariantViolation&) {
        accepts = false;
    }

    report(8, "pair roundtrip and constraint enforcement",
           err.value <= kTolRoundtrip && rejects && accepts,
           "max error " + fmt(err.value) + (rejects ? "" : ", missing rejection") +
               (accepts ? "" : ", over-rejects"));
}

// ---------------------------------------------------------------------------
// 9. Identities tying vector products to quaternion products.

void criterion_product_identities() {
    std::mt19937_64 rng(1009);
    ErrorMax err;
    for (int iter = 0; iter < kIterations; ++iter) {
        const Vec3 u = random_vec(rng);
        const Vec3 v = random_vec(rng);
        const Vec3 cu{-u.x, -u.y, u.z};  // conjugate of the embedded vector

        // iu = (conj u) i.
        err.fold(mul(Quaternion::i(), embed_vector(u)),
                 mul(conj(embed_vector(u)), Quaternion::i()));
        // uv = v.(conj u) + i (v x (conj u)).
        err.fold(mul(embed_vector(u), embed_vector(v)),
                 from_spherical(dot(v, cu), cross(v, cu)));
        // For unit u: u^-1 v = (conj u) v = u.v - i (u x v).
        const Vec3 un = random_unit_vec(rng);
        const Quaternion expected = from_spherical(dot(un, v), -cross(un, v));
        err.fold(mul(inv(embed_vector(un)), embed_vector(v)), expected);
        err.fold(mul(conj(embed_vector(un)), embed_vector(v)), expected);
    }
    report(9, "vector product identities under the embedding",
           err.value <= kTolIdentity, "max error " + fmt(err.value));
}

// ---------------------------------------------------------------------------
// 10. The command-line binary, end to end, plus the total-runtime budget.

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string(SPHVEC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buf[512];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) {
        result.out.append(buf, got);
    }
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

void criterion_cli(const std::chrono::steady_clock::time_point& suite_start) {
    std::string detail;
    bool passed = true;

    const RunResult check = run_cli("--json paper-check");
    if (check.status != 0) {
        passed = false;
        detail += "paper-check exit " + std::to_string(check.status) + "; ";
    }
    try {
        const auto j = nlohmann::ordered_json::parse(check.out);
        const std::vector<std::string> names = paper_check_names();
        if (j["cases"].size() != names.size()) {
            passed = false;
            detail += "expected " + std::to_string(names.size()) + " cases; ";
        } else {
            for (std::size_t c = 0; c < names.size(); ++c) {
                if (j["cases"][c]["name"].get<std::string>() != names[c] ||
                    !j["cases"][c]["passed"].get<bool>()) {
                    passed = false;
                    detail += "case " + names[c] + " wrong or failing; ";
                    break;
                }
            }
        }
    } catch (const std::exception&) {
        passed = false;
        detail += "paper-check JSON unparseable; ";
    }

    const std::string path =
        (std::filesystem::temp_directory_path() / "sphvec_accept_fig6.json").string();
    const RunResult fig = run_cli("figure fig6 " + path);
    if (fig.status != 0) {
        passed = false;
        detail += "figure exit " + std::to_string(fig.status) + "; ";
    }
    try {
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        const Scene scene =
            scene_from_json(nlohmann::ordered_json::parse(buf.str()));
        const Vec3 expected[3] = {e_x, e_y, e_z};
        const char* labels[3] = {"e_x", "e_y", "e_z"};
        bool content = scene.points.size() == 3 && scene.arcs.size() == 3;
        for (std::size_t p = 0; content && p < 3; ++p) {
            content = scene.points[p].label == labels[p] &&
                      max_abs_diff(scene.points[p].pos, expected[p]) == 0.0;
        }
        if (!content) {
            passed = false;
            detail += "figure content wrong; ";
        }
    } catch (const std::exception&) {
        passed = false;
        detail += "figure JSON unparseable; ";
    }
    std::error_code ec;
    std::filesystem::remove(path, ec);

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start)
            .count();
    if (seconds >= 10.0) {
        passed = false;
        detail += "suite too slow; ";
    }
    report(10, "command-line checks and suite runtime", passed,
           detail + "total " + fmt(seconds) + " s");
}

}  // namespace

int main() {
    const auto suite_start = std::chrono::steady_clock::now();
    criterion_worked_products();
    criterion_basis_pairs();
    criterion_worked_class();
    criterion_anti_isomorphism();
    criterion_group_axioms();
    criterion_concatenation();
    criterion_exponential_laws();
    criterion_roundtrip();
    criterion_product_identities();
    criterion_cli(suite_start);
    if (failures == 0) {
        std::printf("all 10 criteria passed\n");
    } else {
        std::printf("%d of 10 criteria failed\n", failures);
    }
    return failures;
}
