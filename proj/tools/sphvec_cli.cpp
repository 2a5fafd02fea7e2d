// Command-line front end for the spherical-vector algebra.
//
// Subcommands:
//   arg <q>            argument (spherical vector) of a quaternion literal
//   mul <ql> <qr>      quaternion product with its scalar/vector split
//   add <a> <b>        sum of two arcs plus the connecting chain of vectors
//   pair <operand>     deterministic representative pair of an arc class
//   paper-check        run the built-in worked-example suite
//   figure <name> <out> emit scene data (JSON) or a rendering (SVG)
//
// Global flags: --tol <float> overrides the check tolerance, --json switches
// every subcommand to machine-readable output.  Exit codes: 0 on success,
// 1 when a check fails, 2 on usage or parse errors.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sphvec/errors.hpp"
#include "sphvec/literal.hpp"
#include "sphvec/paper_check.hpp"
#include "sphvec/polar.hpp"
#include "sphvec/quaternion.hpp"
#include "sphvec/scene.hpp"
#include "sphvec/spherical_vector.hpp"
#include "sphvec/vec3.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sphvec;

ordered_json json_vec(const Vec3& v) {
    return ordered_json::array({v.x, v.y, v.z});
}

/// Classifies an arc for display: both degenerate classes get a name so the
/// caller can tell them apart without inspecting lambda.
const char* kind_of(const SphericalVector& a) {
    if (!is_degenerate(a)) return "generic";
    return a.lambda() < 0.0 ? "straight" : "zero";
}

void print_arc_text(const SphericalVector& a) {
    std::cout << "lambda = " << format_real(a.lambda()) << "\n";
    std::cout << "n = " << format_vec3(a.n()) << "\n";
    std::cout << "kind = " << kind_of(a) << "\n";
}

ordered_json arc_json(const SphericalVector& a) {
    ordered_json j;
    j["lambda"] = a.lambda();
    j["n"] = json_vec(a.n());
    j["kind"] = kind_of(a);
    return j;
}

void emit(const ordered_json& j) {
    std::cout << j.dump(2) << "\n";
}

int do_arg(const std::string& literal, bool as_json) {
    const Quaternion q = parse_quaternion(literal);
    const SphericalVector a = arg(q);
    const PairRepresentation rep = canonical_pair(a);
    if (as_json) {
        ordered_json j = arc_json(a);
        j["pair"]["u"] = json_vec(rep.u);
        j["pair"]["v"] = json_vec(rep.v);
        emit(j);
    } else {
        print_arc_text(a);
        std::cout << "u = " << format_vec3(rep.u) << "\n";
        std::cout << "v = " << format_vec3(rep.v) << "\n";
    }
    return 0;
}

int do_mul(const std::string& left, const std::string& right, bool as_json) {
    const Quaternion l = parse_quaternion(left);
    const Quaternion r = parse_quaternion(right);
    const Quaternion product = mul(l, r);
    const SphericalForm split = spherical_components(product);
    if (as_json) {
        ordered_json j;
        j["product"]["literal"] = format_quaternion(product);
        j["product"]["s"] = product.s;
        j["product"]["i"] = product.ci;
        j["product"]["j"] = product.cj;
        j["product"]["k"] = product.ck;
        j["spherical"]["x"] = split.x;
        j["spherical"]["w"] = json_vec(split.w);
        emit(j);
    } else {
        std::cout << "product = " << format_quaternion(product) << "\n";
        std::cout << "x = " << format_real(split.x) << "\n";
        std::cout << "w = " << format_vec3(split.w) << "\n";
    }
    return 0;
}

int do_add(const std::string& left, const std::string& right, bool as_json) {
    const SphericalVector a = parse_operand(left);
    const SphericalVector b = parse_operand(right);
    const SphericalVector sum = add(a, b);
    const ChainTriple chain = chain_pair(a, b);
    if (as_json) {
        ordered_json j = arc_json(sum);
        j["chain"]["u"] = json_vec(chain.u);
        j["chain"]["v"] = json_vec(chain.v);
        j["chain"]["w"] = json_vec(chain.w);
        emit(j);
    } else {
        print_arc_text(sum);
        std::cout << "chain u = " << format_vec3(chain.u) << "\n";
        std::cout << "chain v = " << format_vec3(chain.v) << "\n";
        std::cout << "chain w = " << format_vec3(chain.w) << "\n";
    }
    return 0;
}

int do_pair(const std::string& operand, bool as_json) {
    const SphericalVector a = parse_operand(operand);
    const PairRepresentation rep = canonical_pair(a);
    if (as_json) {
        ordered_json j;
        j["u"] = json_vec(rep.u);
        j["v"] = json_vec(rep.v);
        emit(j);
    } else {
        std::cout << "u = " << format_vec3(rep.u) << "\n";
        std::cout << "v = " << format_vec3(rep.v) << "\n";
    }
    return 0;
}

int do_paper_check(double tolerance, bool as_json) {
    const CheckReport report = run_paper_check(tolerance);
    if (as_json) {
        emit(report_to_json(report));
    } else {
        std::cout << report_to_text(report);
    }
    return report.all_passed() ? 0 : 1;
}

/// Resolves the output format: an explicit --format wins, otherwise the file
/// extension decides.  Anything other than json/svg is a usage error.
std::string figure_format(const std::string& path, const std::string& forced) {
    std::string format = forced;
    if (format.empty()) {
        const auto dot = path.find_last_of('.');
        if (dot == std::string::npos) {
            throw SceneError("cannot infer figure format from '" + path +
                             "'; pass --format json or --format svg");
        }
        format = path.substr(dot + 1);
        for (char& c : format) c = static_cast<char>(std::tolower(c));
    }
    if (format != "json" && format != "svg") {
        throw SceneError("unsupported figure format '" + format +
                         "'; expected json or svg");
    }
    return format;
}

int do_figure(const std::string& name, const std::string& path,
              const std::string& forced_format, bool as_json) {
    const std::string format = figure_format(path, forced_format);
    const Scene scene = make_figure(name);
    std::ofstream out(path, std::ios::binary);
    if (!out.is_open()) {
        throw SceneError("cannot open '" + path + "' for writing");
    }
    if (format == "json") {
        out << to_json(scene).dump(2) << "\n";
    } else {
        out << to_svg(scene);
    }
    out.flush();
    if (!out) {
        throw SceneError("failed to write '" + path + "'");
    }
    if (as_json) {
        ordered_json j;
        j["figure"] = name;
        j["format"] = format;
        j["path"] = path;
        emit(j);
    } else {
        std::cout << "wrote " << name << " (" << format << ") to " << path
                  << "\n";
    }
    return 0;
}

/// Option parsers refuse positionals that begin with '-', but quaternion
/// literals like "-1" or "-i" are legitimate operands.  Once a subcommand
/// that takes literals has been seen, every later token that is not a known
/// flag gets a leading space: the option parser then treats it as a plain
/// positional, and the literal scanners strip whitespace anyway.
std::vector<std::string> normalize_args(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 1 ? static_cast<std::size_t>(argc - 1) : 0);
    bool literal_zone = false;
    for (int a = 1; a < argc; ++a) {
        std::string tok = argv[a];
        if (!literal_zone) {
            if (tok == "arg" || tok == "mul" || tok == "add" || tok == "pair") {
                literal_zone = true;
            }
        } else if (tok.size() > 1 && tok.front() == '-' && tok != "--json" &&
                   tok != "--tol" && tok.rfind("--tol=", 0) != 0 &&
                   tok != "--help" && tok != "-h") {
            tok.insert(tok.begin(), ' ');
        }
        args.push_back(std::move(tok));
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spherical-vector algebra on the unit sphere"};
    app.require_subcommand(1);

    double tolerance = kEqualTol;
    bool as_json = false;
    app.add_option("--tol", tolerance,
                   "comparison tolerance for paper-check")
        ->capture_default_str();
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    std::string arg_literal;
    auto* cmd_arg =
        app.add_subcommand("arg", "argument of a quaternion literal");
    cmd_arg->add_option("literal", arg_literal, "quaternion literal")
        ->required();
    cmd_arg->fallthrough();

    std::string mul_left;
    std::string mul_right;
    auto* cmd_mul = app.add_subcommand(
        "mul", "product of two quaternion literals with its split");
    cmd_mul->add_option("left", mul_left, "left factor")->required();
    cmd_mul->add_option("right", mul_right, "right factor")->required();
    cmd_mul->fallthrough();

    std::string add_left;
    std::string add_right;
    auto* cmd_add = app.add_subcommand(
        "add", "sum of two arcs given as quaternion or arc literals");
    cmd_add->add_option("left", add_left, "first operand")->required();
    cmd_add->add_option("right", add_right, "second operand")->required();
    cmd_add->fallthrough();

    std::string pair_operand;
    auto* cmd_pair = app.add_subcommand(
        "pair", "deterministic representative pair of an arc class");
    cmd_pair->add_option("operand", pair_operand, "quaternion or arc literal")
        ->required();
    cmd_pair->fallthrough();

    auto* cmd_check =
        app.add_subcommand("paper-check", "run the worked-example suite");
    cmd_check->fallthrough();

    std::string figure_name;
    std::string figure_path;
    std::string forced_format;
    auto* cmd_figure =
        app.add_subcommand("figure", "emit scene data for a named figure");
    cmd_figure->add_option("name", figure_name, "figure name")->required();
    cmd_figure->add_option("output", figure_path, "output file path")
        ->required();
    cmd_figure->add_option("--format", forced_format,
                           "output format (json or svg)");
    cmd_figure->fallthrough();

    std::vector<std::string> args = normalize_args(argc, argv);
    std::reverse(args.begin(), args.end());  // the vector overload wants this
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_arg->parsed()) return do_arg(arg_literal, as_json);
        if (cmd_mul->parsed()) return do_mul(mul_left, mul_right, as_json);
        if (cmd_add->parsed()) return do_add(add_left, add_right, as_json);
        if (cmd_pair->parsed()) return do_pair(pair_operand, as_json);
        if (cmd_check->parsed()) return do_paper_check(tolerance, as_json);
        if (cmd_figure->parsed()) {
            return do_figure(figure_name, figure_path, forced_format, as_json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
