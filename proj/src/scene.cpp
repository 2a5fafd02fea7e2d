#include "sphvec/scene.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "sphvec/errors.hpp"
#include "sphvec/spherical_vector.hpp"

namespace sphvec {

bool operator==(const ScenePoint& a, const ScenePoint& b) {
    return a.label == b.label && a.pos.x == b.pos.x && a.pos.y == b.pos.y &&
           a.pos.z == b.pos.z;
}

bool operator==(const SceneArc& a, const SceneArc& b) {
    return a.label == b.label && a.from == b.from && a.to == b.to &&
           a.branch == b.branch;
}

bool operator==(const SceneView& a, const SceneView& b) {
    return a.azimuth == b.azimuth && a.elevation == b.elevation;
}

bool operator==(const Scene& a, const Scene& b) {
    return a.points == b.points && a.arcs == b.arcs && a.view == b.view;
}

void validate(const Scene& scene) {
    for (const ScenePoint& p : scene.points) {
        // Negated comparison so NaN positions fail too.
        if (!(std::abs(norm(p.pos) - 1.0) <= kUnitTol)) {
            throw SceneError("scene point \"" + p.label + "\" is not unit");
        }
    }
    for (const SceneArc& a : scene.arcs) {
        if (a.from >= scene.points.size() || a.to >= scene.points.size()) {
            throw SceneError("scene arc \"" + a.label +
                             "\" references a missing point");
        }
    }
}

nlohmann::ordered_json to_json(const Scene& scene) {
    validate(scene);
    nlohmann::ordered_json j;
    j["points"] = nlohmann::ordered_json::array();
    for (const ScenePoint& p : scene.points) {
        nlohmann::ordered_json jp;
        jp["label"] = p.label;
        jp["pos"] = {p.pos.x, p.pos.y, p.pos.z};
        j["points"].push_back(std::move(jp));
    }
    j["arcs"] = nlohmann::ordered_json::array();
    for (const SceneArc& a : scene.arcs) {
        nlohmann::ordered_json ja;
        ja["label"] = a.label;
        ja["from"] = a.from;
        ja["to"] = a.to;
        ja["branch"] = a.branch;
        j["arcs"].push_back(std::move(ja));
    }
    j["view"] = nlohmann::ordered_json::object();
    j["view"]["azimuth"] = scene.view.azimuth;
    j["view"]["elevation"] = scene.view.elevation;
    return j;
}

namespace {

const nlohmann::ordered_json& field(const nlohmann::ordered_json& j,
                                    const char* key, const char* context) {
    if (!j.is_object() || !j.contains(key)) {
        throw SceneError(std::string("scene ") + context + ": missing key \"" +
                         key + "\"");
    }
    return j.at(key);
}

double number_field(const nlohmann::ordered_json& j, const char* key,
                    const char* context) {
    const auto& v = field(j, key, context);
    if (!v.is_number()) {
        throw SceneError(std::string("scene ") + context + ": \"" + key +
                         "\" must be a number");
    }
    return v.get<double>();
}

std::string string_field(const nlohmann::ordered_json& j, const char* key,
                         const char* context) {
    const auto& v = field(j, key, context);
    if (!v.is_string()) {
        throw SceneError(std::string("scene ") + context + ": \"" + key +
                         "\" must be a string");
    }
    return v.get<std::string>();
}

std::size_t index_field(const nlohmann::ordered_json& j, const char* key,
                        const char* context) {
    const auto& v = field(j, key, context);
    if (!v.is_number_integer() || (v.is_number_integer() && v.get<long long>() < 0)) {
        throw SceneError(std::string("scene ") + context + ": \"" + key +
                         "\" must be a non-negative integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
}

} // namespace

Scene scene_from_json(const nlohmann::ordered_json& j) {
    Scene scene;
    const auto& points = field(j, "points", "document");
    if (!points.is_array()) {
        throw SceneError("scene document: \"points\" must be an array");
    }
    for (const auto& jp : points) {
        ScenePoint p;
        p.label = string_field(jp, "label", "point");
        const auto& pos = field(jp, "pos", "point");
        if (!pos.is_array() || pos.size() != 3 || !pos[0].is_number() ||
            !pos[1].is_number() || !pos[2].is_number()) {
            throw SceneError("scene point: \"pos\" must be an array of 3 numbers");
        }
        p.pos = {pos[0].get<double>(), pos[1].get<double>(), pos[2].get<double>()};
        scene.points.push_back(std::move(p));
    }
    const auto& arcs = field(j, "arcs", "document");
    if (!arcs.is_array()) {
        throw SceneError("scene document: \"arcs\" must be an array");
    }
    for (const auto& ja : arcs) {
        SceneArc a;
        a.label = string_field(ja, "label", "arc");
        a.from = index_field(ja, "from", "arc");
        a.to = index_field(ja, "to", "arc");
        const auto& branch = field(ja, "branch", "arc");
        if (!branch.is_boolean()) {
            throw SceneError("scene arc: \"branch\" must be a boolean");
        }
        a.branch = branch.get<bool>();
        scene.arcs.push_back(std::move(a));
    }
    const auto& view = field(j, "view", "document");
    scene.view.azimuth = number_field(view, "azimuth", "view");
    scene.view.elevation = number_field(view, "elevation", "view");
    validate(scene);
    return scene;
}

namespace {

constexpr double kPi = std::numbers::pi;

/// Orthographic camera: projects onto (right, up), depth along forward.
struct Projector {
    Vec3 right;
    Vec3 up;
    Vec3 forward;
    double scale;
    double cx;
    double cy;

    static Projector make(const SceneView& view, int size) {
        const double az = view.azimuth * kPi / 180.0;
        const double el = view.elevation * kPi / 180.0;
        const Vec3 f{std::cos(el) * std::cos(az), std::cos(el) * std::sin(az),
                     std::sin(el)};
        const Vec3 up0 = std::abs(f.z) > 0.99 ? e_x : e_z;
        const Vec3 right = normalize(cross(up0, f));
        return {right, cross(f, right), f, 0.42 * size, size / 2.0, size / 2.0};
    }

    double depth(const Vec3& p) const { return dot(p, forward); }
    double sx(const Vec3& p) const { return cx + scale * dot(p, right); }
    double sy(const Vec3& p) const { return cy - scale * dot(p, up); }
};

/// Fixed two decimals, locale-independent; plenty for pixel coordinates.
std::string px(double v) {
    char buf[32];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    if (ec != std::errc{}) {
        throw Error("px: conversion failed");
    }
    return std::string(buf, ptr);
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

/// 64-segment polyline along the great-circle arc from a to b. branch=true
/// walks the minor arc, branch=false its complement (the long way round).
std::vector<Vec3> sample_arc(const Vec3& a, const Vec3& b, bool branch) {
    constexpr int kSegments = 64;
    const Vec3 cr = cross(a, b);
    const double sine = norm(cr);
    const double theta = std::atan2(sine, dot(a, b));
    // In-plane direction of departure; for (anti)parallel endpoints any
    // orthonormal direction works and orthonormal_to keeps it deterministic.
    const Vec3 e = sine > kZeroTol ? normalize(cross(normalize(cr), a))
                                   : orthonormal_to(a);
    const double sweep = branch ? theta : theta - 2.0 * kPi;
    std::vector<Vec3> samples;
    samples.reserve(kSegments + 1);
    for (int s = 0; s <= kSegments; ++s) {
        const double ang = sweep * s / kSegments;
        samples.push_back(std::cos(ang) * a + std::sin(ang) * e);
    }
    return samples;
}

const char* arc_color(std::size_t index) {
    static const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#17becf"};
    return kPalette[index % (sizeof(kPalette) / sizeof(kPalette[0]))];
}

void append_polyline(std::string& svg, const std::vector<Vec3>& samples,
                     std::size_t begin, std::size_t end, const Projector& proj,
                     const char* color, bool front) {
    svg += "  <polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.8\"";
    if (!front) {
        svg += " stroke-dasharray=\"6 5\" stroke-opacity=\"0.45\"";
    }
    svg += " points=\"";
    for (std::size_t s = begin; s <= end; ++s) {
        if (s > begin) {
            svg += " ";
        }
        svg += px(proj.sx(samples[s])) + "," + px(proj.sy(samples[s]));
    }
    svg += "\"/>\n";
}

/// Small triangle at the arc's destination, oriented along the last segment.
void append_arrowhead(std::string& svg, const std::vector<Vec3>& samples,
                      const Projector& proj, const char* color, bool front) {
    const Vec3& tip3 = samples.back();
    const Vec3& prev3 = samples[samples.size() - 2];
    const double tx = proj.sx(tip3);
    const double ty = proj.sy(tip3);
    double dx = tx - proj.sx(prev3);
    double dy = ty - proj.sy(prev3);
    const double len = std::hypot(dx, dy);
    if (len < 1e-6) {
        return;
    }
    dx /= len;
    dy /= len;
    const double bx = tx - 9.0 * dx;
    const double by = ty - 9.0 * dy;
    svg += "  <path fill=\"";
    svg += color;
    svg += "\"";
    if (!front) {
        svg += " fill-opacity=\"0.45\"";
    }
    svg += " d=\"M " + px(tx) + " " + px(ty) + " L " + px(bx - 3.5 * dy) + " " +
           px(by + 3.5 * dx) + " L " + px(bx + 3.5 * dy) + " " +
           px(by - 3.5 * dx) + " Z\"/>\n";
}

void append_text(std::string& svg, double x, double y, const std::string& text,
                 const char* color, bool front, const char* anchor) {
    svg += "  <text x=\"" + px(x) + "\" y=\"" + px(y) + "\" fill=\"";
    svg += color;
    svg += "\"";
    if (!front) {
        svg += " fill-opacity=\"0.55\"";
    }
    svg += " font-family=\"Helvetica, Arial, sans-serif\" font-size=\"13\"";
    svg += " text-anchor=\"";
    svg += anchor;
    svg += "\">" + xml_escape(text) + "</text>\n";
}

} // namespace

std::string to_svg(const Scene& scene, int size) {
    validate(scene);
    const Projector proj = Projector::make(scene.view, size);
    const std::string dim = std::to_string(size);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + dim +
           "\" height=\"" + dim + "\" viewBox=\"0 0 " + dim + " " + dim + "\">\n";
    svg += "  <rect width=\"" + dim + "\" height=\"" + dim +
           "\" fill=\"#ffffff\"/>\n";
    svg += "  <circle cx=\"" + px(proj.cx) + "\" cy=\"" + px(proj.cy) +
           "\" r=\"" + px(proj.scale) +
           "\" fill=\"none\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";

    for (std::size_t a = 0; a < scene.arcs.size(); ++a) {
        const SceneArc& arc = scene.arcs[a];
        const char* color = arc_color(a);
        const std::vector<Vec3> samples = sample_arc(
            scene.points[arc.from].pos, scene.points[arc.to].pos, arc.branch);

        // Consecutive segments on the same hemisphere share one polyline;
        // a segment belongs to the hemisphere of its midpoint.
        std::size_t run_begin = 0;
        bool run_front = proj.depth(samples[0] + samples[1]) >= 0.0;
        bool last_front = run_front;
        for (std::size_t s = 1; s + 1 < samples.size(); ++s) {
            const bool front = proj.depth(samples[s] + samples[s + 1]) >= 0.0;
            last_front = front;
            if (front != run_front) {
                append_polyline(svg, samples, run_begin, s, proj, color, run_front);
                run_begin = s;
                run_front = front;
            }
        }
        append_polyline(svg, samples, run_begin, samples.size() - 1, proj, color,
                        run_front);
        append_arrowhead(svg, samples, proj, color, last_front);

        const Vec3 mid = 1.12 * samples[samples.size() / 2];
        append_text(svg, proj.sx(mid), proj.sy(mid), arc.label, color,
                    proj.depth(mid) >= 0.0, "middle");
    }

    for (const ScenePoint& p : scene.points) {
        const bool front = proj.depth(p.pos) >= 0.0;
        svg += "  <circle cx=\"" + px(proj.sx(p.pos)) + "\" cy=\"" +
               px(proj.sy(p.pos)) + "\" r=\"3.5\"";
        if (front) {
            svg += " fill=\"#111111\"/>\n";
        } else {
            svg += " fill=\"none\" stroke=\"#111111\" stroke-opacity=\"0.6\"/>\n";
        }
        append_text(svg, proj.sx(p.pos) + 7.0, proj.sy(p.pos) - 7.0, p.label,
                    "#111111", front, "start");
    }

    svg += "</svg>\n";
    return svg;
}

namespace {

/// The worked chain data behind the built-in figures: the two quaternion
/// classes with lambda_a = sqrt6/3, n_a = (-sqrt6/6, sqrt6/6, 0) and
/// lambda_b = sqrt2/2, n_b = (0, 0, sqrt2/2), chained in both orders.
struct WorkedChains {
    ChainTriple first;  // (u, v, e_y)
    ChainTriple second; // (e_x, v, w')

    static WorkedChains make() {
        const double s2 = std::sqrt(2.0);
        const double s6 = std::sqrt(6.0);
        const SphericalVector a(s6 / 3, {-s6 / 6, s6 / 6, 0.0});
        const SphericalVector b(s2 / 2, {0.0, 0.0, s2 / 2});
        return {chain_pair(a, b), chain_pair(b, a)};
    }
};

Scene figure_chain_sum() {
    const WorkedChains wc = WorkedChains::make();
    Scene scene;
    scene.points = {{"A", wc.first.u}, {"B", wc.first.v}, {"C", wc.first.w}};
    scene.arcs = {{"alpha", 0, 1, true},
                  {"beta", 1, 2, true},
                  {"alpha+beta", 0, 2, true}};
    scene.view = {40.0, 25.0};
    return scene;
}

Scene figure_basis_relation() {
    Scene scene;
    scene.points = {{"e_x", e_x}, {"e_y", e_y}, {"e_z", e_z}};
    scene.arcs = {{"alpha_i", 0, 1, true},
                  {"alpha_k", 1, 2, true},
                  {"alpha_j", 0, 2, true}};
    scene.view = {55.0, 22.0};
    return scene;
}

/// Shared geometry of the two product figures: five labeled points and the
/// two chains; only the arc labels differ.
Scene figure_products(const char* labels[6]) {
    const WorkedChains wc = WorkedChains::make();
    Scene scene;
    scene.points = {{"u", wc.first.u},
                    {"v", wc.first.v},
                    {"w", wc.first.w},
                    {"e_x", wc.second.u},
                    {"w'", wc.second.w}};
    scene.arcs = {{labels[0], 0, 1, true}, {labels[1], 1, 2, true},
                  {labels[2], 0, 2, true}, {labels[3], 3, 1, true},
                  {labels[4], 1, 4, true}, {labels[5], 3, 4, true}};
    scene.view = {40.0, 18.0};
    return scene;
}

} // namespace

Scene make_figure(const std::string& name) {
    if (name == "fig5") {
        return figure_chain_sum();
    }
    if (name == "fig6") {
        return figure_basis_relation();
    }
    if (name == "fig8") {
        const char* labels[6] = {"alpha_p", "alpha_q", "alpha_h",
                                 "alpha_q", "alpha_p", "alpha_h'"};
        return figure_products(labels);
    }
    if (name == "fig9") {
        const char* labels[6] = {"p", "q", "qp", "q", "p", "pq"};
        return figure_products(labels);
    }
    throw SceneError("unknown figure \"" + name +
                     "\"; expected one of fig5, fig6, fig8, fig9");
}

std::vector<std::string> figure_names() {
    return {"fig5", "fig6", "fig8", "fig9"};
}

} // namespace sphvec
