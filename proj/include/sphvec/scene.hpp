#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "sphvec/vec3.hpp"

namespace sphvec {

/// Labeled unit position on the sphere.
struct ScenePoint {
    std::string label;
    Vec3 pos;
};

/// Directed great-circle arc between two points, by index. branch selects
/// the minor arc (true, the default everywhere) or its complement.
struct SceneArc {
    std::string label;
    std::size_t from = 0;
    std::size_t to = 0;
    bool branch = true;
};

/// Camera orientation for the orthographic projection, in degrees.
struct SceneView {
    double azimuth = 0.0;
    double elevation = 0.0;
};

/// Figure description: points on S^2, arcs between them, view angles.
struct Scene {
    std::vector<ScenePoint> points;
    std::vector<SceneArc> arcs;
    SceneView view;
};

bool operator==(const ScenePoint& a, const ScenePoint& b);
bool operator==(const SceneArc& a, const SceneArc& b);
bool operator==(const SceneView& a, const SceneView& b);
bool operator==(const Scene& a, const Scene& b);

/// Throws SceneError unless every arc references an existing point and every
/// point position is unit within kUnitTol.
void validate(const Scene& scene);

/// {points: [{label, pos: [x, y, z]}], arcs: [{label, from, to, branch}],
///  view: {azimuth, elevation}} with exactly this key order. Validates first.
nlohmann::ordered_json to_json(const Scene& scene);

/// Inverse of to_json; numeric values round-trip exactly. Unknown keys are
/// ignored; missing or mistyped fields throw SceneError. Validates the result.
Scene scene_from_json(const nlohmann::ordered_json& j);

/// Orthographic projection of the scene onto the view plane as a standalone
/// square SVG document. Arcs are sampled at 64 segments; the hemisphere
/// facing away from the camera is drawn dashed and translucent.
std::string to_svg(const Scene& scene, int size = 640);

/// Built-in figures, by name. Throws SceneError for unknown names.
Scene make_figure(const std::string& name);

/// Names accepted by make_figure, sorted.
std::vector<std::string> figure_names();

} // namespace sphvec
