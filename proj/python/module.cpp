// Python bindings for the spherical-vector algebra: the vector and
// quaternion types, the class/pair conversions, the transported group
// operation, and the literal parsers/formatters.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphvec/errors.hpp"
#include "sphvec/literal.hpp"
#include "sphvec/paper_check.hpp"
#include "sphvec/polar.hpp"
#include "sphvec/quaternion.hpp"
#include "sphvec/spherical_vector.hpp"
#include "sphvec/vec3.hpp"

namespace py = pybind11;

using namespace sphvec;

namespace {

std::string repr_spherical_vector(const SphericalVector& a) {
    return "(" + format_real(a.lambda()) + ", " + format_vec3(a.n()) + ")";
}

}  // namespace

PYBIND11_MODULE(sphvec, m) {
    m.doc() = "Spherical-vector algebra on the unit sphere and its "
              "correspondence with unit quaternions";

    auto& base = py::register_exception<Error>(m, "Error");
    py::register_exception<ZeroVectorError>(m, "ZeroVectorError", base.ptr());
    py::register_exception<ZeroQuaternionError>(m, "ZeroQuaternionError", base.ptr());
    py::register_exception<NotUnitError>(m, "NotUnitError", base.ptr());
    py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());
    py::register_exception<DegenerateSupportError>(m, "DegenerateSupportError",
                                                   base.ptr());
    py::register_exception<NotInSupportError>(m, "NotInSupportError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SceneError>(m, "SceneError", base.ptr());

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"),
             py::arg("z"))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z)
        .def("__add__", [](const Vec3& a, const Vec3& b) { return a + b; })
        .def("__sub__", [](const Vec3& a, const Vec3& b) { return a - b; })
        .def("__neg__", [](const Vec3& a) { return -a; })
        .def("__mul__", [](const Vec3& a, double s) { return a * s; })
        .def("__rmul__", [](const Vec3& a, double s) { return s * a; })
        .def("__repr__", [](const Vec3& a) { return format_vec3(a); });

    m.attr("e_x") = e_x;
    m.attr("e_y") = e_y;
    m.attr("e_z") = e_z;

    m.def("dot", [](const Vec3& a, const Vec3& b) { return dot(a, b); });
    m.def("cross", [](const Vec3& a, const Vec3& b) { return cross(a, b); });
    m.def("norm", [](const Vec3& a) { return norm(a); });
    m.def("normalize", [](const Vec3& a) { return normalize(a); });
    m.def("orthonormal_to", &orthonormal_to,
          "Deterministic unit vector orthogonal to the input");

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("s"),
             py::arg("ci"), py::arg("cj"), py::arg("ck"))
        .def_readwrite("s", &Quaternion::s)
        .def_readwrite("ci", &Quaternion::ci)
        .def_readwrite("cj", &Quaternion::cj)
        .def_readwrite("ck", &Quaternion::ck)
        .def_static("one", &Quaternion::one)
        .def_static("i", &Quaternion::i)
        .def_static("j", &Quaternion::j)
        .def_static("k", &Quaternion::k)
        .def("__neg__", [](const Quaternion& q) { return -q; })
        .def("__mul__", [](const Quaternion& p, const Quaternion& q) { return mul(p, q); })
        .def("__repr__", [](const Quaternion& q) { return format_quaternion(q); });

    m.def("mul", [](const Quaternion& p, const Quaternion& q) { return mul(p, q); });
    m.def("conj", [](const Quaternion& q) { return conj(q); });
    m.def("inv", [](const Quaternion& q) { return inv(q); });
    m.def("norm", [](const Quaternion& q) { return norm(q); });
    m.def("embed_vector", &embed_vector,
          "The quaternion identified with a 3-vector");
    m.def("extract_vector", &extract_vector,
          "The 3-vector identified with a quaternion in the embedded set");
    m.def("vector_quotient",
          [](const Vec3& v, const Vec3& u) { return vector_quotient(v, u); },
          py::arg("v"), py::arg("u"), "The quaternion v * u^-1 for unit u, v");

    py::class_<SphericalVector>(m, "SphericalVector")
        .def(py::init<>())
        .def(py::init<double, const Vec3&>(), py::arg("lambda_"), py::arg("n"))
        .def_property_readonly("lambda_", &SphericalVector::lambda)
        .def_property_readonly("n", &SphericalVector::n)
        .def("__add__",
             [](const SphericalVector& a, const SphericalVector& b) { return add(a, b); })
        .def("__neg__", [](const SphericalVector& a) { return neg(a); })
        .def("__repr__", &repr_spherical_vector);

    py::class_<PairRepresentation>(m, "PairRepresentation")
        .def(py::init<const Vec3&, const Vec3&>(), py::arg("u"), py::arg("v"))
        .def_readonly("u", &PairRepresentation::u)
        .def_readonly("v", &PairRepresentation::v);

    py::class_<ChainTriple>(m, "ChainTriple")
        .def_readonly("u", &ChainTriple::u)
        .def_readonly("v", &ChainTriple::v)
        .def_readonly("w", &ChainTriple::w);

    py::enum_<ChainBranch>(m, "ChainBranch")
        .value("primary", ChainBranch::primary)
        .value("mirrored", ChainBranch::mirrored);

    m.def("from_pair", &from_pair, py::arg("u"), py::arg("v"),
          "Class of the ordered pair (u, v)");
    m.def("mu", [](const SphericalVector& a) { return Quaternion(mu(a)); },
          "The bijection onto unit quaternions, lambda + i n");
    m.def("mu_inv", [](const Quaternion& q) { return mu_inv(q); },
          "Inverse bijection; the quaternion must be unit");
    m.def("zero", &zero);
    m.def("straight", &straight);
    m.def("is_degenerate", &is_degenerate);
    m.def("add", [](const SphericalVector& a, const SphericalVector& b) {
        return add(a, b);
    });
    m.def("neg", [](const SphericalVector& a) { return neg(a); });
    m.def("support_normal", &support_normal);
    m.def("solve_forward", &solve_forward, py::arg("alpha"), py::arg("u"),
          "The unique v with (u, v) in the class alpha");
    m.def("solve_backward", &solve_backward, py::arg("alpha"), py::arg("u"),
          "The unique w with (w, u) in the class alpha");
    m.def("canonical_pair", &canonical_pair,
          "Deterministic representative pair of the class");
    m.def("chain_pair", &chain_pair, py::arg("a"), py::arg("b"),
          py::arg("branch") = ChainBranch::primary,
          "Vectors (u, v, w) with a = (u, v), b = (v, w)");

    py::class_<PolarForm>(m, "PolarForm")
        .def_readonly("r", &PolarForm::r)
        .def_readonly("argument", &PolarForm::argument);

    m.def("arg", &arg, "Argument of a non-zero quaternion");
    m.def("cos_sv", &cos_sv);
    m.def("sin_sv", &sin_sv);
    m.def("polar", &polar);
    m.def("to_quaternion", &to_quaternion);
    m.def("exp_i", [](const SphericalVector& a) { return Quaternion(exp_i(a)); },
          "The unit quaternion e^{i alpha}");
    m.def("scale_arg", &scale_arg, py::arg("alpha"), py::arg("m"),
          "m-fold sum of the argument with itself");
    m.def("argument_pair", &argument_pair,
          "Representative pair of arg(q), chosen deterministically");

    m.def("parse_real", &parse_real);
    m.def("parse_quaternion", &parse_quaternion);
    m.def("parse_spherical_vector", &parse_spherical_vector);
    m.def("parse_operand", &parse_operand);
    m.def("format_real", &format_real);
    m.def("format_vec3", &format_vec3);
    m.def("format_quaternion", &format_quaternion);

    m.def("run_paper_check",
          [](double tolerance) {
              const CheckReport report = run_paper_check(tolerance);
              py::list cases;
              for (const CheckResult& r : report.results) {
                  py::dict c;
                  c["name"] = r.name;
                  c["passed"] = r.passed;
                  c["max_error"] = r.max_error;
                  c["message"] = r.message;
                  cases.append(c);
              }
              py::dict out;
              out["tolerance"] = report.tolerance;
              out["passed"] = report.all_passed();
              out["cases"] = cases;
              return out;
          },
          py::arg("tolerance") = kEqualTol,
          "Runs the built-in worked-example suite");
}
