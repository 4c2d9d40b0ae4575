#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <whitneyforms/characterize.hpp>
#include <whitneyforms/derham.hpp>
#include <whitneyforms/errors.hpp>
#include <whitneyforms/json_io.hpp>
#include <whitneyforms/render.hpp>
#include <whitneyforms/verification.hpp>
#include <whitneyforms/whitney.hpp>

namespace py = pybind11;
using namespace whitneyforms;

// Rationals cross the boundary as "p/q" strings; the Python layer turns them
// into fractions.Fraction. Structured values travel as JSON text.
PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Whitney forms, de Rham map and characterization checks on the standard simplex.";

    auto base = py::register_exception<Error>(m, "WhitneyError", PyExc_ValueError);
    py::register_exception<TheoremViolation>(m, "TheoremViolation", base.ptr());

    py::class_<Face>(m, "Face")
        .def(py::init<int, std::vector<int>, int>(), py::arg("n"), py::arg("vertices"), py::arg("sign") = 1)
        .def_property_readonly("n", &Face::ambient_dim)
        .def_property_readonly("degree", &Face::degree)
        .def_property_readonly("vertices", &Face::vertices)
        .def_property_readonly("sign", &Face::sign)
        .def("canonical", [](const Face &f) { return canonicalize(f); })
        .def(py::self == py::self)
        .def("__repr__", [](const Face &f) {
            std::string s = f.sign() < 0 ? "-[" : "[";
            for (std::size_t i = 0; i < f.vertices().size(); ++i) s += (i ? "," : "") + std::to_string(f.vertices()[i]);
            return "Face(n=" + std::to_string(f.ambient_dim()) + ", " + s + "])";
        });

    py::class_<Cochain>(m, "Cochain")
        .def(py::init<int, int>(), py::arg("n"), py::arg("k"))
        .def_static("basis", &Cochain::basis)
        .def_static("from_json", [](const std::string &text) { return cochain_from_json(parse_json(text)); })
        .def("to_json", [](const Cochain &c) { return cochain_to_json(c).dump(); })
        .def_property_readonly("n", &Cochain::ambient_dim)
        .def_property_readonly("k", &Cochain::degree)
        .def("add", [](Cochain &c, const Face &f, const std::string &coeff) { c.add(f, Rational::parse(coeff)); })
        .def("eval", [](const Cochain &c, const Face &f) { return cochain_eval(c, f).to_string(); })
        .def("scaled", [](const Cochain &c, const std::string &s) { return Rational::parse(s) * c; })
        .def(py::self == py::self)
        .def("__add__", [](const Cochain &a, const Cochain &b) { return a + b; })
        .def("__repr__", [](const Cochain &c) { return "Cochain(" + to_text(c) + ")"; });

    py::class_<AffineForm>(m, "AffineForm")
        .def(py::init<int, int>(), py::arg("n"), py::arg("k"))
        .def_static("from_json", [](const std::string &text) { return form_from_json(parse_json(text)); })
        .def("to_json", [](const AffineForm &w) { return form_to_json(w).dump(); })
        .def_property_readonly("n", &AffineForm::ambient_dim)
        .def_property_readonly("k", &AffineForm::degree)
        .def("is_zero", &AffineForm::is_zero)
        .def("scaled", [](const AffineForm &w, const std::string &s) { return Rational::parse(s) * w; })
        .def("text", [](const AffineForm &w) { return to_text(w); })
        .def("latex", [](const AffineForm &w) { return to_latex(w); })
        .def(py::self == py::self)
        .def("__add__", [](const AffineForm &a, const AffineForm &b) { return a + b; })
        .def("__repr__", [](const AffineForm &w) { return "AffineForm(" + to_text(w) + ")"; });

    m.def("enumerate_faces", &enumerate_faces, py::arg("n"), py::arg("k"));
    m.def("whitney_basis_form", &whitney_basis_form, py::arg("face"));
    m.def("whitney", &whitney, py::arg("cochain"));
    m.def("pullback", &pullback, py::arg("form"), py::arg("face"));
    m.def("is_constant", &is_constant, py::arg("form"));
    m.def("derham", &derham, py::arg("form"));
    m.def("_integrate_over_face", [](const AffineForm &w, const Face &f) { return integrate_over_face(w, f).to_string(); });
    m.def("lambda_e_dimension", &lambda_e_dimension, py::arg("n"), py::arg("k"));
    m.def("solve_characterization", &solve_characterization, py::arg("n"), py::arg("k"), py::arg("cochain"));
    m.def("_kernel_is_trivial", [](int n, int k) {
        const KernelCertificate cert = kernel_is_trivial(n, k);
        std::vector<std::vector<std::string>> basis;
        for (const auto &v : cert.basis) {
            auto &row = basis.emplace_back();
            for (const auto &x : v) row.push_back(x.to_string());
        }
        return py::make_tuple(cert.trivial, basis);
    });
    m.def("_proof_trace", [](int n, int k) { return trace_to_json(proof_trace(n, k)).dump(); });
    m.def(
        "_verify",
        [](int n_max, int k, int samples, std::uint64_t seed) {
            std::vector<CellReport> reports;
            {
                py::gil_scoped_release release;
                reports = verify_range(n_max, k, VerifyOptions{samples, seed});
            }
            Json cells = Json::array();
            for (const auto &r : reports) cells.push_back(report_to_json(r));
            return cells.dump();
        },
        py::arg("n_max"), py::arg("k") = -1, py::arg("samples") = 20, py::arg("seed") = 0);
}
