#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twoschur/decompose.hpp"
#include "twoschur/errors.hpp"
#include "twoschur/format.hpp"
#include "twoschur/idempotent.hpp"
#include "twoschur/serialize.hpp"
#include "twoschur/tensor_oracle.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace twoschur;

namespace {

py::object to_python(const nlohmann::json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Primitive idempotents of two-row Schur algebra endomorphism rings in characteristic 3";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    m.def("is_prime", &is_prime, "n"_a);
    m.def("digits", [](Natural a, Natural p) { return digits(a, p).digits(); }, "a"_a, "p"_a);
    m.def("lucas_binom", &lucas_binom, "a"_a, "b"_a, "p"_a);
    m.def("big_b", &big_b, "m"_a, "g"_a, "p"_a = 3);
    m.def("carry_sequence", [](Natural m, Natural g, Natural p) { return carry_sequence(m, g, p).carries(); },
          "m"_a, "g"_a, "p"_a = 3);

    py::class_<AlgebraContext>(m, "AlgebraContext")
        .def(py::init<Natural, Natural, Natural>(), "lambda1"_a, "lambda2"_a, "p"_a = 3)
        .def_property_readonly("lambda1", &AlgebraContext::lambda1)
        .def_property_readonly("lambda2", &AlgebraContext::lambda2)
        .def_property_readonly("p", &AlgebraContext::p)
        .def_property_readonly("m", &AlgebraContext::m)
        .def_property_readonly("r", &AlgebraContext::r)
        .def_property_readonly("dimension", &AlgebraContext::dimension)
        .def("__repr__", [](const AlgebraContext& c) {
            return "AlgebraContext((" + std::to_string(c.lambda1()) + ", " + std::to_string(c.lambda2()) +
                   "), p=" + std::to_string(c.p()) + ")";
        });

    py::class_<AlgebraElement>(m, "AlgebraElement")
        .def(py::init<AlgebraContext, std::vector<Residue>>(), "context"_a, "coeffs"_a)
        .def_property_readonly("context", &AlgebraElement::context)
        .def_property_readonly("coeffs", &AlgebraElement::coeffs)
        .def("coeff", &AlgebraElement::coeff, "i"_a)
        .def("is_zero", &AlgebraElement::is_zero)
        .def("support_min", &AlgebraElement::support_min)
        .def("support_max", &AlgebraElement::support_max)
        .def("to_json", [](const AlgebraElement& x) { return to_json(x).dump(); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", [](const AlgebraElement& x) { return to_text(x); })
        .def("__repr__", [](const AlgebraElement& x) { return "AlgebraElement(" + to_text(x) + ")"; });

    m.def("element_from_json", [](const std::string& s) { return element_from_json(nlohmann::json::parse(s)); },
          "text"_a);
    m.def("zero", &zero, "ctx"_a);
    m.def("one", &one, "ctx"_a);
    m.def("basis_elem", &basis_elem, "ctx"_a, "i"_a);
    m.def("structure_constant", &structure_constant, "ctx"_a, "i"_a, "j"_a, "h"_a);
    m.def("mul", &mul, "x"_a, "y"_a);
    m.def("scale", &scale, "x"_a, "c"_a);

    m.def("build", &build, "ctx"_a, "g"_a);
    m.def("build_prefix", &build_prefix, "ctx"_a, "g"_a, "t"_a, "inclusive"_a = true);
    m.def("psi", &psi, "ctx"_a, "u"_a);
    m.def("psi_recursion_check", &psi_recursion_check, "ctx"_a, "t"_a);
    m.def("factor_sequence", &factor_sequence_string, "ctx"_a, "g"_a);
    m.def(
        "square_identity_holds",
        [](const AlgebraContext& ctx, std::size_t u) {
            for (auto w : {SquareIdentity::b3sq, SquareIdentity::b2sq, SquareIdentity::b3b2}) {
                if (square_closed_form(ctx, u, w) != square_direct(ctx, u, w)) return false;
            }
            return true;
        },
        "ctx"_a, "u"_a);

    m.def("summands", [](const AlgebraContext& ctx) {
        py::list out;
        for (const auto& s : summands(ctx)) out.append(to_python(to_json(s)));
        return out;
    });
    m.def("kostka", &kostka, "lam"_a, "mu"_a, "p"_a = 3);
    m.def("two_row_partitions", &two_row_partitions, "max_r"_a);
    m.def(
        "verify_complete_set",
        [](const AlgebraContext& ctx) {
            const VerificationReport r = verify_complete_set(ctx);
            py::dict d = to_python(to_json(r));
            d["ok"] = r.ok();
            d["certification"] = r.certification;
            return d;
        },
        "ctx"_a);

    m.def(
        "cross_validate",
        [](unsigned r_max) {
            py::gil_scoped_release release;
            const OracleReport r = cross_validate(r_max);
            py::gil_scoped_acquire acquire;
            return to_python(to_json(r));
        },
        "r_max"_a);
    m.def(
        "realize_element",
        [](const AlgebraElement& x) { return to_python(to_json(realize_element(x))); }, "x"_a);
}
