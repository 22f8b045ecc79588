#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibprod/catalog.hpp"
#include "fibprod/engine.hpp"
#include "fibprod/errors.hpp"
#include "fibprod/fiblucas.hpp"
#include "fibprod/golden.hpp"

namespace py = pybind11;
using namespace fibprod;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

py::object to_py(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(to_py(r.numerator()), to_py(r.denominator()));
}

BigInt from_py_int(const py::handle& h) { return BigInt(py::str(h).cast<std::string>(), 10); }

Rational from_py(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(from_py_int(h));
    const py::object frac = py::module_::import("fractions").attr("Fraction")(h);
    return Rational(from_py_int(frac.attr("numerator")), from_py_int(frac.attr("denominator")));
}

IdentityId identity_of(const std::string& text) {
    if (auto id = parse_identity(text)) return *id;
    throw py::value_error("unknown identity label '" + text + "'");
}

py::object optional_rational(const std::optional<Rational>& r) { return r ? to_py(*r) : py::none(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic in Q(sqrt5) and verification of Fibonacci/Lucas product identities";

    py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
    py::register_exception<IndexCapExceeded>(m, "IndexCapExceeded", PyExc_OverflowError);
    py::register_exception<InvalidParams>(m, "InvalidParams", PyExc_ValueError);
    py::register_exception<ExactCapExceeded>(m, "ExactCapExceeded", PyExc_OverflowError);
    py::register_exception<CertificationError>(m, "CertificationError", PyExc_ArithmeticError);

    py::class_<GoldenExt>(m, "GoldenExt")
        .def(py::init([](const py::object& a, const py::object& b) { return GoldenExt(from_py(a), from_py(b)); }),
             py::arg("a"), py::arg("b") = 0)
        .def_static("phi", &GoldenExt::phi)
        .def_static("sqrt5", &GoldenExt::sqrt5)
        .def_property_readonly("a", [](const GoldenExt& x) { return to_py(x.a()); })
        .def_property_readonly("b", [](const GoldenExt& x) { return to_py(x.b()); })
        .def("conj", &GoldenExt::conj)
        .def("norm", [](const GoldenExt& x) { return to_py(x.norm()); })
        .def("inverse", &GoldenExt::inverse)
        .def("sign", &GoldenExt::sign)
        .def("to_decimal", &golden_to_decimal, py::arg("digits"))
        .def("__float__", [](const GoldenExt& x) { return std::stod(golden_to_decimal(x, 20)); })
        .def("__str__", &GoldenExt::to_string)
        .def("__repr__", [](const GoldenExt& x) { return "GoldenExt(" + x.to_string() + ")"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__pow__", [](const GoldenExt& x, std::int64_t e) { return pow(x, e); })
        .def("__hash__", [](const GoldenExt& x) { return py::hash(py::str(x.to_string())); });

    m.def("fib", [](std::int64_t n) { return to_py(fib(n)); }, py::arg("n"));
    m.def("lucas", [](std::int64_t n) { return to_py(lucas(n)); }, py::arg("n"));
    m.def("phi_power", [](std::int64_t n) { return phi_power(n); }, py::arg("n"));

    m.def("list_identities", [] {
        py::list out;
        for (const auto& d : list_identities()) out.append(std::string(d.label));
        return out;
    });
    m.def(
        "lhs_term",
        [](const std::string& id, std::int64_t n, std::int64_t q, std::int64_t k) {
            return lhs_term(identity_of(id), {n, q}, k);
        },
        py::arg("identity"), py::arg("n"), py::arg("q"), py::arg("k"));
    m.def(
        "rhs_closed_form",
        [](const std::string& id, std::int64_t n, std::int64_t q) { return rhs_closed_form(identity_of(id), {n, q}); },
        py::arg("identity"), py::arg("n"), py::arg("q"));
    m.def(
        "partial_product",
        [](const std::string& id, std::int64_t n, std::int64_t q, std::int64_t N) {
            return partial_product(identity_of(id), {n, q}, N);
        },
        py::arg("identity"), py::arg("n"), py::arg("q"), py::arg("N"));
    m.def(
        "tail_bound",
        [](const std::string& id, std::int64_t n, std::int64_t q, std::int64_t N) {
            return to_py(tail_bound(identity_of(id), {n, q}, N));
        },
        py::arg("identity"), py::arg("n"), py::arg("q"), py::arg("N"));
    m.def("to_decimal", [](const py::object& x, unsigned long digits) {
        if (py::isinstance<GoldenExt>(x)) return golden_to_decimal(x.cast<GoldenExt>(), digits);
        return to_decimal(from_py(x), digits);
    }, py::arg("x"), py::arg("digits"));

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_property_readonly("identity", [](const VerificationReport& r) { return std::string(label(r.id)); })
        .def_property_readonly("n", [](const VerificationReport& r) { return r.params.n; })
        .def_property_readonly("q", [](const VerificationReport& r) { return r.params.q; })
        .def_readonly("N", &VerificationReport::N)
        .def_property_readonly("mode", [](const VerificationReport& r) { return std::string(mode_name(r.mode)); })
        .def_readonly("partial_product", &VerificationReport::partial_product)
        .def_readonly("rhs", &VerificationReport::rhs)
        .def_readonly("boundary", &VerificationReport::boundary)
        .def_property_readonly("deviation", [](const VerificationReport& r) { return optional_rational(r.deviation); })
        .def_property_readonly("tail_bound", [](const VerificationReport& r) { return optional_rational(r.tail_bound); })
        .def_readonly("passed", &VerificationReport::passed)
        .def_readonly("elapsed_ms", &VerificationReport::elapsed_ms)
        .def("__repr__", [](const VerificationReport& r) {
            return "<VerificationReport " + std::string(label(r.id)) + " n=" + std::to_string(r.params.n) +
                   " q=" + std::to_string(r.params.q) + " N=" + std::to_string(r.N) + " " +
                   std::string(mode_name(r.mode)) + (r.passed ? " passed>" : " failed>");
        });

    m.def(
        "verify_exact",
        [](const std::string& id, std::int64_t n, std::int64_t q, std::int64_t N) {
            return verify_exact(identity_of(id), {n, q}, N);
        },
        py::arg("identity"), py::arg("n"), py::arg("q"), py::arg("N"));
    m.def(
        "verify_limit",
        [](const std::string& id, std::int64_t n, std::int64_t q, std::int64_t N) {
            return verify_limit(identity_of(id), {n, q}, N);
        },
        py::arg("identity"), py::arg("n"), py::arg("q"), py::arg("N") = 40);
    m.def("special_evaluations", &special_evaluations);
}
