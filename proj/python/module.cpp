#include "pencil/combinant.hpp"
#include "pencil/error.hpp"
#include "pencil/form_io.hpp"
#include "pencil/omega.hpp"
#include "pencil/syzygy.hpp"
#include "pencil/transvectant.hpp"
#include "pencil/wigner.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pencil;

namespace {

// Rationals cross the boundary as fractions.Fraction, through their string form.
py::object to_fraction(const Rational& q)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.str());
}

Rational from_python(const py::handle& obj)
{
    if (py::isinstance<py::float_>(obj)) {
        throw py::type_error("floats are not accepted; pass int, Fraction or 'p/q'");
    }
    return Rational::parse(py::str(obj).cast<std::string>());
}

py::list fractions(std::span<const Rational> qs)
{
    py::list out;
    for (const auto& q : qs) {
        out.append(to_fraction(q));
    }
    return out;
}

py::dict surd_dict(const SurdSum& s)
{
    py::dict out;
    for (const auto& [n, c] : s.terms()) {
        out[py::int_(py::str(n.get_str()))] = to_fraction(c);
    }
    return out;
}

std::array<int, 9> twice_array(const std::vector<int>& twice)
{
    if (twice.size() != 9) {
        throw PreconditionError("a 9-j array needs nine entries");
    }
    std::array<int, 9> out{};
    std::copy(twice.begin(), twice.end(), out.begin());
    return out;
}

std::vector<int> flatten(const NineJArray& arr)
{
    std::vector<int> out;
    for (const auto& row : arr.rows) {
        for (HalfInt j : row) {
            out.push_back(j.twice);
        }
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact transvectants, combinants and quadratic syzygies of binary forms";

    auto base = py::register_exception<Error>(m, "PencilError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", base);
    py::register_exception<DegreeMismatch>(m, "DegreeMismatch", base);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", base);
    py::register_exception<NotDivisible>(m, "NotDivisible", base);
    py::register_exception<DegeneratePencil>(m, "DegeneratePencil", base);
    py::register_exception<FormulaViolation>(m, "FormulaViolation", base);
    py::register_exception<ParseError>(m, "ParseError", base);

    py::class_<BinaryForm>(m, "Form")
        .def(py::init([](const py::sequence& coeffs) {
                 std::vector<Rational> qs;
                 for (const auto& c : coeffs) {
                     qs.push_back(from_python(c));
                 }
                 if (qs.empty()) {
                     throw PreconditionError("a form needs at least one coefficient");
                 }
                 return BinaryForm(std::move(qs));
             }),
             py::arg("coeffs"), "Coefficients of x1^(d-k) x2^k for k = 0..d")
        .def_static("zero", [](int order) { return BinaryForm(order); }, py::arg("order"))
        .def_static("parse", [](const std::string& text) { return parse_form(text); }, py::arg("text"))
        .def_static("from_json", [](const std::string& text) { return form_from_json(nlohmann::json::parse(text)); })
        .def("to_json", [](const BinaryForm& f) { return form_to_json(f).dump(); })
        .def_property_readonly("order", &BinaryForm::order)
        .def_property_readonly("coeffs", [](const BinaryForm& f) { return fractions(f.coeffs()); })
        .def("is_zero", &BinaryForm::is_zero)
        .def("diff", [](const BinaryForm& f, int first, int second) { return form_diff(f, first, second); },
             py::arg("first"), py::arg("second"))
        .def("substitute", [](const BinaryForm& f, const py::handle& a, const py::handle& b, const py::handle& c,
                              const py::handle& d) {
            return substitute_linear(f, from_python(a), from_python(b), from_python(c), from_python(d));
        })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def("__mul__", [](const BinaryForm& f, const py::handle& s) { return f * from_python(s); })
        .def("__rmul__", [](const BinaryForm& f, const py::handle& s) { return f * from_python(s); })
        .def(py::self == py::self)
        .def("__str__", &format_form)
        .def("__repr__", [](const BinaryForm& f) { return "Form('" + format_form(f) + "')"; });

    m.def("random_form", [](int order, std::uint64_t seed, int bound) { return random_form(order, seed, bound); },
          py::arg("order"), py::arg("seed"), py::arg("bound") = 10);
    m.def("random_pencil",
          [](int d, std::uint64_t seed, int bound) {
              Pencil p = random_pencil(d, seed, bound);
              return std::make_pair(p.a(), p.b());
          },
          py::arg("d"), py::arg("seed"), py::arg("bound") = 10);
    m.def("exact_divide", &exact_divide);
    m.def("transvectant", &transvectant, py::arg("f"), py::arg("g"), py::arg("q"));
    m.def("combinants", [](const BinaryForm& a, const BinaryForm& b) { return combinant_sequence(Pencil(a, b)).entries; });
    m.def("wronskian", [](const BinaryForm& a, const BinaryForm& b, const BinaryForm& f) {
        return wronskian(Pencil(a, b), f);
    });
    m.def("membership_defect", [](const BinaryForm& a, const BinaryForm& b, const BinaryForm& f) {
        return membership_defect(Pencil(a, b), f);
    });

    m.def("theta", [](int d, int r, int i, int j) { return to_fraction(theta(d, r, i, j)); });
    m.def("syzygy_table", [](int d, int r) {
        py::dict out;
        for (const auto& [ij, alpha] : syzygy_table(d, r).alphas) {
            out[py::make_tuple(ij.i, ij.j)] = to_fraction(alpha);
        }
        return out;
    });
    m.def("evaluate_syzygy", [](const BinaryForm& a, const BinaryForm& b, int r) {
        return evaluate_syzygy(Pencil(a, b), r);
    });
    m.def("recover_combinant", [](const BinaryForm& a, const BinaryForm& b, int r) {
        return recover_combinant(Pencil(a, b), r);
    });
    m.def("gamma", [](int r, int d) { return to_fraction(gamma(r, d)); });
    m.def("syzygy_space_dim", &syzygy_space_dim);
    m.def("verify_theta",
          [](int d, int r, int i, int j, const py::handle& f1, const py::handle& f2) {
              return to_fraction(verify_theta(d, r, i, j, LinearSymbol(from_python(f1), from_python(f2))));
          },
          py::arg("d"), py::arg("r"), py::arg("i"), py::arg("j"), py::arg("f1") = 1, py::arg("f2") = 0);

    m.def("wigner3j",
          [](int j1, int j2, int j3, int m1, int m2, int m3) {
              auto h = HalfInt::from_twice;
              return surd_dict(wigner3j(h(j1), h(j2), h(j3), h(m1), h(m2), h(m3)));
          },
          "Arguments are twice the angular momenta; returns {radicand: coefficient}");
    m.def("wigner6j",
          [](int j1, int j2, int j3, int j4, int j5, int j6) {
              auto h = HalfInt::from_twice;
              return surd_dict(wigner6j(h(j1), h(j2), h(j3), h(j4), h(j5), h(j6)));
          },
          "Arguments are twice the angular momenta; returns {radicand: coefficient}");
    m.def("wigner9j",
          [](const std::vector<int>& twice) { return surd_dict(wigner9j(NineJArray::from_twice(twice_array(twice)))); },
          "Nine entries times two, row by row; returns {radicand: coefficient}");
    m.def("combinant_9j_arrays", [](int d, int r, int i, int j) {
        const CombinantArrays arrays = combinant_9j_array(d, r, i, j);
        return std::make_pair(flatten(arrays.b), flatten(arrays.b_prime));
    });
}
