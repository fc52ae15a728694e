#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "invoser/bell.hpp"
#include "invoser/errors.hpp"
#include "invoser/expr.hpp"
#include "invoser/involution.hpp"
#include "invoser/json_io.hpp"
#include "invoser/series.hpp"
#include "invoser/stirling_lah.hpp"
#include "invoser/verify.hpp"

namespace py = pybind11;
using namespace invoser;

namespace {

std::vector<Rational> to_rationals(const std::vector<std::string>& items) {
    std::vector<Rational> out;
    out.reserve(items.size());
    for (const auto& s : items) out.push_back(Rational::from_string(s));
    return out;
}

std::vector<std::string> to_strings(const std::vector<Rational>& items) {
    std::vector<std::string> out;
    out.reserve(items.size());
    for (const auto& q : items) out.push_back(q.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_invoser, m) {
    m.doc() = "Exact Bell/Stirling/Lah polynomials and involutory power series";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<NotInvertible>(m, "NotInvertibleError", base);
    py::register_exception<NotInvolution>(m, "NotInvolutionError", base);
    py::register_exception<TrivialInvolution>(m, "TrivialInvolutionError", base);
    py::register_exception<ZeroAtPole>(m, "ZeroAtPoleError", base);
    py::register_exception<OrderMismatch>(m, "OrderMismatchError", base);
    py::register_exception<SyntaxError>(m, "ExpressionSyntaxError", base);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const std::string& s) { return Rational::from_string(s); }))
        .def(py::init<int>())
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& q) { return "Rational('" + q.str() + "')"; })
        .def("__add__", [](const Rational& a, const Rational& b) { return a + b; })
        .def("__sub__", [](const Rational& a, const Rational& b) { return a - b; })
        .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; })
        .def("__truediv__", [](const Rational& a, const Rational& b) { return a / b; })
        .def("__neg__", [](const Rational& a) { return -a; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__hash__", [](const Rational& a) { return py::hash(py::str(a.str())); });
    py::implicitly_convertible<std::string, Rational>();
    py::implicitly_convertible<int, Rational>();

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def_static("from_json",
                    [](const std::string& text) {
                        return poly_from_json(nlohmann::json::parse(text));
                    })
        .def("to_json", [](const LaurentPoly& p) { return poly_to_json(p).dump(); })
        .def("__str__", &LaurentPoly::str)
        .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.str() + "')"; })
        .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
        .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
        .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
        .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
        .def("eval",
             [](const LaurentPoly& p, const std::vector<Rational>& args) {
                 return p.eval(args);
             })
        .def("substitute", [](const LaurentPoly& p, const std::vector<LaurentPoly>& images) {
            return p.substitute(images);
        });

    py::class_<Series>(m, "Series")
        .def(py::init([](int order, const std::vector<Rational>& coeffs) {
                 return Series(order, coeffs);
             }),
             py::arg("order"), py::arg("coeffs"))
        .def_static("identity", &Series::identity)
        .def_static("from_json",
                    [](const std::string& text) {
                        return series_from_json(nlohmann::json::parse(text));
                    })
        .def("to_json", [](const Series& f) { return series_to_json(f).dump(); })
        .def_property_readonly("order", &Series::order)
        .def("coeff", [](const Series& f, int n) { return f.coeff(n); })
        .def("coeffs", [](const Series& f) { return to_strings(f.coeffs()); })
        .def("invertible", &Series::invertible)
        .def("__eq__", [](const Series& a, const Series& b) { return a == b; })
        .def("__repr__", [](const Series& f) { return "Series(" + series_str(f) + ")"; });

    m.def("series_add", &series_add<Rational>);
    m.def("series_mul", &series_mul<Rational>);
    m.def("series_compose", &series_compose<Rational>);
    m.def("series_inverse", &series_inverse<Rational>);
    m.def("series_derivative", &series_derivative<Rational>);
    m.def("series_negate_argument", &series_negate_argument<Rational>);
    m.def("series_power_over_factorial", &series_power_over_factorial<Rational>);
    m.def("is_involution", &is_involution<Rational>);
    m.def("is_odd", &is_odd<Rational>);

    m.def("enumerate_partitions", [](int n, int k) {
        std::vector<std::vector<int>> out;
        for (const auto& p : enumerate_partitions(n, k)) out.push_back(p.counts);
        return out;
    });
    m.def("bell_poly", [](int n, int k) { return bell_poly(n, k); });
    m.def("bell_eval",
          [](int n, int k, const std::vector<Rational>& args) { return bell_eval(n, k, args); });
    m.def("stirling_first_poly", [](int n, int k) { return stirling_first_poly(n, k); });
    m.def("lah_poly", [](int n, int k) { return lah_poly(n, k); });
    m.def("lah_eval",
          [](int n, int k, const std::vector<Rational>& args) { return lah_eval(n, k, args); });

    m.def(
        "involution_from_even_seeds",
        [](const std::vector<Rational>& seeds, int order) {
            return involution_from_even_seeds(SeedSpec::even(seeds), order);
        },
        py::arg("even_seeds"), py::arg("order"));
    m.def(
        "involution_from_even_seeds_symbolic",
        [](int seed_count, int order) {
            return involution_from_even_seeds_symbolic(seed_count, order).coeffs();
        },
        py::arg("seed_count"), py::arg("order"),
        "Coefficient list of the generic involution, each entry a polynomial in "
        "the free seeds a_k (rendered as X_k)");
    m.def("involution_from_conjugator", &involution_from_conjugator);
    m.def(
        "conjugator_from_involution",
        [](const Series& f, const std::vector<Rational>& odd_seeds) {
            return conjugator_from_involution(f, SeedSpec::odd(odd_seeds));
        },
        py::arg("f"), py::arg("odd_seeds"));
    m.def("involution_check_failures",
          [](const Series& f) { return involution_check_report(f).failures; });
    m.def("same_involution_iff_odd_transfer", [](const Series& g, const Series& h) {
        OddTransfer t = same_involution_iff_odd_transfer(g, h);
        return py::make_tuple(t.equal, t.psi);
    });
    m.def("coefficient_form_check", &coefficient_form_check);

    m.def(
        "eval_series",
        [](const std::string& expr, int order) { return eval_series(expr, order); },
        py::arg("expr"), py::arg("order"));
    m.def("format_expression",
          [](const std::string& expr) { return format_expression(*parse_expression(expr)); });

    m.def(
        "run_suite",
        [](const std::string& name, int sym_max_n, int numeric_max_n, int trials,
           std::uint64_t seed) {
            VerifyOptions opt;
            opt.sym_max_n = sym_max_n;
            opt.numeric_max_n = numeric_max_n;
            opt.trials = trials;
            opt.seed = seed;
            CheckReport r = run_suite(name, opt);
            return py::make_tuple(r.passed(), r.checks, r.failures);
        },
        py::arg("name"), py::arg("sym_max_n") = 6, py::arg("numeric_max_n") = 8,
        py::arg("trials") = 5, py::arg("seed") = 20260101);
}
