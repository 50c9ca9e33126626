#include "taurank/report.hpp"
#include "taurank/x07.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace taurank;

namespace {

// Python ints and Fractions cross the boundary as decimal text.
Integer to_integer(const py::handle& h) { return parse_integer(py::str(h)); }

Rational to_rational(const py::handle& h) { return parse_rational(py::str(h)); }

py::object from_integer(const Integer& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object from_rational(const Rational& v) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(from_integer(v.get_num()), from_integer(v.get_den()));
}

std::optional<Integer> opt_integer(const py::object& h) {
    if (h.is_none()) return std::nullopt;
    return to_integer(h);
}

std::vector<CurveRecord> load_db(const std::optional<std::string>& path) {
    return path ? ingest_database(*path) : bundled_database();
}

CurveRecord curve_arg(const py::object& curve, const std::vector<CurveRecord>& db) {
    if (py::isinstance<py::str>(curve)) return parse_curve(curve.cast<std::string>(), db);
    std::string text = "[";
    bool first = true;
    for (const auto& a : curve) {
        text += (first ? "" : ",") + std::string(py::str(a));
        first = false;
    }
    return parse_curve(text + "]", db);
}

py::tuple curve_tuple(const WeierstrassCurve& E) {
    return py::make_tuple(from_integer(E.a1), from_integer(E.a2), from_integer(E.a3), from_integer(E.a4),
                          from_integer(E.a6));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Parity and lower bounds for the Lambda(H)-rank tau of elliptic curves over Q";

    // later registrations are tried first, so the base class goes in first
    const auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SingularCurveError>(m, "SingularCurveError", domain.ptr());
    py::register_exception<UnknownLabelError>(m, "UnknownLabelError", domain.ptr());
    py::register_exception<ParseError>(m, "ParseError", domain.ptr());
    py::register_exception<DatabaseError>(m, "DatabaseError", PyExc_OSError);

    m.def(
        "analyze_json",
        [](const py::object& curve, const py::object& p, const py::object& selmer_rank, const py::object& lambda,
           const std::optional<std::string>& db) {
            const auto records = load_db(db);
            AnalysisOptions opts;
            opts.p = to_integer(p);
            opts.selmer_rank = opt_integer(selmer_rank);
            opts.lambda = opt_integer(lambda);
            opts.input_text = py::str(curve);
            return analysis_report(curve_arg(curve, records), opts).dump();
        },
        py::arg("curve"), py::arg("p") = 7, py::arg("selmer_rank") = py::none(), py::arg("lambda_") = py::none(),
        py::arg("db") = py::none());

    m.def("x07_points_json", [] { return x07_points_report().dump(); });
    m.def(
        "classify_exceptions_json",
        [](const std::optional<std::string>& db) { return classify_exceptions_report(load_db(db)).dump(); },
        py::arg("db") = py::none());
    m.def(
        "twist_scan_json",
        [](const py::object& curve, const py::object& p, const std::optional<std::string>& db) {
            const auto records = load_db(db);
            return twist_scan_report(curve_arg(curve, records), to_integer(p), records).dump();
        },
        py::arg("curve"), py::arg("p") = 7, py::arg("db") = py::none());

    m.def(
        "minimal_model",
        [](const py::object& curve) { return curve_tuple(minimal_model(curve_arg(curve, bundled_database()).curve).curve); },
        py::arg("curve"));
    m.def(
        "invariants",
        [](const py::object& curve) {
            const auto mm = minimal_model(curve_arg(curve, bundled_database()).curve);
            const auto inv = compute_invariants(mm.curve);
            py::dict d;
            d["minimal_model"] = curve_tuple(mm.curve);
            d["c4"] = from_integer(inv.c4);
            d["c6"] = from_integer(inv.c6);
            d["disc_min"] = from_integer(inv.disc);
            d["j"] = from_rational(inv.j);
            return d;
        },
        py::arg("curve"));
    m.def(
        "degree_parity",
        [](const py::object& curve, const py::object& p) {
            return to_string(degree_parity(curve_arg(curve, bundled_database()).curve, to_integer(p)).parity);
        },
        py::arg("curve"), py::arg("p") = 7);
    m.def(
        "factor",
        [](const py::object& n) {
            const auto f = factor(to_integer(n));
            py::list out;
            for (const auto& pp : f.factors) out.append(py::make_tuple(from_integer(pp.prime), pp.exponent));
            return py::make_tuple(f.sign, out);
        },
        py::arg("n"));
    m.def(
        "rational_roots",
        [](const py::sequence& coeffs) {
            std::vector<Integer> c;
            for (const auto& a : coeffs) c.push_back(to_integer(a));
            py::list out;
            for (const auto& r : rational_roots(c)) out.append(from_rational(r));
            return out;
        },
        py::arg("coeffs"), "Distinct rational roots of sum coeffs[i] x^i, ascending.");
    m.def(
        "j_pair_from_t",
        [](const py::object& t) {
            const auto jp = j_pair_from_t(to_rational(t));
            return py::make_tuple(from_rational(jp.j1), from_rational(jp.j2));
        },
        py::arg("t"));
    m.def(
        "primes_above_in_cyclotomic",
        [](const py::object& q, const py::object& p) {
            const auto s = primes_above_in_cyclotomic(to_integer(q), to_integer(p));
            return py::make_tuple(from_integer(s.count_in_Qmu_p), from_integer(s.stable_count_in_cyc));
        },
        py::arg("q"), py::arg("p"));
    m.def(
        "tau_scale", [](const py::object& tau, const py::object& deg) {
            return from_integer(tau_scale(to_integer(tau), to_integer(deg)));
        },
        py::arg("tau"), py::arg("cyc_degree"));
    m.def(
        "lambda_growth_main_term",
        [](const py::object& tau, const py::object& p, unsigned long mm, unsigned long n) {
            return from_integer(lambda_growth_main_term(to_integer(tau), to_integer(p), mm, n));
        },
        py::arg("tau_m"), py::arg("p"), py::arg("m"), py::arg("n"));
    m.def(
        "tau_from_lambda_s",
        [](const py::object& lambda, const py::object& s) {
            return from_integer(tau_from_lambda_s(to_integer(lambda), to_integer(s)));
        },
        py::arg("lambda_"), py::arg("s"));
}
