#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ozaki/classes.hpp"
#include "ozaki/functionals.hpp"
#include "ozaki/series.hpp"
#include "ozaki/verifier.hpp"

namespace py = pybind11;
using namespace ozaki;

namespace {

using ComplexList = std::vector<Complex>;

ComplexList to_list(const TruncatedSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

py::tuple triple_tuple(const CoeffTriple& t) { return py::make_tuple(t.a2, t.a3, t.a4); }

CoeffTriple triple_from(const py::sequence& seq) {
    if (py::len(seq) != 3) throw py::value_error("expected (a2, a3, a4)");
    return {seq[0].cast<Complex>(), seq[1].cast<Complex>(), seq[2].cast<Complex>()};
}

py::dict bound_dict(const BoundEntry& e) {
    py::dict d;
    d["class"] = std::string(to_string(e.label));
    d["functional"] = std::string(to_string(e.functional));
    d["kind"] = std::string(to_string(e.kind));
    auto side = [](const std::optional<BoundSide>& s) -> py::object {
        if (!s) return py::none();
        return py::make_tuple(s->value.num, s->value.den, std::string(to_string(s->witness)));
    };
    d["lower"] = side(e.lower);
    d["upper"] = side(e.upper);
    return d;
}

BlaschkeProduct product_from(double rotation, const ComplexList& zeros) { return {rotation, zeros}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coefficient functionals of the Ozaki close-to-convex classes F and G";
    m.attr("__version__") = "0.1.0";

    py::register_exception<SeriesError>(m, "SeriesError", PyExc_ValueError);

    py::class_<TruncatedSeries>(m, "TruncatedSeries")
        .def(py::init<std::vector<Complex>>(), py::arg("coeffs"))
        .def_property_readonly("order", &TruncatedSeries::order)
        .def_property_readonly("coeffs", &to_list)
        .def("__getitem__", [](const TruncatedSeries& s, std::size_t k) {
            if (k > s.order()) throw py::index_error();
            return s[k];
        })
        .def("__len__", [](const TruncatedSeries& s) { return s.order() + 1; })
        .def("__eq__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a == b; })
        .def("__repr__", [](const TruncatedSeries& s) {
            return "TruncatedSeries(order=" + std::to_string(s.order()) + ")";
        });

    py::class_<NormalizedFunction>(m, "NormalizedFunction")
        .def(py::init<TruncatedSeries>(), py::arg("series"))
        .def_property_readonly("series", &NormalizedFunction::series)
        .def_property_readonly("order", &NormalizedFunction::order)
        .def("a", &NormalizedFunction::a, py::arg("n"));

    m.def("linear_combine", &linear_combine);
    m.def("mul", &mul);
    m.def("div", [](const TruncatedSeries& s, const TruncatedSeries& t) { return ozaki::div(s, t); });
    m.def("derivative", &derivative);
    m.def("antiderivative", &antiderivative);
    m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
    m.def("exp_series", &exp_series);
    m.def("log_series", &log_series);
    m.def("pow_real", &pow_real, py::arg("s"), py::arg("alpha"));
    m.def("log_ratio", &log_ratio);
    m.def("compositional_inverse", &compositional_inverse);

    py::enum_<ClassLabel>(m, "ClassLabel").value("F", ClassLabel::F).value("G", ClassLabel::G);

    py::class_<OzakiFunction>(m, "OzakiFunction")
        .def_readonly("label", &OzakiFunction::label)
        .def_readonly("f", &OzakiFunction::f)
        .def_property_readonly("coefficients", [](const OzakiFunction& o) { return to_list(o.f.series()); });

    m.def(
        "schwarz_from_blaschke",
        [](double rotation, const ComplexList& zeros, std::size_t order, std::optional<py::tuple> secondary,
           double weight) {
            BlaschkeSpec spec{product_from(rotation, zeros), std::nullopt, weight};
            if (secondary) {
                spec.secondary = product_from((*secondary)[0].cast<double>(), (*secondary)[1].cast<ComplexList>());
            }
            return schwarz_from_blaschke(spec, order).c;
        },
        py::arg("rotation"), py::arg("zeros"), py::arg("order"), py::arg("secondary") = py::none(),
        py::arg("weight") = 1.0,
        "Coefficients c1..cN of z*B(z); `secondary` is an optional (rotation, zeros) mixed with `weight`.");
    m.def("validate_schwarz_prefix", [](const ComplexList& c) { return validate_schwarz_prefix(SchwarzCoeffs{c}); });
    m.def("caratheodory_from_schwarz",
          [](const ComplexList& c, std::size_t order) { return caratheodory_from_schwarz(SchwarzCoeffs{c}, order).p; });
    m.def(
        "libera_expand",
        [](double p1, Complex xi, Complex eta, Complex gamma) {
            return libera_expand(LiberaParams(p1, xi, eta, gamma)).p;
        },
        py::arg("p1"), py::arg("xi"), py::arg("eta"), py::arg("gamma"));
    m.def(
        "build_member",
        [](ClassLabel label, const ComplexList& c, std::size_t order) {
            return build_member(label, SchwarzCoeffs{c}, order);
        },
        py::arg("label"), py::arg("schwarz"), py::arg("order") = 8);
    m.def(
        "extremal_member", [](const std::string& name, std::size_t order) { return extremal_member(name, order); },
        py::arg("name"), py::arg("order") = 8);
    m.def("coeffs_from_schwarz_direct", [](ClassLabel label, const ComplexList& c) {
        return triple_tuple(coeffs_from_schwarz_direct(label, SchwarzCoeffs{c}));
    });
    m.def("coeffs_from_caratheodory_direct", [](ClassLabel label, const ComplexList& p) {
        return triple_tuple(coeffs_from_caratheodory_direct(label, CaratheodoryCoeffs{p}));
    });

    m.def("inverse_coeffs", [](const py::sequence& t) {
        const auto r = inverse_coeffs(triple_from(t));
        return py::make_tuple(r.A2, r.A3, r.A4);
    });
    m.def("log_coeffs", [](const py::sequence& t) {
        const auto r = log_coeffs(triple_from(t));
        return py::make_tuple(r.gamma1, r.gamma2);
    });
    m.def("log_inverse_coeffs", [](const py::sequence& t) {
        const auto r = log_inverse_coeffs(triple_from(t));
        return py::make_tuple(r.Gamma1, r.Gamma2, r.Gamma3);
    });
    m.def("schwarzian_initial", [](const py::sequence& t) {
        const auto r = schwarzian_initial(triple_from(t));
        return py::make_tuple(r.S3, r.S4);
    });
    m.def("toeplitz_t21_log", [](const py::sequence& t) { return toeplitz_t21_log(triple_from(t)); });
    m.def("successive_diffs", [](const py::sequence& t) {
        const auto r = successive_diffs(triple_from(t));
        return py::make_tuple(r.diff_A, r.diff_Gamma);
    });
    m.def("rotate_to_real_a2", &rotate_to_real_a2);

    py::class_<FunctionalReport>(m, "FunctionalReport")
        .def_readonly("A2", &FunctionalReport::A2)
        .def_readonly("A3", &FunctionalReport::A3)
        .def_readonly("A4", &FunctionalReport::A4)
        .def_readonly("gamma1", &FunctionalReport::gamma1)
        .def_readonly("gamma2", &FunctionalReport::gamma2)
        .def_readonly("Gamma1", &FunctionalReport::Gamma1)
        .def_readonly("Gamma2", &FunctionalReport::Gamma2)
        .def_readonly("Gamma3", &FunctionalReport::Gamma3)
        .def_readonly("S3", &FunctionalReport::S3)
        .def_readonly("S4", &FunctionalReport::S4)
        .def_readonly("T21_log", &FunctionalReport::T21_log)
        .def_readonly("diff_A", &FunctionalReport::diff_A)
        .def_readonly("diff_Gamma", &FunctionalReport::diff_Gamma);

    m.def("full_report", py::overload_cast<const OzakiFunction&>(&full_report));
    m.def("full_report_of", py::overload_cast<const NormalizedFunction&>(&full_report));

    py::enum_<ObjectiveId> objective(m, "ObjectiveId");
    for (ObjectiveId id : kAllObjectives) objective.value(std::string(to_string(id)).c_str(), id);
    py::enum_<OptMode>(m, "OptMode").value("max", OptMode::Max).value("min", OptMode::Min);

    py::class_<OptResult>(m, "OptResult")
        .def_readonly("id", &OptResult::id)
        .def_readonly("mode", &OptResult::mode)
        .def_readonly("value", &OptResult::value)
        .def_property_readonly("argpoint", [](const OptResult& r) { return py::make_tuple(r.argpoint.x, r.argpoint.y); })
        .def_readonly("grid_resolution", &OptResult::grid_resolution)
        .def_readonly("refine_iterations", &OptResult::refine_iterations)
        .def_property_readonly("paper_value",
                               [](const OptResult& r) -> py::object {
                                   if (!r.paper_value) return py::none();
                                   return py::make_tuple(r.paper_value->num, r.paper_value->den);
                               })
        .def_readonly("gap", &OptResult::gap);

    m.def("eval_objective", [](ObjectiveId id, double x, double y) { return eval_objective(id, {x, y}); });
    m.def("grid_extremize", &grid_extremize, py::arg("id"), py::arg("mode"), py::arg("resolution") = 2000,
          py::arg("refine") = 3);

    m.def("bound_ledger", [] {
        py::list out;
        for (const BoundEntry& e : bound_ledger()) out.append(bound_dict(e));
        return out;
    });
    m.def("check_extremals", [] {
        py::list out;
        for (const ExtremalCheck& c : check_extremals()) {
            py::dict d = bound_dict(c.entry);
            py::list residuals;
            for (const SideCheck& s : c.sides) residuals.append(s.residual);
            d["residuals"] = residuals;
            d["passed"] = c.passed();
            out.append(d);
        }
        return out;
    });
    m.def(
        "sample_and_check",
        [](ClassLabel label, std::size_t count, std::size_t order, std::uint64_t seed, bool include_extremals,
           double tol, unsigned threads) {
            SampleConfig cfg;
            cfg.label = label;
            cfg.count = count;
            cfg.order = order;
            cfg.seed = seed;
            cfg.include_extremals = include_extremals;
            cfg.violation_tolerance = tol;
            cfg.threads = threads;
            const SampleReport rep = [&] {
                py::gil_scoped_release release;
                return sample_and_check(cfg);
            }();
            py::dict d;
            d["members"] = rep.members;
            d["violation_count"] = rep.violation_count;
            d["worst_violation"] = rep.worst_violation;
            py::dict stats;
            for (const FunctionalStats& s : rep.stats) {
                stats[py::str(std::string(to_string(s.entry.functional)))] =
                    py::make_tuple(s.empirical_min, s.empirical_max, s.margin);
            }
            d["stats"] = stats;
            return d;
        },
        py::arg("label"), py::arg("count") = 10000, py::arg("order") = 8, py::arg("seed") = 0,
        py::arg("include_extremals") = true, py::arg("tol") = 1e-9, py::arg("threads") = 0);
}
