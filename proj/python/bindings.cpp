#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logsurf/errors.hpp"
#include "logsurf/io.hpp"
#include "logsurf/reports.hpp"

namespace py = pybind11;

namespace {

using namespace logsurf;

std::map<std::string, Rational> coefficients_from(const std::map<std::string, std::string>& values) {
    std::map<std::string, Rational> out;
    for (const auto& [name, text] : values) {
        out[name] = parse_rational(text);
    }
    return out;
}

std::map<std::string, std::string> coefficients_to(const std::map<std::string, Rational>& values) {
    std::map<std::string, std::string> out;
    for (const auto& [name, value] : values) {
        out[name] = format_rational(value);
    }
    return out;
}

std::vector<std::string> class_to(const DivClass& cls) {
    std::vector<std::string> out;
    for (const auto& c : cls.coeffs) {
        out.push_back(format_rational(c));
    }
    return out;
}

TieBreak tiebreak_arg(const std::string& text) {
    const auto tb = tiebreak_from_string(text);
    if (!tb) {
        throw PreconditionError("unknown tie-break order '" + text + "'");
    }
    return *tb;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact intersection theory, singularity classification and the adjoint "
              "contraction program for combinatorial log surfaces.";

    // Base first: pybind11 consults the newest translator first, so the
    // specific exceptions must be registered after the catch-all.
    py::register_exception<Error>(m, "LogsurfError");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<NotNegativeDefinite>(m, "NotNegativeDefiniteError");
    py::register_exception<NotPseudoEffective>(m, "NotPseudoEffectiveError");
    py::register_exception<AmbiguousConfiguration>(m, "AmbiguousConfigurationError");

    py::class_<LogSurface>(m, "LogSurface")
        .def_property_readonly("rank", [](const LogSurface& x) { return x.lattice.rank; })
        .def_property_readonly("basis", [](const LogSurface& x) { return x.basis; })
        .def_property_readonly("curve_names",
                               [](const LogSurface& x) {
                                   std::vector<std::string> names;
                                   for (const auto& c : x.curves) {
                                       names.push_back(c.name);
                                   }
                                   return names;
                               })
        .def_property_readonly("contracted",
                               [](const LogSurface& x) {
                                   return std::vector<std::string>(x.contracted.begin(), x.contracted.end());
                               })
        .def_property_readonly("picard_number", [](const LogSurface& x) { return picard_number(x); })
        .def("curve_class",
             [](const LogSurface& x, const std::string& name) {
                 const Curve* curve = x.find_curve(name);
                 if (curve == nullptr) {
                     throw PreconditionError("unknown curve '" + name + "'");
                 }
                 return class_to(curve->cls);
             })
        .def("canonical_class", [](const LogSurface& x) { return class_to(x.lattice.canonical); })
        .def("boundary", [](const LogSurface& x) { return coefficients_to(x.boundary); })
        .def("with_boundary",
             [](const LogSurface& x, const std::map<std::string, std::string>& boundary) {
                 return with_boundary(x, coefficients_from(boundary));
             })
        .def("with_assumptions",
             [](const LogSurface& x, bool snc, bool complete) {
                 return with_assumptions(x, Assumptions{snc, complete});
             },
             py::arg("snc") = true, py::arg("complete") = true)
        .def("add_curve",
             [](const LogSurface& x, const std::string& name, const std::vector<std::string>& cls,
                long long pa) {
                 DivClass d;
                 for (const auto& c : cls) {
                     d.coeffs.push_back(parse_rational(c));
                 }
                 return add_curve(x, name, d, pa);
             })
        .def("blow_up",
             [](const LogSurface& x, const std::map<std::string, long long>& mults, const std::string& name) {
                 return blow_up(x, mults, name);
             },
             py::arg("mults") = std::map<std::string, long long>{}, py::arg("name") = std::string())
        .def("blow_down", [](const LogSurface& x, const std::string& name) { return blow_down(x, name); })
        .def("contract",
             [](const LogSurface& x, const std::vector<std::string>& names, bool allow_boundary) {
                 return contract(x, std::set<std::string>(names.begin(), names.end()), allow_boundary);
             },
             py::arg("names"), py::arg("allow_boundary") = false)
        .def("validate",
             [](const LogSurface& x) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& v : validate(x)) {
                     out.emplace_back(v.code, v.detail);
                 }
                 return out;
             })
        .def("parse_class", &parse_class_expr)
        .def("format_class",
             [](const LogSurface& x, const std::vector<std::string>& coords) {
                 DivClass d;
                 for (const auto& c : coords) {
                     d.coeffs.push_back(parse_rational(c));
                 }
                 return format_class_expr(x, d);
             })
        .def("to_json", &emit_surface)
        .def("__repr__", [](const LogSurface& x) {
            return "<LogSurface rank=" + std::to_string(x.lattice.rank) +
                   " curves=" + std::to_string(x.curves.size()) +
                   " contracted=" + std::to_string(x.contracted.size()) + ">";
        });

    m.def("projective_plane", &projective_plane);
    m.def("hirzebruch", &hirzebruch, py::arg("e"));
    m.def("parse_surface", &parse_surface, py::arg("text"));

    m.def("intersect",
          [](const LogSurface& x, const std::string& a, const std::string& b) {
              return format_rational(
                  intersect(x.lattice, parse_class_expr(x, a), parse_class_expr(x, b)));
          },
          "Intersection number of two classes given as expressions.");
    m.def("pair_x",
          [](const LogSurface& x, const std::string& a, const std::string& b) {
              return format_rational(pair_x(x, parse_class_expr(x, a), parse_class_expr(x, b)));
          },
          "Intersection number on X (through the orthogonal pullback).");
    m.def("mumford_pullback",
          [](const LogSurface& x, const std::string& expr) {
              return format_class_expr(x, mumford_pullback(x, parse_class_expr(x, expr)));
          });
    m.def("discrepancies",
          [](const LogSurface& x) { return coefficients_to(log_pullback(x).discrepancies); });
    m.def("numerical_dimension",
          [](const LogSurface& x, const std::string& expr) {
              return numerical_dimension(x, parse_class_expr(x, expr));
          });
    m.def("kappa_via_abundance", [](const LogSurface& x) { return kappa_via_abundance(x); });
    m.def("fundamental_cycle",
          [](const LogSurface& x, const std::vector<std::string>& component) {
              return format_class_expr(x, fundamental_cycle(x, component));
          });
    m.def("is_rational_singularity",
          [](const LogSurface& x, const std::vector<std::string>& component) {
              return is_rational_singularity(x, component);
          });
    m.def("canonical_model", [](const LogSurface& x) { return canonical_model(x); });
    m.def("nef_threshold",
          [](const LogSurface& x, const std::map<std::string, std::string>& from,
             const std::map<std::string, std::string>& to) {
              return format_rational(nef_threshold(x, coefficients_from(from), coefficients_from(to)));
          });

    // Composite results are returned as JSON report strings; the package
    // wrapper decodes them into dictionaries.
    m.def("classify_json", [](const LogSurface& x) { return report_classify(x); });
    m.def("mmp_json",
          [](const LogSurface& x, const std::string& tiebreak) {
              return report_mmp(x, tiebreak_arg(tiebreak));
          },
          py::arg("surface"), py::arg("tiebreak") = "list");
    m.def("zariski_json",
          [](const LogSurface& x, const std::string& expr) {
              return report_zariski(x, parse_class_expr(x, expr));
          });
    m.def("lct_json",
          [](const LogSurface& x, const std::map<std::string, std::string>& theta) {
              return report_lct(x, coefficients_from(theta));
          });
    m.def("validate_json", [](const LogSurface& x) { return report_validate(x); });

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
