#include "logsurf/reports.hpp"

#include <sstream>

#include <json.hpp>

#include "logsurf/errors.hpp"
#include "logsurf/io.hpp"

namespace logsurf {

namespace {

using Json = nlohmann::ordered_json;

Json class_json(const LogSurface& x, const DivClass& cls) {
    Json coords = Json::array();
    for (const auto& c : cls.coeffs) {
        coords.push_back(format_rational(c));
    }
    return Json{{"coords", std::move(coords)}, {"expr", format_class_expr(x, cls)}};
}

/// name -> rational map emitted in curve-list order.
Json coefficient_json(const LogSurface& x, const std::map<std::string, Rational>& values) {
    Json out = Json::object();
    for (const auto& curve : x.curves) {
        if (auto it = values.find(curve.name); it != values.end()) {
            out[curve.name] = format_rational(it->second);
        }
    }
    return out;
}

Json warnings_json(const LogSurface& x) {
    Json warnings = Json::array();
    if (!x.from_construction) {
        warnings.push_back("raw-lattice input: geometric realizability is asserted by the caller");
    }
    if (!x.assumptions.snc_resolution) {
        warnings.push_back("snc_resolution not asserted: classification results are not certified");
    }
    if (!x.assumptions.curve_list_complete) {
        warnings.push_back("curve_list_complete not asserted: nefness and the program are relative to the list");
    }
    return warnings;
}

std::string finish(const Json& doc, bool human, const std::string& text) {
    if (human) {
        return text;
    }
    return doc.dump(2) + "\n";
}

}  // namespace

bool rationality_preserved(const LogSurface& x, const std::vector<MMPStep>& trace) {
    LogSurface current = x;
    for (const auto& component : contracted_components(current)) {
        if (!is_rational_singularity(current, component)) {
            return false;
        }
    }
    for (const auto& step : trace) {
        current = contract(current, {step.contracted_curve}, /*allow_boundary=*/true);
        for (const auto& component : contracted_components(current)) {
            if (!is_rational_singularity(current, component)) {
                return false;
            }
        }
    }
    return true;
}

std::string report_classify(const LogSurface& x, bool human) {
    const LogPullback pullback = log_pullback(x);
    const PairClass cls = classify(x);
    Json doc;
    doc["command"] = "classify";
    doc["kind"] = to_string(cls.kind);
    doc["certified"] = cls.certified;
    doc["nklt_locus"] = cls.nklt_locus;
    doc["nlc_locus"] = cls.nlc_locus;
    doc["delta_y"] = coefficient_json(x, pullback.delta_y);
    doc["discrepancies"] = coefficient_json(x, pullback.discrepancies);
    doc["warnings"] = warnings_json(x);

    std::ostringstream text;
    text << "pair class: " << to_string(cls.kind) << (cls.certified ? "" : " (uncertified)") << "\n";
    text << "non-klt locus:";
    for (const auto& name : cls.nklt_locus) {
        text << " " << name;
    }
    text << "\nnon-lc locus:";
    for (const auto& name : cls.nlc_locus) {
        text << " " << name;
    }
    text << "\ndiscrepancies:\n";
    for (const auto& curve : x.curves) {
        if (auto it = pullback.discrepancies.find(curve.name); it != pullback.discrepancies.end()) {
            text << "  a(" << curve.name << ") = " << format_rational(it->second) << "\n";
        }
    }
    return finish(doc, human, text.str());
}

std::string report_mmp(const LogSurface& x, TieBreak tb, bool human) {
    const MMPOutcome outcome = mmp_run(x, tb);

    Json doc;
    doc["command"] = "mmp";
    doc["outcome"] = to_string(outcome.kind);
    Json trace = Json::array();
    for (const auto& step : outcome.trace) {
        trace.push_back(Json{{"curve", step.contracted_curve},
                             {"degree", format_rational(step.degree)},
                             {"rho_before", step.rho_before},
                             {"rho_after", step.rho_after}});
    }
    doc["trace"] = std::move(trace);
    if (outcome.fiber_class) {
        doc["fiber_class"] = class_json(x, *outcome.fiber_class);
    }
    if (outcome.decomposition) {
        doc["decomposition"] = Json{{"pullback", class_json(x, outcome.decomposition->pullback)},
                                    {"exceptional", coefficient_json(x, outcome.decomposition->exceptional)}};
    }
    Json final_info;
    Json contracted = Json::array();
    for (const auto& curve : outcome.final_surface.curves) {
        if (outcome.final_surface.is_contracted(curve.name)) {
            contracted.push_back(curve.name);
        }
    }
    final_info["contracted"] = std::move(contracted);
    final_info["picard_number"] = picard_number(outcome.final_surface);
    if (outcome.kind == MMPOutcome::Kind::MinimalModel) {
        final_info["kappa_via_abundance"] = kappa_via_abundance(outcome.final_surface);
    }
    doc["final"] = std::move(final_info);

    Json checks;
    const int limit = picard_number(x) - 1;
    checks["step_bound"] = Json{{"pass", static_cast<int>(outcome.trace.size()) <= limit},
                                {"trace_length", outcome.trace.size()},
                                {"limit", limit}};
    Json bound_items = Json::array();
    bool bounds_pass = true;
    for (const auto& item : check_extremal_bound(outcome)) {
        bounds_pass = bounds_pass && item.pass;
        bound_items.push_back(Json{{"label", item.label}, {"degree", item.degree}, {"pass", item.pass}});
    }
    checks["extremal_bounds"] = Json{{"pass", bounds_pass}, {"items", std::move(bound_items)}};
    if (outcome.kind == MMPOutcome::Kind::MinimalModel) {
        checks["uniqueness"] = Json{{"applicable", true}, {"pass", uniqueness_check(x)}};
    } else {
        checks["uniqueness"] = Json{{"applicable", false}};
    }
    bool rationality_applicable = true;
    for (const auto& component : contracted_components(x)) {
        rationality_applicable = rationality_applicable && is_rational_singularity(x, component);
    }
    if (rationality_applicable) {
        checks["rationality"] = Json{{"applicable", true}, {"pass", rationality_preserved(x, outcome.trace)}};
    } else {
        checks["rationality"] = Json{{"applicable", false}};
    }
    std::string cross_check;
    try {
        const ZariskiDecomposition z = zariski_decompose(x, adjoint_class(x));
        if (outcome.kind != MMPOutcome::Kind::MinimalModel) {
            cross_check = "dichotomy-violation";
        } else if (z.positive == outcome.decomposition->pullback &&
                   z.negative == outcome.decomposition->exceptional) {
            cross_check = "match";
        } else {
            cross_check = "mismatch";
        }
    } catch (const NotPseudoEffective&) {
        cross_check = outcome.kind == MMPOutcome::Kind::MinimalModel ? "dichotomy-violation"
                                                                     : "consistent-not-pseudo-effective";
    }
    checks["zariski_cross_check"] = cross_check;
    doc["checks"] = std::move(checks);
    doc["warnings"] = warnings_json(x);

    std::ostringstream text;
    text << "outcome: " << to_string(outcome.kind) << "\n";
    text << "trace (" << outcome.trace.size() << " steps):\n";
    for (const auto& step : outcome.trace) {
        text << "  contract " << step.contracted_curve << "  degree " << format_rational(step.degree)
             << "  rho " << step.rho_before << " -> " << step.rho_after << "\n";
    }
    if (outcome.fiber_class) {
        text << "fiber class: " << format_class_expr(x, *outcome.fiber_class) << "\n";
    }
    if (outcome.decomposition) {
        text << "pullback part: " << format_class_expr(x, outcome.decomposition->pullback) << "\n";
        text << "exceptional part:";
        for (const auto& curve : x.curves) {
            if (auto it = outcome.decomposition->exceptional.find(curve.name);
                it != outcome.decomposition->exceptional.end()) {
                text << " " << format_rational(it->second) << "*" << curve.name;
            }
        }
        text << "\n";
    }
    text << "zariski cross-check: " << cross_check << "\n";
    return finish(doc, human, text.str());
}

std::string report_zariski(const LogSurface& x, const DivClass& d, bool human) {
    const ZariskiDecomposition z = zariski_decompose(x, d);
    Json doc;
    doc["command"] = "zariski";
    doc["input"] = class_json(x, d);
    doc["P"] = class_json(x, z.positive);
    doc["N"] = coefficient_json(x, z.negative);
    doc["support"] = z.support;
    Json gram = Json::array();
    for (const auto& row : z.support_gram) {
        Json r = Json::array();
        for (const auto& entry : row) {
            r.push_back(format_rational(entry));
        }
        gram.push_back(std::move(r));
    }
    Json minors = Json::array();
    for (const auto& m : z.support_minors) {
        minors.push_back(format_rational(m));
    }
    doc["certificate"] = Json{{"gram", std::move(gram)}, {"leading_minors", std::move(minors)}};

    std::ostringstream text;
    text << "P = " << format_class_expr(x, z.positive) << "\n";
    text << "N =";
    if (z.negative.empty()) {
        text << " 0";
    }
    for (const auto& curve : x.curves) {
        if (auto it = z.negative.find(curve.name); it != z.negative.end()) {
            text << " " << format_rational(it->second) << "*" << curve.name;
        }
    }
    text << "\n";
    return finish(doc, human, text.str());
}

std::string report_lct(const LogSurface& x, const std::map<std::string, Rational>& theta, bool human) {
    const LctResult result = lct(x, theta);
    Json doc;
    doc["command"] = "lct";
    Json theta_json = Json::object();
    for (const auto& curve : x.curves) {
        if (auto it = theta.find(curve.name); it != theta.end()) {
            theta_json[curve.name] = format_rational(it->second);
        }
    }
    doc["theta"] = std::move(theta_json);
    doc["lct"] = result.value ? format_rational(*result.value) : std::string("infinity");
    doc["binding"] = result.binding;

    std::ostringstream text;
    text << "lct = " << (result.value ? format_rational(*result.value) : std::string("infinity")) << "\n";
    return finish(doc, human, text.str());
}

std::string report_pullback(const LogSurface& x, const DivClass& d, bool human) {
    const DivClass pulled = mumford_pullback(x, d);
    Json doc;
    doc["command"] = "pullback";
    doc["input"] = class_json(x, d);
    doc["result"] = class_json(x, pulled);

    std::ostringstream text;
    text << format_class_expr(x, pulled) << "\n";
    return finish(doc, human, text.str());
}

std::string report_validate(const LogSurface& x, bool human) {
    const std::vector<Violation> violations = validate(x);
    Json doc;
    doc["command"] = "validate";
    doc["valid"] = violations.empty();
    Json items = Json::array();
    for (const auto& v : violations) {
        items.push_back(Json{{"code", v.code}, {"detail", v.detail}});
    }
    doc["violations"] = std::move(items);
    doc["warnings"] = warnings_json(x);

    std::ostringstream text;
    if (violations.empty()) {
        text << "valid\n";
    } else {
        for (const auto& v : violations) {
            text << v.code << ": " << v.detail << "\n";
        }
    }
    return finish(doc, human, text.str());
}

}  // namespace logsurf
