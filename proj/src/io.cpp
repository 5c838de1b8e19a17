#include "logsurf/io.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& value, const char* where) {
    if (value.is_string()) {
        return parse_rational(value.get<std::string>());
    }
    if (value.is_number_integer()) {
        return Rational(value.get<long long>());
    }
    throw ParseError(std::string(where) + ": rationals must be strings like \"p/q\" or integers");
}

DivClass class_from_json(const Json& value, const char* where) {
    if (!value.is_array()) {
        throw ParseError(std::string(where) + ": expected an array of rationals");
    }
    DivClass out;
    for (const auto& entry : value) {
        out.coeffs.push_back(rational_from_json(entry, where));
    }
    return out;
}

LogSurface surface_from_construction(const Json& construction) {
    if (!construction.is_object() || !construction.contains("preset")) {
        throw ParseError("construction: expected an object with a 'preset' field");
    }
    const std::string preset = construction.at("preset").get<std::string>();
    LogSurface x;
    if (preset == "projective_plane") {
        x = projective_plane();
    } else if (preset == "hirzebruch") {
        if (!construction.contains("e")) {
            throw ParseError("construction: hirzebruch preset needs an 'e' field");
        }
        x = hirzebruch(construction.at("e").get<long long>());
    } else {
        throw ParseError("construction: unknown preset '" + preset + "'");
    }
    if (construction.contains("curves")) {
        for (const auto& entry : construction.at("curves")) {
            x = add_curve(x, entry.at("name").get<std::string>(),
                          class_from_json(entry.at("class"), "construction curve"),
                          entry.at("pa").get<long long>());
        }
    }
    if (construction.contains("blow_ups")) {
        for (const auto& entry : construction.at("blow_ups")) {
            std::map<std::string, long long> mults;
            if (entry.contains("mults")) {
                for (const auto& [name, m] : entry.at("mults").items()) {
                    mults[name] = m.get<long long>();
                }
            }
            const std::string name = entry.contains("name") ? entry.at("name").get<std::string>() : "";
            x = blow_up(x, mults, name);
        }
    }
    return x;
}

}  // namespace

LogSurface parse_surface(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("surface document must be a JSON object");
    }

    LogSurface x;
    try {
        if (doc.contains("construction")) {
            for (const char* field : {"basis", "gram", "canonical", "curves"}) {
                if (doc.contains(field)) {
                    throw ParseError(std::string("'") + field + "' may not be combined with 'construction'");
                }
            }
            try {
                x = surface_from_construction(doc.at("construction"));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                // A construction script that cannot execute is a malformed
                // document, not an invalid surface.
                throw ParseError(std::string("construction failed: ") + e.what());
            }
        } else {
            if (!doc.contains("basis") || !doc.contains("gram") || !doc.contains("canonical")) {
                throw ParseError("raw surface documents need 'basis', 'gram' and 'canonical'");
            }
            x.basis = doc.at("basis").get<std::vector<std::string>>();
            x.lattice.rank = x.basis.size();
            for (const auto& row : doc.at("gram")) {
                QVector r;
                for (const auto& entry : row) {
                    r.push_back(rational_from_json(entry, "gram"));
                }
                x.lattice.gram.push_back(std::move(r));
            }
            x.lattice.canonical = class_from_json(doc.at("canonical"), "canonical");
            if (doc.contains("curves")) {
                for (const auto& entry : doc.at("curves")) {
                    Curve curve;
                    curve.name = entry.at("name").get<std::string>();
                    curve.cls = class_from_json(entry.at("class"), "curve class");
                    curve.pa = entry.at("pa").get<long long>();
                    if (entry.contains("exceptional")) {
                        curve.is_exceptional_history = entry.at("exceptional").get<bool>();
                    }
                    x.curves.push_back(std::move(curve));
                }
            }
            x.from_construction = false;
        }

        if (doc.contains("boundary")) {
            for (const auto& [name, value] : doc.at("boundary").items()) {
                x.boundary[name] = rational_from_json(value, "boundary");
            }
        }
        if (doc.contains("contracted")) {
            for (const auto& entry : doc.at("contracted")) {
                x.contracted.insert(entry.get<std::string>());
            }
        }
        if (doc.contains("contracted_boundary_ok")) {
            for (const auto& entry : doc.at("contracted_boundary_ok")) {
                x.boundary_contraction_ok.insert(entry.get<std::string>());
            }
        }
        if (doc.contains("assumptions")) {
            const auto& a = doc.at("assumptions");
            if (a.contains("snc")) {
                x.assumptions.snc_resolution = a.at("snc").get<bool>();
            }
            if (a.contains("complete")) {
                x.assumptions.curve_list_complete = a.at("complete").get<bool>();
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid surface document: ") + e.what());
    }
    return x;
}

std::string emit_surface(const LogSurface& x) {
    Json doc;
    doc["basis"] = x.basis;
    Json gram = Json::array();
    for (const auto& row : x.lattice.gram) {
        Json r = Json::array();
        for (const auto& entry : row) {
            r.push_back(format_rational(entry));
        }
        gram.push_back(std::move(r));
    }
    doc["gram"] = std::move(gram);
    Json canonical = Json::array();
    for (const auto& entry : x.lattice.canonical.coeffs) {
        canonical.push_back(format_rational(entry));
    }
    doc["canonical"] = std::move(canonical);
    Json curves = Json::array();
    for (const auto& curve : x.curves) {
        Json entry;
        entry["name"] = curve.name;
        Json cls = Json::array();
        for (const auto& c : curve.cls.coeffs) {
            cls.push_back(format_rational(c));
        }
        entry["class"] = std::move(cls);
        entry["pa"] = curve.pa;
        entry["exceptional"] = curve.is_exceptional_history;
        curves.push_back(std::move(entry));
    }
    doc["curves"] = std::move(curves);
    Json boundary = Json::object();
    for (const auto& curve : x.curves) {
        if (auto it = x.boundary.find(curve.name); it != x.boundary.end()) {
            boundary[curve.name] = format_rational(it->second);
        }
    }
    // Boundary entries that name no curve survive so that validate can see them.
    for (const auto& [name, value] : x.boundary) {
        if (x.find_curve(name) == nullptr) {
            boundary[name] = format_rational(value);
        }
    }
    doc["boundary"] = std::move(boundary);
    Json contracted = Json::array();
    for (const auto& curve : x.curves) {
        if (x.contracted.count(curve.name) > 0) {
            contracted.push_back(curve.name);
        }
    }
    for (const auto& name : x.contracted) {
        if (x.find_curve(name) == nullptr) {
            contracted.push_back(name);
        }
    }
    doc["contracted"] = std::move(contracted);
    if (!x.boundary_contraction_ok.empty()) {
        Json overrides = Json::array();
        for (const auto& curve : x.curves) {
            if (x.boundary_contraction_ok.count(curve.name) > 0) {
                overrides.push_back(curve.name);
            }
        }
        doc["contracted_boundary_ok"] = std::move(overrides);
    }
    doc["assumptions"] = {{"snc", x.assumptions.snc_resolution},
                          {"complete", x.assumptions.curve_list_complete}};
    return doc.dump(2) + "\n";
}

DivClass parse_class_expr(const LogSurface& x, const std::string& text) {
    DivClass out = DivClass::zero(x.lattice.rank);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    skip_ws();
    if (pos >= text.size()) {
        throw ParseError("empty class expression");
    }
    if (text.compare(pos, std::string::npos, "0") == 0) {
        return out;
    }
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) {
            break;
        }
        Rational sign(1);
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') {
                sign = -1;
            }
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in class expression near position " + std::to_string(pos));
        }
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
            ++pos;
        }
        Rational coefficient(1);
        if (pos > start) {
            coefficient = parse_rational(text.substr(start, pos - start));
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }
        start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        if (pos == start) {
            throw ParseError("expected a basis name in class expression near position " + std::to_string(pos));
        }
        const std::string name = text.substr(start, pos - start);
        const auto it = std::find(x.basis.begin(), x.basis.end(), name);
        if (it == x.basis.end()) {
            throw ParseError("unknown basis class '" + name + "' in expression");
        }
        out[static_cast<std::size_t>(it - x.basis.begin())] += sign * coefficient;
        first = false;
        skip_ws();
    }
    return out;
}

std::string format_class_expr(const LogSurface& x, const DivClass& cls) {
    if (cls.size() != x.basis.size()) {
        throw DimensionMismatch("format_class_expr: class length does not match basis");
    }
    std::string out;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const Rational& c = cls[i];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        if (magnitude != 1) {
            out += format_rational(magnitude) + " ";
        }
        out += x.basis[i];
    }
    return out.empty() ? "0" : out;
}

std::map<std::string, Rational> parse_coefficient_list(const std::string& text) {
    std::map<std::string, Rational> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ParseError("expected name=value in coefficient list, got '" + item + "'");
        }
        out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
        pos = comma + 1;
    }
    return out;
}

}  // namespace logsurf
