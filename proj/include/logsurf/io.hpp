#pragma once

#include <map>
#include <string>

#include "logsurf/surface.hpp"

namespace logsurf {

/// Reads a surface description document (JSON). Two authoring modes are
/// accepted: a raw lattice (basis/gram/canonical/curves) or a construction
/// script (preset plus blow-up steps), the recommended mode. Structural
/// problems (bad JSON, wrong types, unknown names in a construction) throw
/// ParseError; semantic problems (non-symmetric gram, out-of-range
/// boundary, ...) parse fine and are left for validate().
LogSurface parse_surface(const std::string& text);

/// Canonical serialized form: expanded lattice data with every rational
/// reduced and all collections in curve-list order. parse ∘ emit is the
/// identity on canonical documents.
std::string emit_surface(const LogSurface& x);

/// Parses a linear combination of basis classes, e.g. "H + 2 E1",
/// "3H-2E1-E2-E3", "1/2 s + f", or "0".
DivClass parse_class_expr(const LogSurface& x, const std::string& text);

/// Renders a class as a combination of basis names, in basis order.
std::string format_class_expr(const LogSurface& x, const DivClass& cls);

/// Parses "name=p/q,name=p/q" lists (CLI theta and boundary arguments).
std::map<std::string, Rational> parse_coefficient_list(const std::string& text);

}  // namespace logsurf
