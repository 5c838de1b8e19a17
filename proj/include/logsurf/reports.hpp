#pragma once

#include <map>
#include <string>

#include "logsurf/mmp.hpp"
#include "logsurf/surface.hpp"

namespace logsurf {

// Machine-readable reports shared by the command line tool and the Python
// bindings. Every report is deterministic: collections follow curve-list
// order and every rational is emitted reduced. The functions return the
// JSON document as a string (pretty-printed, trailing newline) or, with
// human = true, a plain-text rendering.

std::string report_classify(const LogSurface& x, bool human = false);
std::string report_mmp(const LogSurface& x, TieBreak tb, bool human = false);
std::string report_zariski(const LogSurface& x, const DivClass& d, bool human = false);
std::string report_lct(const LogSurface& x, const std::map<std::string, Rational>& theta, bool human = false);
std::string report_pullback(const LogSurface& x, const DivClass& d, bool human = false);
std::string report_validate(const LogSurface& x, bool human = false);

/// True when every step of the given trace, replayed from x, keeps every
/// contracted component an Artin-rational singularity.
bool rationality_preserved(const LogSurface& x, const std::vector<MMPStep>& trace);

}  // namespace logsurf
