#pragma once

#include <map>
#include <string>
#include <vector>

#include "logsurf/logpair.hpp"
#include "logsurf/surface.hpp"

namespace logsurf {

struct ZariskiDecomposition {
    /// Semi-positive part, as a class on the smooth model orthogonal to
    /// every contracted curve and to every component of the negative part.
    DivClass positive;
    /// Negative part coefficients, keyed by curve name; all >= 0.
    std::map<std::string, Rational> negative;
    /// Support of the negative part in curve-list order, with its Gram
    /// matrix (under the X-pairing) and the leading principal minors that
    /// certify negative definiteness.
    std::vector<std::string> support;
    QMatrix support_gram;
    std::vector<Rational> support_minors;
};

/// Zariski decomposition of d relative to the listed curves: grows the
/// support by all violated curves per round, re-solves the orthogonality
/// system on the support, and stops at the fixpoint (Fujita's iteration).
/// Throws NotPseudoEffective when the working support loses negative
/// definiteness or a solved coefficient turns negative; both certify that
/// d is not pseudo-effective relative to the supplied list.
ZariskiDecomposition zariski_decompose(const LogSurface& x, const DivClass& d);

}  // namespace logsurf
