"""Exact intersection theory and the adjoint contraction program for
combinatorial log surfaces.

The heavy lifting happens in the C++ extension ``logsurf._core``; this
package adds dictionary-returning conveniences on top of the JSON report
functions. All rational numbers cross the boundary as reduced strings
("p/q" or "p"); use :func:`fractions.Fraction` on them when you need
arithmetic on the Python side.
"""

import json

from ._core import (  # noqa: F401
    AmbiguousConfigurationError,
    LogSurface,
    LogsurfError,
    NotNegativeDefiniteError,
    NotPseudoEffectiveError,
    ParseError,
    __version__,
    canonical_model,
    classify_json,
    discrepancies,
    fundamental_cycle,
    hirzebruch,
    intersect,
    is_rational_singularity,
    kappa_via_abundance,
    lct_json,
    mmp_json,
    mumford_pullback,
    nef_threshold,
    numerical_dimension,
    pair_x,
    parse_surface,
    projective_plane,
    validate_json,
    zariski_json,
)


def classify(surface):
    """klt / lc / non-lc classification with loci and discrepancies."""
    return json.loads(classify_json(surface))


def mmp(surface, tiebreak="list"):
    """Full contraction program run with trace, decomposition and checks."""
    return json.loads(mmp_json(surface, tiebreak))


def zariski(surface, expr):
    """Zariski decomposition of the class given by an expression."""
    return json.loads(zariski_json(surface, expr))


def lct(surface, theta):
    """Log canonical threshold against ``theta`` (dict name -> "p/q")."""
    return json.loads(lct_json(surface, theta))


def validate(surface):
    """Invariant audit; returns the full report dictionary."""
    return json.loads(validate_json(surface))
