#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logsurf/logpair.hpp"
#include "logsurf/surface.hpp"
#include "logsurf/zariski.hpp"

namespace logsurf {

/// Deterministic order used to break ties between extremal candidates of
/// equal degree (and to vary runs for uniqueness experiments).
enum class TieBreak { ListOrder, Reversed, Rotated };

std::string to_string(TieBreak tb);
std::optional<TieBreak> tiebreak_from_string(const std::string& text);

struct Extremal {
    enum class Kind { Birational, FiberType, FanoPoint };
    Kind kind = Kind::Birational;
    std::string curve;                  // empty for FanoPoint
    Rational degree;                    // -(K+Δ).C of the certifying curve
    std::optional<DivClass> fiber_class;  // FiberType: the X-class of the fiber
};

/// Searches the listed non-contracted curves for a certified extremal ray
/// of negative adjoint degree. Candidates are scanned by most negative
/// degree first, then tie-break order. A curve certifies a birational ray
/// when its X-self-intersection is negative, and a fiber-type ray when it
/// squares to zero, is nef against the list, and the Picard number is two;
/// at Picard number one any negative curve certifies a Fano point. Returns
/// nullopt when no curve has negative degree. Throws
/// AmbiguousConfiguration when negative curves exist but none certifies a
/// ray (for instance a negative curve of positive self-intersection at
/// Picard number above one).
std::optional<Extremal> find_extremal(const LogSurface& x, TieBreak tb = TieBreak::ListOrder);

struct MMPStep {
    std::string contracted_curve;
    Rational degree;  // -(K+Δ).C at the time of contraction, > 0
    int rho_before = 0;
    int rho_after = 0;
};

struct MMPOutcome {
    enum class Kind { MinimalModel, MoriFiberSpaceOverCurve, MoriFiberSpaceOverPoint };

    struct Decomposition {
        /// Pullback of the adjoint class of the minimal model, as a class on
        /// the smooth model.
        DivClass pullback;
        /// Effective exceptional part, keyed by the curves this run
        /// contracted; K + Δ = pullback + Σ e_c C_c holds exactly on X.
        std::map<std::string, Rational> exceptional;
    };

    Kind kind = Kind::MinimalModel;
    LogSurface final_surface;
    std::vector<MMPStep> trace;
    std::optional<DivClass> fiber_class;        // over-curve outcomes
    std::optional<Decomposition> decomposition;  // minimal models
};

std::string to_string(MMPOutcome::Kind kind);

/// Runs the adjoint-negative contraction loop to one of the two endpoints:
/// a minimal model (adjoint class nef against the list, with its pullback
/// decomposition) or a Mori fiber space. Each birational step contracts
/// one certified extremal curve and drops the Picard number by one, so the
/// trace length is bounded by rho - 1.
MMPOutcome mmp_run(const LogSurface& x, TieBreak tb = TieBreak::ListOrder);

struct BoundCheckItem {
    std::string label;
    std::string degree;
    bool pass = false;
};

/// Degree bounds satisfied by extremal contractions: every birational step
/// has degree at most 2; a fiber has adjoint degree at least -2; a Fano
/// endpoint carries a listed curve of degree at most 3 (at most 2 unless
/// the endpoint is a plane, detected by K^2 = 9).
std::vector<BoundCheckItem> check_extremal_bound(const MMPOutcome& outcome);

/// Reruns the program under the list, reversed, and rotated tie-break
/// orders; true iff every run reaches the same contracted set with the
/// identical decomposition. Meaningful when K + Δ is pseudo-effective
/// relative to the list (all runs then end in minimal models).
bool uniqueness_check(const LogSurface& x);

/// Contracts every listed curve with adjoint degree zero; requires the
/// adjoint class to be nef against the list with positive
/// self-intersection on X (throws NotNefAndBig otherwise). When every
/// contracted component of the input was an Artin-rational singularity,
/// the components of the result are checked to be rational as well.
LogSurface canonical_model(const LogSurface& x);

/// Largest t in [0, 1] such that K + (1-t)·delta_from + t·delta_to stays
/// nef against every listed curve. Exact one-dimensional linear program;
/// the answer is always rational. Throws StartNotNef when K + delta_from
/// is not nef against the list.
Rational nef_threshold(const LogSurface& x, const std::map<std::string, Rational>& delta_from,
                       const std::map<std::string, Rational>& delta_to);

}  // namespace logsurf
