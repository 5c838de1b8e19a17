#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logsurf/surface.hpp"

namespace logsurf {

/// Coefficients of the log pullback on the smooth model: for a pair (X, Δ)
/// contracted from Y, delta_y carries the total coefficient of every listed
/// curve (boundary coefficients on surviving curves, solved coefficients on
/// contracted ones) and discrepancies the negatives of the latter.
struct LogPullback {
    std::map<std::string, Rational> delta_y;
    std::map<std::string, Rational> discrepancies;  // contracted curves only
};

/// Solves (K_Y + Δ_Y) · E = 0 for every contracted curve E. The boundary
/// map contributes the coefficients of non-contracted curves; the
/// contracted coefficients are determined by orthogonality.
LogPullback log_pullback(const LogSurface& x);

/// The adjoint class K + Σ d_i C_i on the smooth model (no orthogonality
/// correction).
DivClass adjoint_class(const LogSurface& x);

/// The pullback of K_X + Δ as a class on the smooth model: the adjoint
/// class corrected to be orthogonal to every contracted curve.
DivClass adjoint_pullback_class(const LogSurface& x);

/// D + Σ a_j E_j orthogonal to every contracted E_j; identity when the
/// contracted set is empty. This is the class of the pullback of a divisor
/// on X under Y -> X.
DivClass mumford_pullback(const LogSurface& x, const DivClass& d);

/// Intersection number on X: (pullback of a) . (pullback of b).
Rational pair_x(const LogSurface& x, const DivClass& a, const DivClass& b);

enum class PairKind { KLT, LC, NonLC };

std::string to_string(PairKind kind);

struct PairClass {
    PairKind kind = PairKind::KLT;
    std::vector<std::string> nklt_locus;  // curves with coefficient >= 1, curve-list order
    std::vector<std::string> nlc_locus;   // curves with coefficient > 1
    bool certified = false;               // true iff assumptions.snc_resolution held
};

/// klt / lc / non-lc classification from the log pullback coefficients.
/// Certified only when the surface asserts an snc resolution; otherwise the
/// result carries certified = false instead of failing.
PairClass classify(const LogSurface& x);

struct LctResult {
    /// Largest t >= 0 with (X, Δ + tΘ) log canonical outside the fixed
    /// non-lc locus of (X, Δ); nullopt means unbounded.
    std::optional<Rational> value;
    /// Curves whose coefficient reaches 1 exactly at the threshold.
    std::vector<std::string> binding;
};

/// Log canonical threshold of an effective Θ (given by coefficients on
/// non-contracted curves) against the pair (X, Δ). The pullback
/// coefficients are affine in t, so the threshold is an exact rational or
/// unbounded. Curves already beyond coefficient 1 at t = 0 are excluded
/// from the constraint set.
LctResult lct(const LogSurface& x, const std::map<std::string, Rational>& theta);

/// Numerical dimension of a class D that is nef against the listed curves:
/// 2 when D.D > 0 on X, 0 when D is numerically trivial on X, else 1.
/// Throws NotNefOnList when some listed curve pairs negatively.
int numerical_dimension(const LogSurface& x, const DivClass& d);

/// Connected components (via nonzero pairwise intersection) of the
/// contracted set, in curve-list order.
std::vector<std::vector<std::string>> contracted_components(const LogSurface& x);

/// Smallest effective integral cycle Z > 0 on a connected contracted
/// component with Z . E_i <= 0 for every member, by Laufer's increment
/// algorithm. Returned as a class on the smooth model.
DivClass fundamental_cycle(const LogSurface& x, const std::vector<std::string>& component);

/// Artin's criterion: the contracted component is a rational singularity
/// iff the fundamental cycle has arithmetic genus zero.
bool is_rational_singularity(const LogSurface& x, const std::vector<std::string>& component);

/// Numerical dimension of the nef adjoint class, reported as the Iitaka
/// dimension via the abundance theorem; correct under curve-list
/// completeness.
int kappa_via_abundance(const LogSurface& x);

}  // namespace logsurf
