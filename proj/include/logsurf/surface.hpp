#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logsurf/lattice.hpp"

namespace logsurf {

/// A named irreducible curve on the smooth model, tracked by its numerical
/// class and arithmetic genus.
struct Curve {
    std::string name;
    DivClass cls;
    long long pa = 0;
    bool is_exceptional_history = false;
};

struct Assumptions {
    /// The curve configuration on the smooth model is a log resolution:
    /// smooth curves, pairwise transverse, no triple points. Singularity
    /// classification is only certified under this flag.
    bool snc_resolution = false;
    /// The curve list contains every curve relevant to nefness questions.
    /// All "nef", "pseudo-effective" and MMP statements are relative to the
    /// list; this flag records that the caller intends them absolutely.
    bool curve_list_complete = false;
};

struct Violation {
    std::string code;
    std::string detail;
};

/// Combinatorial model of a normal projective Q-factorial surface X with a
/// boundary divisor: a smooth model Y (the lattice) carrying a named curve
/// configuration, boundary coefficients, and the set of curves contracted
/// by Y -> X. Contraction never rebuilds geometry; it only grows the
/// contracted set, so every derived surface lives on the same Y.
struct LogSurface {
    NSLattice lattice;
    std::vector<std::string> basis;  // names of the lattice basis classes
    std::vector<Curve> curves;
    std::map<std::string, Rational> boundary;  // curve name -> coefficient in [0, 1]
    std::set<std::string> contracted;
    // Curves allowed to sit in `contracted` while carrying a positive
    // boundary coefficient (recorded when the MMP or the canonical model
    // contracts a boundary component, or set explicitly by the caller).
    std::set<std::string> boundary_contraction_ok;
    Assumptions assumptions;
    // Set when the surface was built by presets and blow-ups rather than
    // authored as a raw lattice; raw lattices are accepted but the caller
    // asserts geometric realizability.
    bool from_construction = false;

    const Curve* find_curve(const std::string& name) const;
    std::size_t curve_index(const std::string& name) const;  // throws PreconditionError
    bool is_contracted(const std::string& name) const { return contracted.count(name) > 0; }
    Rational boundary_coefficient(const std::string& name) const;
    std::vector<const Curve*> contracted_curves() const;      // curve-list order
    std::vector<const Curve*> non_contracted_curves() const;  // curve-list order
};

/// P^2 with its lattice generated by the hyperplane class H and the line
/// listed as a curve.
LogSurface projective_plane();

/// The Hirzebruch surface F_e: basis (s, f) with s^2 = -e, f^2 = 0,
/// s.f = 1; the negative section and a fiber are listed as curves.
LogSurface hirzebruch(long long e);

/// Adds a named curve (class given in the current basis). The arithmetic
/// genus must match adjunction and be nonnegative.
LogSurface add_curve(const LogSurface& x, const std::string& name, const DivClass& cls, long long pa);

/// Replaces the boundary map after checking 0 <= d <= 1 and name validity.
LogSurface with_boundary(const LogSurface& x, const std::map<std::string, Rational>& boundary);

LogSurface with_assumptions(const LogSurface& x, const Assumptions& assumptions);

/// Blows up a point whose position is encoded by the multiplicities of the
/// existing curves through it. Adds one exceptional basis vector and one
/// exceptional curve; updates classes, genera and the canonical class.
/// Infinitely near points are reached by giving positive multiplicity to a
/// strict transform of an earlier exceptional curve.
LogSurface blow_up(const LogSurface& x, const std::map<std::string, long long>& multiplicities,
                   const std::string& exceptional_name = "");

/// Contracts a (-1)-curve of the smooth model: the named curve must have
/// self-intersection -1, K-degree -1, genus 0, no boundary, and must be
/// disjoint from the contracted set. Classes are projected to the
/// orthogonal complement and rewritten in a rational basis of it; genera
/// are recomputed from adjunction.
LogSurface blow_down(const LogSurface& x, const std::string& name);

/// Enlarges the contracted set; the union must be negative definite.
/// Contracting a curve with positive boundary coefficient requires
/// allow_boundary (the override is recorded on the result).
LogSurface contract(const LogSurface& x, const std::set<std::string>& names, bool allow_boundary = false);

int picard_number(const LogSurface& x);

/// Audits every invariant and returns all violations; empty means valid.
std::vector<Violation> validate(const LogSurface& x);

}  // namespace logsurf
