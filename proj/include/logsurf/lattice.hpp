#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "logsurf/linalg.hpp"
#include "logsurf/rational.hpp"

namespace logsurf {

/// A divisor class written in the coordinates of a fixed lattice basis.
struct DivClass {
    std::vector<Rational> coeffs;

    DivClass() = default;
    explicit DivClass(std::vector<Rational> c) : coeffs(std::move(c)) {}

    static DivClass zero(std::size_t rank) { return DivClass(std::vector<Rational>(rank, Rational(0))); }

    static DivClass unit(std::size_t rank, std::size_t index) {
        DivClass d = zero(rank);
        d.coeffs[index] = 1;
        return d;
    }

    std::size_t size() const { return coeffs.size(); }
    Rational& operator[](std::size_t i) { return coeffs[i]; }
    const Rational& operator[](std::size_t i) const { return coeffs[i]; }

    bool is_zero() const {
        for (const auto& c : coeffs) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const DivClass& a, const DivClass& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const DivClass& a, const DivClass& b) { return !(a == b); }
};

DivClass operator+(const DivClass& a, const DivClass& b);
DivClass operator-(const DivClass& a, const DivClass& b);
DivClass operator-(const DivClass& a);
DivClass operator*(const Rational& scalar, const DivClass& a);

/// Numerical class lattice of a smooth model: a rank-n rational lattice with
/// a symmetric intersection form and a distinguished canonical class.
struct NSLattice {
    std::size_t rank = 0;
    QMatrix gram;        // rank x rank, symmetric
    DivClass canonical;  // the class K

    bool gram_is_symmetric() const;
};

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
    }
};

/// aᵀ · gram · b. Symmetric and bilinear. Throws DimensionMismatch when a
/// class has the wrong length.
Rational intersect(const NSLattice& lattice, const DivClass& a, const DivClass& b);

/// Exact eigen-signature of the intersection form (inertia of the quadratic
/// form, computed by rational congruence reduction).
Signature signature(const NSLattice& lattice);

/// Gram matrix of the given classes under the lattice pairing.
QMatrix gram_of(const NSLattice& lattice, const std::vector<DivClass>& classes);

/// True iff the Gram matrix of the given classes is negative definite
/// (leading principal minors alternate in sign starting negative). The
/// empty collection counts as negative definite.
bool is_negative_definite(const NSLattice& lattice, const std::vector<DivClass>& classes);

/// Coefficients (a_j) with (d + Σ a_j e_j) · e_k = 0 for every k. Requires
/// the e_j to span a negative definite sublattice, which makes the solution
/// exist uniquely; throws NotNegativeDefinite otherwise. An empty list
/// yields an empty solution (identity pullback convention).
std::vector<Rational> solve_orthogonal(const NSLattice& lattice, const DivClass& d,
                                       const std::vector<DivClass>& exceptional);

}  // namespace logsurf
