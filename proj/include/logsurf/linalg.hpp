#pragma once

#include <optional>
#include <vector>

#include "logsurf/rational.hpp"

namespace logsurf {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

/// Solves A x = b by exact Gaussian elimination with column pivoting.
/// Returns nullopt when the system has no solution; when the solution
/// space is positive-dimensional the free variables are set to zero.
std::optional<QVector> solve_linear(QMatrix a, QVector b);

/// Exact determinant by fraction elimination.
Rational determinant(QMatrix a);

/// Diagonal pivots of the LDL^T factorization of a symmetric matrix,
/// computed without row exchanges. Returns nullopt when a zero pivot is
/// hit before the factorization completes (the matrix is then not
/// definite of either sign).
std::optional<QVector> symmetric_pivots(QMatrix a);

struct InertiaCounts {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Signature of a symmetric rational matrix by exact congruence
/// diagonalization (Lagrange reduction with the standard fix-up for zero
/// diagonals).
InertiaCounts symmetric_inertia(QMatrix a);

}  // namespace logsurf
