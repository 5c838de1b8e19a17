#include "logsurf/linalg.hpp"

#include <cstddef>

namespace logsurf {

std::optional<QVector> solve_linear(QMatrix a, QVector b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col_of_row(rows, cols);

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        const Rational inv = Rational(1) / a[row][col];
        for (std::size_t j = col; j < cols; ++j) {
            a[row][j] *= inv;
        }
        b[row] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) {
                continue;
            }
            const Rational factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                a[i][j] -= factor * a[row][j];
            }
            b[i] -= factor * b[row];
        }
        pivot_col_of_row[row] = col;
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i) {
        if (b[i] != 0) {
            return std::nullopt;
        }
    }
    QVector x(cols, Rational(0));
    for (std::size_t i = 0; i < row; ++i) {
        x[pivot_col_of_row[i]] = b[i];
    }
    return x;
}

Rational determinant(QMatrix a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return Rational(0);
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational inv = Rational(1) / a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) {
                continue;
            }
            const Rational factor = a[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) {
                a[i][j] -= factor * a[col][j];
            }
        }
    }
    return det;
}

std::optional<QVector> symmetric_pivots(QMatrix a) {
    const std::size_t n = a.size();
    QVector pivots;
    pivots.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            return std::nullopt;
        }
        pivots.push_back(a[k][k]);
        const Rational inv = Rational(1) / a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational factor = a[i][k] * inv;
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] -= factor * a[k][j];
            }
        }
    }
    return pivots;
}

InertiaCounts symmetric_inertia(QMatrix a) {
    const std::size_t n = a.size();
    InertiaCounts counts;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // Prefer swapping in a nonzero diagonal entry.
            std::size_t swap_with = n;
            for (std::size_t l = k + 1; l < n; ++l) {
                if (a[l][l] != 0) {
                    swap_with = l;
                    break;
                }
            }
            if (swap_with < n) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a[k][j], a[swap_with][j]);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    std::swap(a[i][k], a[i][swap_with]);
                }
            } else {
                // All remaining diagonals vanish; fold a nonzero
                // off-diagonal partner into the pivot position.
                std::size_t partner = n;
                for (std::size_t l = k + 1; l < n; ++l) {
                    if (a[k][l] != 0) {
                        partner = l;
                        break;
                    }
                }
                if (partner == n) {
                    ++counts.zero;
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    a[k][j] += a[partner][j];
                }
                for (std::size_t i = 0; i < n; ++i) {
                    a[i][k] += a[i][partner];
                }
            }
        }
        const Rational pivot = a[k][k];
        if (pivot > 0) {
            ++counts.positive;
        } else {
            ++counts.negative;
        }
        const Rational inv = Rational(1) / pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) {
                continue;
            }
            const Rational factor = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) {
                a[i][j] -= factor * a[k][j];
            }
            for (std::size_t j = 0; j < n; ++j) {
                a[j][i] -= factor * a[j][k];
            }
        }
    }
    return counts;
}

}  // namespace logsurf
