#include "logsurf/lattice.hpp"

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

void check_rank(const NSLattice& lattice, const DivClass& a, const char* what) {
    if (a.size() != lattice.rank) {
        throw DimensionMismatch(std::string(what) + ": class has length " + std::to_string(a.size()) +
                                ", lattice rank is " + std::to_string(lattice.rank));
    }
}

}  // namespace

DivClass operator+(const DivClass& a, const DivClass& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("class addition: length mismatch");
    }
    DivClass out = a;
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

DivClass operator-(const DivClass& a, const DivClass& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("class subtraction: length mismatch");
    }
    DivClass out = a;
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] -= b[i];
    }
    return out;
}

DivClass operator-(const DivClass& a) {
    DivClass out = a;
    for (auto& c : out.coeffs) {
        c = -c;
    }
    return out;
}

DivClass operator*(const Rational& scalar, const DivClass& a) {
    DivClass out = a;
    for (auto& c : out.coeffs) {
        c *= scalar;
    }
    return out;
}

bool NSLattice::gram_is_symmetric() const {
    if (gram.size() != rank) {
        return false;
    }
    for (std::size_t i = 0; i < rank; ++i) {
        if (gram[i].size() != rank) {
            return false;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gram[i][j] != gram[j][i]) {
                return false;
            }
        }
    }
    return true;
}

Rational intersect(const NSLattice& lattice, const DivClass& a, const DivClass& b) {
    check_rank(lattice, a, "intersect");
    check_rank(lattice, b, "intersect");
    Rational total(0);
    for (std::size_t i = 0; i < lattice.rank; ++i) {
        if (a[i] == 0) {
            continue;
        }
        Rational row(0);
        for (std::size_t j = 0; j < lattice.rank; ++j) {
            if (b[j] != 0) {
                row += lattice.gram[i][j] * b[j];
            }
        }
        total += a[i] * row;
    }
    return total;
}

Signature signature(const NSLattice& lattice) {
    const InertiaCounts counts = symmetric_inertia(lattice.gram);
    return Signature{counts.positive, counts.negative, counts.zero};
}

QMatrix gram_of(const NSLattice& lattice, const std::vector<DivClass>& classes) {
    const std::size_t n = classes.size();
    QMatrix m(n, QVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            m[i][j] = intersect(lattice, classes[i], classes[j]);
            m[j][i] = m[i][j];
        }
    }
    return m;
}

bool is_negative_definite(const NSLattice& lattice, const std::vector<DivClass>& classes) {
    if (classes.empty()) {
        return true;
    }
    const auto pivots = symmetric_pivots(gram_of(lattice, classes));
    if (!pivots) {
        return false;
    }
    for (const auto& p : *pivots) {
        if (p >= 0) {
            return false;
        }
    }
    return true;
}

std::vector<Rational> solve_orthogonal(const NSLattice& lattice, const DivClass& d,
                                       const std::vector<DivClass>& exceptional) {
    check_rank(lattice, d, "solve_orthogonal");
    if (exceptional.empty()) {
        return {};
    }
    if (!is_negative_definite(lattice, exceptional)) {
        throw NotNegativeDefinite("solve_orthogonal: the given classes are not negative definite");
    }
    QMatrix m = gram_of(lattice, exceptional);
    QVector rhs;
    rhs.reserve(exceptional.size());
    for (const auto& e : exceptional) {
        rhs.push_back(-intersect(lattice, d, e));
    }
    auto solution = solve_linear(std::move(m), std::move(rhs));
    if (!solution) {
        throw LogicError("solve_orthogonal: negative definite Gram matrix was singular");
    }
    return *solution;
}

}  // namespace logsurf
