#include "logsurf/surface.hpp"

#include <algorithm>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

/// 1 + (C^2 + K.C)/2 when that is a nonnegative integer.
std::optional<long long> adjunction_genus(const NSLattice& lattice, const DivClass& cls) {
    const Rational value = Rational(1) + (intersect(lattice, cls, cls) + intersect(lattice, lattice.canonical, cls)) / 2;
    if (!is_integer(value) || value < 0) {
        return std::nullopt;
    }
    return static_cast<long long>(to_integer(value));
}

std::vector<DivClass> classes_of(const LogSurface& x, const std::set<std::string>& names) {
    std::vector<DivClass> out;
    for (const auto& curve : x.curves) {
        if (names.count(curve.name) > 0) {
            out.push_back(curve.cls);
        }
    }
    return out;
}

bool name_taken(const LogSurface& x, const std::string& name) {
    if (std::find(x.basis.begin(), x.basis.end(), name) != x.basis.end()) {
        return true;
    }
    return x.find_curve(name) != nullptr;
}

std::string fresh_exceptional_name(const LogSurface& x) {
    for (int k = 1;; ++k) {
        std::string candidate = "E" + std::to_string(k);
        if (!name_taken(x, candidate)) {
            return candidate;
        }
    }
}

}  // namespace

const Curve* LogSurface::find_curve(const std::string& name) const {
    for (const auto& curve : curves) {
        if (curve.name == name) {
            return &curve;
        }
    }
    return nullptr;
}

std::size_t LogSurface::curve_index(const std::string& name) const {
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].name == name) {
            return i;
        }
    }
    throw PreconditionError("unknown curve '" + name + "'");
}

Rational LogSurface::boundary_coefficient(const std::string& name) const {
    auto it = boundary.find(name);
    return it == boundary.end() ? Rational(0) : it->second;
}

std::vector<const Curve*> LogSurface::contracted_curves() const {
    std::vector<const Curve*> out;
    for (const auto& curve : curves) {
        if (contracted.count(curve.name) > 0) {
            out.push_back(&curve);
        }
    }
    return out;
}

std::vector<const Curve*> LogSurface::non_contracted_curves() const {
    std::vector<const Curve*> out;
    for (const auto& curve : curves) {
        if (contracted.count(curve.name) == 0) {
            out.push_back(&curve);
        }
    }
    return out;
}

LogSurface projective_plane() {
    LogSurface x;
    x.lattice.rank = 1;
    x.lattice.gram = {{Rational(1)}};
    x.lattice.canonical = DivClass({Rational(-3)});
    x.basis = {"H"};
    x.curves.push_back(Curve{"l", DivClass({Rational(1)}), 0, false});
    x.from_construction = true;
    return x;
}

LogSurface hirzebruch(long long e) {
    if (e < 0) {
        throw PreconditionError("hirzebruch: e must be nonnegative");
    }
    LogSurface x;
    x.lattice.rank = 2;
    x.lattice.gram = {{Rational(-e), Rational(1)}, {Rational(1), Rational(0)}};
    x.lattice.canonical = DivClass({Rational(-2), Rational(-(e + 2))});
    x.basis = {"s", "f"};
    x.curves.push_back(Curve{"s", DivClass({Rational(1), Rational(0)}), 0, false});
    x.curves.push_back(Curve{"f", DivClass({Rational(0), Rational(1)}), 0, false});
    x.from_construction = true;
    return x;
}

LogSurface add_curve(const LogSurface& x, const std::string& name, const DivClass& cls, long long pa) {
    if (name.empty() || name_taken(x, name)) {
        throw PreconditionError("add_curve: name '" + name + "' is empty or already in use");
    }
    if (cls.size() != x.lattice.rank) {
        throw DimensionMismatch("add_curve: class length does not match lattice rank");
    }
    const auto expected = adjunction_genus(x.lattice, cls);
    if (!expected || *expected != pa) {
        throw PreconditionError("add_curve: genus " + std::to_string(pa) + " of '" + name +
                                "' violates adjunction");
    }
    LogSurface out = x;
    out.curves.push_back(Curve{name, cls, pa, false});
    return out;
}

LogSurface with_boundary(const LogSurface& x, const std::map<std::string, Rational>& boundary) {
    for (const auto& [name, value] : boundary) {
        if (x.find_curve(name) == nullptr) {
            throw PreconditionError("boundary names unknown curve '" + name + "'");
        }
        if (value < 0 || value > 1) {
            throw PreconditionError("boundary coefficient of '" + name + "' is outside [0, 1]");
        }
    }
    LogSurface out = x;
    out.boundary = boundary;
    return out;
}

LogSurface with_assumptions(const LogSurface& x, const Assumptions& assumptions) {
    LogSurface out = x;
    out.assumptions = assumptions;
    return out;
}

LogSurface blow_up(const LogSurface& x, const std::map<std::string, long long>& multiplicities,
                   const std::string& exceptional_name) {
    for (const auto& [name, m] : multiplicities) {
        const Curve* curve = x.find_curve(name);
        if (curve == nullptr) {
            throw PreconditionError("blow_up: unknown curve '" + name + "'");
        }
        if (m < 0) {
            throw InvalidMultiplicity("blow_up: negative multiplicity on '" + name + "'");
        }
        if (m > 0 && x.is_contracted(name)) {
            throw PreconditionError("blow_up: center meets contracted curve '" + name +
                                    "'; blow up on the smooth model only");
        }
    }
    const std::string name = exceptional_name.empty() ? fresh_exceptional_name(x) : exceptional_name;
    if (name_taken(x, name)) {
        throw PreconditionError("blow_up: name '" + name + "' is already in use");
    }

    LogSurface out = x;
    const std::size_t rank = x.lattice.rank;
    out.lattice.rank = rank + 1;
    for (auto& row : out.lattice.gram) {
        row.push_back(Rational(0));
    }
    out.lattice.gram.push_back(QVector(rank + 1, Rational(0)));
    out.lattice.gram[rank][rank] = Rational(-1);
    out.lattice.canonical.coeffs.push_back(Rational(1));  // K -> K + E
    out.basis.push_back(name);

    for (auto& curve : out.curves) {
        long long m = 0;
        if (auto it = multiplicities.find(curve.name); it != multiplicities.end()) {
            m = it->second;
        }
        curve.cls.coeffs.push_back(Rational(-m));
        curve.pa -= m * (m - 1) / 2;
        if (curve.pa < 0) {
            throw InvalidMultiplicity("blow_up: multiplicity " + std::to_string(m) + " on '" + curve.name +
                                      "' drives its genus below zero");
        }
    }
    out.curves.push_back(Curve{name, DivClass::unit(rank + 1, rank), 0, true});
    return out;
}

LogSurface blow_down(const LogSurface& x, const std::string& name) {
    const Curve* curve = x.find_curve(name);
    if (curve == nullptr) {
        throw PreconditionError("blow_down: unknown curve '" + name + "'");
    }
    const DivClass& e = curve->cls;
    const NSLattice& lat = x.lattice;
    if (intersect(lat, e, e) != -1 || intersect(lat, lat.canonical, e) != -1 || curve->pa != 0) {
        throw NotMinusOneCurve("blow_down: '" + name + "' is not a (-1)-curve");
    }
    if (x.boundary_coefficient(name) != 0) {
        throw NotMinusOneCurve("blow_down: '" + name + "' carries a boundary coefficient");
    }
    if (x.is_contracted(name)) {
        throw NotMinusOneCurve("blow_down: '" + name + "' is in the contracted set");
    }
    for (const Curve* c : x.contracted_curves()) {
        if (intersect(lat, c->cls, e) != 0) {
            throw NotMinusOneCurve("blow_down: '" + name + "' meets contracted curve '" + c->name + "'");
        }
    }

    // Project every basis vector onto e^perp: b -> b + (b.e) e.
    const std::size_t rank = lat.rank;
    std::vector<DivClass> projected;
    projected.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        const DivClass b = DivClass::unit(rank, i);
        projected.push_back(b + (intersect(lat, b, e) * e));
    }

    // Deterministic choice of an independent subset: greedy Gaussian
    // elimination over the projected basis vectors, in basis order.
    std::vector<std::size_t> kept;
    QMatrix elim;
    for (std::size_t i = 0; i < rank && kept.size() + 1 < rank + 0; ++i) {
        QMatrix trial = elim;
        trial.push_back(projected[i].coeffs);
        // Row-reduce the trial set; keep i if it adds independent content.
        QMatrix work = trial;
        std::size_t pivot_rows = 0;
        for (std::size_t col = 0; col < rank && pivot_rows < work.size(); ++col) {
            std::size_t p = pivot_rows;
            while (p < work.size() && work[p][col] == 0) {
                ++p;
            }
            if (p == work.size()) {
                continue;
            }
            std::swap(work[p], work[pivot_rows]);
            const Rational inv = Rational(1) / work[pivot_rows][col];
            for (std::size_t j = 0; j < rank; ++j) {
                work[pivot_rows][j] *= inv;
            }
            for (std::size_t r = 0; r < work.size(); ++r) {
                if (r != pivot_rows && work[r][col] != 0) {
                    const Rational factor = work[r][col];
                    for (std::size_t j = 0; j < rank; ++j) {
                        work[r][j] -= factor * work[pivot_rows][j];
                    }
                }
            }
            ++pivot_rows;
        }
        if (pivot_rows == trial.size()) {
            elim = std::move(trial);
            kept.push_back(i);
        }
        if (kept.size() == rank - 1) {
            break;
        }
    }
    if (kept.size() != rank - 1) {
        throw LogicError("blow_down: could not extract a rational basis of the orthogonal complement");
    }

    // Coordinates of a projected class in the new basis.
    QMatrix basis_columns(rank, QVector(rank - 1, Rational(0)));
    for (std::size_t a = 0; a < rank - 1; ++a) {
        for (std::size_t i = 0; i < rank; ++i) {
            basis_columns[i][a] = projected[kept[a]][i];
        }
    }
    auto to_new_coords = [&](const DivClass& old_coords) {
        auto solution = solve_linear(basis_columns, old_coords.coeffs);
        if (!solution) {
            throw LogicError("blow_down: projected class left the span of the new basis");
        }
        return DivClass(*solution);
    };

    LogSurface out;
    out.assumptions = x.assumptions;
    out.from_construction = x.from_construction;
    out.contracted = x.contracted;
    out.boundary_contraction_ok = x.boundary_contraction_ok;
    out.lattice.rank = rank - 1;
    out.lattice.gram = QMatrix(rank - 1, QVector(rank - 1, Rational(0)));
    for (std::size_t a = 0; a < rank - 1; ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            const Rational v = intersect(lat, projected[kept[a]], projected[kept[b]]);
            out.lattice.gram[a][b] = v;
            out.lattice.gram[b][a] = v;
        }
    }
    for (std::size_t a = 0; a < rank - 1; ++a) {
        out.basis.push_back(x.basis[kept[a]]);
    }
    out.lattice.canonical = to_new_coords(lat.canonical + (intersect(lat, lat.canonical, e) * e));

    for (const auto& c : x.curves) {
        if (c.name == name) {
            continue;
        }
        const DivClass image = to_new_coords(c.cls + (intersect(lat, c.cls, e) * e));
        const auto pa = adjunction_genus(out.lattice, image);
        if (!pa) {
            throw LogicError("blow_down: adjunction failed on image of '" + c.name + "'");
        }
        out.curves.push_back(Curve{c.name, image, *pa, c.is_exceptional_history});
    }
    out.boundary = x.boundary;
    out.boundary.erase(name);
    return out;
}

LogSurface contract(const LogSurface& x, const std::set<std::string>& names, bool allow_boundary) {
    std::set<std::string> combined = x.contracted;
    for (const auto& name : names) {
        if (x.find_curve(name) == nullptr) {
            throw PreconditionError("contract: unknown curve '" + name + "'");
        }
        if (!allow_boundary && x.boundary_coefficient(name) > 0 && x.boundary_contraction_ok.count(name) == 0) {
            throw PreconditionError("contract: '" + name +
                                    "' carries a boundary coefficient; pass the explicit override");
        }
        combined.insert(name);
    }
    if (!is_negative_definite(x.lattice, classes_of(x, combined))) {
        throw NotNegativeDefinite("contract: the combined curve set is not negative definite");
    }
    LogSurface out = x;
    out.contracted = std::move(combined);
    if (allow_boundary) {
        for (const auto& name : names) {
            if (out.boundary_coefficient(name) > 0) {
                out.boundary_contraction_ok.insert(name);
            }
        }
    }
    return out;
}

int picard_number(const LogSurface& x) {
    return static_cast<int>(x.lattice.rank) - static_cast<int>(x.contracted.size());
}

std::vector<Violation> validate(const LogSurface& x) {
    std::vector<Violation> out;
    const NSLattice& lat = x.lattice;
    if (lat.gram.size() != lat.rank ||
        std::any_of(lat.gram.begin(), lat.gram.end(), [&](const QVector& r) { return r.size() != lat.rank; })) {
        out.push_back({"GramShape", "gram matrix is not rank x rank"});
        return out;  // nothing else is well defined
    }
    if (!lat.gram_is_symmetric()) {
        out.push_back({"GramNotSymmetric", "intersection form must be symmetric"});
        return out;
    }
    if (lat.canonical.size() != lat.rank) {
        out.push_back({"CanonicalLength", "canonical class length does not match rank"});
        return out;
    }

    const Signature sig = signature(x.lattice);
    if (!(sig == Signature{1, static_cast<int>(lat.rank) - 1, 0})) {
        out.push_back({"BadSignature", "intersection form does not have signature (1, rank-1)"});
    }

    std::set<std::string> seen;
    for (const auto& curve : x.curves) {
        if (curve.name.empty() || !seen.insert(curve.name).second) {
            out.push_back({"CurveName", "curve names must be nonempty and pairwise distinct"});
        }
        if (curve.cls.size() != lat.rank) {
            out.push_back({"ClassLength", "curve '" + curve.name + "' has a class of the wrong length"});
            continue;
        }
        const auto pa = adjunction_genus(lat, curve.cls);
        if (!pa || *pa != curve.pa) {
            out.push_back({"AdjunctionParity",
                           "curve '" + curve.name + "' violates adjunction or has negative genus"});
        }
    }

    for (const auto& [name, value] : x.boundary) {
        if (x.find_curve(name) == nullptr) {
            out.push_back({"BoundaryName", "boundary names unknown curve '" + name + "'"});
        }
        if (value < 0 || value > 1) {
            out.push_back({"BoundaryOutOfRange", "coefficient of '" + name + "' is " + format_rational(value)});
        }
    }

    bool contracted_ok = true;
    for (const auto& name : x.contracted) {
        if (x.find_curve(name) == nullptr) {
            out.push_back({"ContractedName", "contracted set names unknown curve '" + name + "'"});
            contracted_ok = false;
        }
    }
    if (contracted_ok && !is_negative_definite(lat, classes_of(x, x.contracted))) {
        out.push_back({"ContractedNotNegDef", "contracted curve classes are not negative definite"});
    }
    for (const auto& name : x.contracted) {
        if (x.find_curve(name) != nullptr && x.boundary_coefficient(name) > 0 &&
            x.boundary_contraction_ok.count(name) == 0) {
            out.push_back({"ContractedBoundary",
                           "contracted curve '" + name + "' carries a boundary coefficient without override"});
        }
    }
    if (picard_number(x) < 1) {
        out.push_back({"PicardRank", "picard number must stay at least 1"});
    }
    return out;
}

}  // namespace logsurf
