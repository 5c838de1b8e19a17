#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logsurf/errors.hpp"
#include "logsurf/lattice.hpp"
#include "logsurf/surface.hpp"

using namespace logsurf;

namespace {

NSLattice p2() {
    NSLattice l;
    l.rank = 1;
    l.gram = {{Rational(1)}};
    l.canonical = DivClass({Rational(-3)});
    return l;
}

NSLattice bl_p2(std::size_t points) {
    NSLattice l;
    l.rank = 1 + points;
    l.gram = QMatrix(l.rank, QVector(l.rank, Rational(0)));
    l.gram[0][0] = 1;
    for (std::size_t i = 1; i < l.rank; ++i) {
        l.gram[i][i] = -1;
    }
    QVector k(l.rank, Rational(1));
    k[0] = -3;
    l.canonical = DivClass(k);
    return l;
}

NSLattice f2() {
    NSLattice l;
    l.rank = 2;
    l.gram = {{Rational(-2), Rational(1)}, {Rational(1), Rational(0)}};
    l.canonical = DivClass({Rational(-2), Rational(-4)});
    return l;
}

// Bourbaki labeling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
NSLattice e8_graph() {
    NSLattice l;
    l.rank = 8;
    l.gram = QMatrix(8, QVector(8, Rational(0)));
    for (std::size_t i = 0; i < 8; ++i) {
        l.gram[i][i] = -2;
    }
    auto edge = [&](std::size_t a, std::size_t b) {
        l.gram[a - 1][b - 1] = 1;
        l.gram[b - 1][a - 1] = 1;
    };
    edge(1, 3);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    edge(7, 8);
    edge(2, 4);
    l.canonical = DivClass::zero(8);
    return l;
}

DivClass cls(std::vector<long long> v) {
    std::vector<Rational> c;
    for (long long x : v) {
        c.emplace_back(x);
    }
    return DivClass(std::move(c));
}

}  // namespace

TEST_CASE("intersection numbers on presets") {
    CHECK(intersect(p2(), cls({1}), cls({1})) == 1);
    const NSLattice b1 = bl_p2(1);
    CHECK(intersect(b1, cls({0, 1}), cls({0, 1})) == -1);
    const NSLattice b2 = bl_p2(2);
    // (H - E1 - E2)^2 = 1 - 1 - 1
    CHECK(intersect(b2, cls({1, -1, -1}), cls({1, -1, -1})) == -1);
    CHECK(intersect(b2, b2.canonical, b2.canonical) == 7);
}

TEST_CASE("intersect rejects mismatched lengths") {
    CHECK_THROWS_AS(intersect(p2(), cls({1, 0}), cls({1})), DimensionMismatch);
}

TEST_CASE("signatures") {
    CHECK(signature(p2()) == Signature{1, 0, 0});
    CHECK(signature(bl_p2(1)) == Signature{1, 1, 0});
    CHECK(signature(e8_graph()) == Signature{0, 8, 0});

    // Hyperbolic plane: zero diagonal handled by the off-diagonal fold.
    NSLattice h;
    h.rank = 2;
    h.gram = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    h.canonical = DivClass::zero(2);
    CHECK(signature(h) == Signature{1, 1, 0});

    NSLattice degenerate;
    degenerate.rank = 2;
    degenerate.gram = {{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
    degenerate.canonical = DivClass::zero(2);
    CHECK(signature(degenerate) == Signature{1, 0, 1});
}

TEST_CASE("signature is a congruence invariant") {
    std::mt19937 rng(20240311);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const NSLattice base = bl_p2(3);
        // Random unimodular change of basis built from shears.
        QMatrix s(4, QVector(4, Rational(0)));
        for (int i = 0; i < 4; ++i) {
            s[i][i] = 1;
        }
        for (int shear = 0; shear < 6; ++shear) {
            const int i = static_cast<int>(rng() % 4);
            const int j = static_cast<int>(rng() % 4);
            if (i == j) {
                continue;
            }
            const Rational factor(entry(rng));
            for (int k = 0; k < 4; ++k) {
                s[i][k] += factor * s[j][k];
            }
        }
        NSLattice changed = base;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                Rational sum(0);
                for (std::size_t a = 0; a < 4; ++a) {
                    for (std::size_t b = 0; b < 4; ++b) {
                        sum += s[i][a] * base.gram[a][b] * s[j][b];
                    }
                }
                changed.gram[i][j] = sum;
            }
        }
        CHECK(signature(changed) == Signature{1, 3, 0});
    }
}

TEST_CASE("negative definiteness") {
    const NSLattice b1 = bl_p2(1);
    CHECK(is_negative_definite(b1, {cls({0, 1})}));
    CHECK_FALSE(is_negative_definite(b1, {cls({1, -1})}));  // square 0
    CHECK(is_negative_definite(b1, {}));                    // documented convention

    // A2 chain: self-intersections -2, mutual 1; minors -2, +3.
    NSLattice a2;
    a2.rank = 2;
    a2.gram = {{Rational(-2), Rational(1)}, {Rational(1), Rational(-2)}};
    a2.canonical = DivClass::zero(2);
    CHECK(is_negative_definite(a2, {cls({1, 0}), cls({0, 1})}));
    CHECK(is_negative_definite(e8_graph(), {cls({1, 0, 0, 0, 0, 0, 0, 0}), cls({0, 1, 0, 0, 0, 0, 0, 0}),
                                            cls({0, 0, 1, 0, 0, 0, 0, 0}), cls({0, 0, 0, 1, 0, 0, 0, 0}),
                                            cls({0, 0, 0, 0, 1, 0, 0, 0}), cls({0, 0, 0, 0, 0, 1, 0, 0}),
                                            cls({0, 0, 0, 0, 0, 0, 1, 0}), cls({0, 0, 0, 0, 0, 0, 0, 1})}));

    // Linearly dependent collections are never definite.
    CHECK_FALSE(is_negative_definite(b1, {cls({0, 1}), cls({0, 1})}));
}

TEST_CASE("negative definiteness agrees with the inertia route") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        NSLattice l;
        l.rank = n;
        l.gram = QMatrix(n, QVector(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                const Rational v(entry(rng));
                l.gram[i][j] = v;
                l.gram[j][i] = v;
            }
        }
        l.canonical = DivClass::zero(n);
        std::vector<DivClass> basis;
        for (std::size_t i = 0; i < n; ++i) {
            basis.push_back(DivClass::unit(n, i));
        }
        const Signature sig = signature(l);
        const bool via_inertia = sig.negative == static_cast<int>(n);
        CHECK(is_negative_definite(l, basis) == via_inertia);
    }
}

TEST_CASE("solve_orthogonal worked values") {
    // F2: D = f against {s}: 1 - 2a = 0.
    const auto f2_sol = solve_orthogonal(f2(), cls({0, 1}), {cls({1, 0})});
    REQUIRE(f2_sol.size() == 1);
    CHECK(f2_sol[0] == Rational(1, 2));

    // Already orthogonal: (s + 2f).s = -2 + 2 = 0, so the answer is zero.
    const auto zero_sol = solve_orthogonal(f2(), cls({1, 2}), {cls({1, 0})});
    CHECK(zero_sol[0] == 0);

    // Bl1 P^2: D = H + 2 E1 against {E1}: -2 - a = 0.
    const auto b1_sol = solve_orthogonal(bl_p2(1), cls({1, 2}), {cls({0, 1})});
    REQUIRE(b1_sol.size() == 1);
    CHECK(b1_sol[0] == Rational(-2));

    CHECK(solve_orthogonal(bl_p2(1), cls({1, 2}), {}).empty());
    CHECK_THROWS_AS(solve_orthogonal(bl_p2(1), cls({1, 0}), {cls({1, -1})}), NotNegativeDefinite);
}

TEST_CASE("solve_orthogonal residuals vanish on random instances") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    int performed = 0;
    while (performed < 300) {
        const NSLattice l = bl_p2(1 + rng() % 5);
        // Candidate exceptional set: subsets of the E_i plus optional H-E_i-E_j classes.
        std::vector<DivClass> exceptional;
        for (std::size_t i = 1; i < l.rank; ++i) {
            if (rng() % 2 == 0) {
                exceptional.push_back(DivClass::unit(l.rank, i));
            }
        }
        if (exceptional.empty() || !is_negative_definite(l, exceptional)) {
            continue;
        }
        DivClass d = DivClass::zero(l.rank);
        for (std::size_t i = 0; i < l.rank; ++i) {
            d[i] = Rational(num(rng), den(rng));
        }
        const auto solved = solve_orthogonal(l, d, exceptional);
        DivClass total = d;
        for (std::size_t j = 0; j < exceptional.size(); ++j) {
            total = total + (solved[j] * exceptional[j]);
        }
        for (const auto& e : exceptional) {
            CHECK(intersect(l, total, e) == 0);
        }
        ++performed;
    }
}

TEST_CASE("bilinearity and symmetry of the pairing") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        NSLattice l;
        l.rank = n;
        l.gram = QMatrix(n, QVector(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                const Rational v(num(rng), den(rng));
                l.gram[i][j] = v;
                l.gram[j][i] = v;
            }
        }
        l.canonical = DivClass::zero(n);
        auto random_class = [&] {
            DivClass d = DivClass::zero(n);
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = Rational(num(rng), den(rng));
            }
            return d;
        };
        const DivClass a = random_class();
        const DivClass b = random_class();
        const DivClass c = random_class();
        const Rational t(num(rng), den(rng));
        CHECK(intersect(l, a, b) == intersect(l, b, a));
        CHECK(intersect(l, a + b, c) == intersect(l, a, c) + intersect(l, b, c));
        CHECK(intersect(l, t * a, b) == t * intersect(l, a, b));
    }
}

TEST_CASE("Hodge index consequence on blow-up lattices") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> num(-4, 4);
    int performed = 0;
    while (performed < 300) {
        const NSLattice l = bl_p2(1 + rng() % 5);
        DivClass d = DivClass::zero(l.rank);
        for (std::size_t i = 0; i < l.rank; ++i) {
            d[i] = Rational(num(rng));
        }
        if (intersect(l, d, d) <= 0) {
            continue;
        }
        DivClass b = DivClass::zero(l.rank);
        for (std::size_t i = 0; i < l.rank; ++i) {
            b[i] = Rational(num(rng));
        }
        // Project b into d-perp.
        const DivClass c = (intersect(l, d, d) * b) - (intersect(l, b, d) * d);
        if (c.is_zero()) {
            continue;
        }
        CHECK(intersect(l, c, d) == 0);
        CHECK(intersect(l, c, c) < 0);
        ++performed;
    }
}

TEST_CASE("negativity-lemma sign pattern on generated graphs") {
    // Trees of curves with self-intersection <= -(degree+1) are strictly
    // diagonally dominant, hence negative definite; pairing data d with
    // d_k = D.E_k >= 0 must solve to nonnegative coefficients.
    std::mt19937 rng(6060);
    std::uniform_int_distribution<int> extra(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        NSLattice l;
        l.rank = n;
        l.gram = QMatrix(n, QVector(n, Rational(0)));
        std::vector<int> degree(n, 0);
        for (std::size_t i = 1; i < n; ++i) {
            const std::size_t parent = rng() % i;
            l.gram[i][parent] = 1;
            l.gram[parent][i] = 1;
            ++degree[i];
            ++degree[parent];
        }
        for (std::size_t i = 0; i < n; ++i) {
            l.gram[i][i] = Rational(-(degree[i] + 1 + extra(rng)));
        }
        l.canonical = DivClass::zero(n);
        std::vector<DivClass> basis;
        for (std::size_t i = 0; i < n; ++i) {
            basis.push_back(DivClass::unit(n, i));
        }
        REQUIRE(is_negative_definite(l, basis));

        // Build D with prescribed nonnegative pairings by solving once.
        QVector target;
        for (std::size_t i = 0; i < n; ++i) {
            target.push_back(Rational(extra(rng)));
        }
        const auto coords = solve_linear(l.gram, target);
        REQUIRE(coords.has_value());
        const DivClass d(*coords);
        const auto solved = solve_orthogonal(l, d, basis);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(intersect(l, d, basis[i]) == target[i]);
            CHECK(solved[i] >= 0);
        }
        // The reflected statement: D.E_k <= 0 forces coefficients <= 0.
        const auto reflected = solve_orthogonal(l, -d, basis);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(reflected[i] <= 0);
        }
    }
}
