#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logsurf/errors.hpp"
#include "logsurf/logpair.hpp"
#include "support/corpus.hpp"

using namespace logsurf;
using namespace logsurf::testsupport;

namespace {

DivClass cls(std::vector<long long> v) {
    std::vector<Rational> c;
    for (long long x : v) {
        c.emplace_back(x);
    }
    return DivClass(std::move(c));
}

/// Independent check: every contracted curve pairs to zero against the
/// assembled pullback of K + Δ.
void check_residuals(const LogSurface& x) {
    const DivClass pulled = adjoint_pullback_class(x);
    for (const Curve* curve : x.contracted_curves()) {
        CHECK(intersect(x.lattice, pulled, curve->cls) == 0);
    }
}

}  // namespace

TEST_CASE("log pullback worked values") {
    SUBCASE("quadric cone: canonical A1-type point with discrepancy 0") {
        const LogPullback p = log_pullback(quadric_cone());
        CHECK(p.discrepancies.at("s") == 0);
        check_residuals(quadric_cone());
    }

    SUBCASE("contracted (-3)-curve: discrepancy -1/3") {
        const LogSurface x = minus_three_contracted();
        const LogPullback p = log_pullback(x);
        CHECK(p.discrepancies.at("E1") == Rational(-1, 3));
        check_residuals(x);
    }

    SUBCASE("simple elliptic: discrepancy -1") {
        const LogSurface x = simple_elliptic_contracted();
        const Curve* c = x.find_curve("C");
        REQUIRE(c != nullptr);
        CHECK(intersect(x.lattice, c->cls, c->cls) == -1);
        CHECK(c->pa == 1);
        const LogPullback p = log_pullback(x);
        CHECK(p.discrepancies.at("C") == Rational(-1));
        check_residuals(x);
    }

    SUBCASE("A_n chains have all discrepancies zero") {
        for (int n = 1; n <= 5; ++n) {
            const LogSurface x = a_chain_contracted(n);
            const LogPullback p = log_pullback(x);
            for (const auto& [name, a] : p.discrepancies) {
                CAPTURE(name);
                CHECK(a == 0);
            }
            check_residuals(x);
        }
    }

    SUBCASE("cusp resolution: discrepancies 1, 2, 4 over the plain plane") {
        const LogSurface x = cuspidal_cubic_plane(Rational(0));
        const LogPullback p = log_pullback(x);
        CHECK(p.discrepancies.at("E1") == 1);
        CHECK(p.discrepancies.at("E2") == 2);
        CHECK(p.discrepancies.at("E3") == 4);
        check_residuals(x);
    }

    SUBCASE("cusp with coefficient one: totals 1, 1, 2") {
        const LogSurface x = cuspidal_cubic_plane(Rational(1));
        const LogPullback p = log_pullback(x);
        CHECK(p.delta_y.at("C") == 1);
        CHECK(p.delta_y.at("E1") == 1);
        CHECK(p.delta_y.at("E2") == 1);
        CHECK(p.delta_y.at("E3") == 2);
        check_residuals(x);
    }
}

TEST_CASE("discrepancy stability under an unrelated blow-up") {
    // Blowing up a point away from the configuration must not change any
    // discrepancy of the contracted curves.
    const LogSurface base = minus_three_contracted();
    const LogPullback before = log_pullback(base);
    const LogSurface blown = blow_up(base, {});
    const LogPullback after = log_pullback(blown);
    for (const auto& [name, a] : before.discrepancies) {
        CHECK(after.discrepancies.at(name) == a);
    }

    const LogSurface cusp = cuspidal_cubic_plane(Rational(1));
    const LogPullback cusp_before = log_pullback(cusp);
    const LogPullback cusp_after = log_pullback(blow_up(cusp, {}));
    for (const auto& [name, a] : cusp_before.discrepancies) {
        CHECK(cusp_after.discrepancies.at(name) == a);
    }
}

TEST_CASE("mumford pullback") {
    SUBCASE("quadric cone fiber") {
        const LogSurface cone = quadric_cone();
        const DivClass pulled = mumford_pullback(cone, cls({0, 1}));
        CHECK(pulled == DivClass({Rational(1, 2), Rational(1)}));
        CHECK(pair_x(cone, cls({0, 1}), cls({0, 1})) == Rational(1, 2));
    }

    SUBCASE("orthogonal classes pass through unchanged") {
        const LogSurface cone = quadric_cone();
        const DivClass d = cls({1, 2});  // (s + 2f).s = 0
        CHECK(mumford_pullback(cone, d) == d);
    }

    SUBCASE("two-point blow-up with E1 contracted") {
        LogSurface x = two_point_blowup();
        x = contract(x, {"E1"});
        const DivClass line = x.find_curve("l")->cls;  // H - E1 - E2
        const DivClass pulled = mumford_pullback(x, line);
        CHECK(pulled == cls({1, 0, -1}));
        CHECK(intersect(x.lattice, pulled, pulled) == 0);
    }

    SUBCASE("X-pairing is symmetric, bilinear, and extends the smooth pairing") {
        std::mt19937 rng(505);
        std::uniform_int_distribution<int> num(-4, 4);
        const LogSurface x = e8_contracted();
        for (int trial = 0; trial < 50; ++trial) {
            DivClass a = DivClass::zero(9);
            DivClass b = DivClass::zero(9);
            for (std::size_t i = 0; i < 9; ++i) {
                a[i] = Rational(num(rng));
                b[i] = Rational(num(rng));
            }
            CHECK(pair_x(x, a, b) == pair_x(x, b, a));
            const DivClass sum = a + b;
            CHECK(pair_x(x, sum, b) == pair_x(x, a, b) + pair_x(x, b, b));
            const DivClass pa_ = mumford_pullback(x, a);
            CHECK(pair_x(x, pa_, b) == intersect(x.lattice, pa_, mumford_pullback(x, b)));
        }
    }
}

TEST_CASE("classification") {
    SUBCASE("plain plane is klt") {
        LogSurface p2 = projective_plane();
        p2.assumptions = {true, true};
        const PairClass c = classify(p2);
        CHECK(c.kind == PairKind::KLT);
        CHECK(c.nklt_locus.empty());
        CHECK(c.nlc_locus.empty());
        CHECK(c.certified);
    }

    SUBCASE("cuspidal cubic with coefficient one is not lc") {
        const PairClass c = classify(cuspidal_cubic_plane(Rational(1)));
        CHECK(c.kind == PairKind::NonLC);
        CHECK(c.nlc_locus == std::vector<std::string>{"E3"});
        // Every coefficient-one curve sits in the non-klt locus.
        CHECK(c.nklt_locus == std::vector<std::string>{"C", "E1", "E2", "E3"});
    }

    SUBCASE("simple elliptic is lc but not klt") {
        const PairClass c = classify(simple_elliptic_contracted());
        CHECK(c.kind == PairKind::LC);
        CHECK(c.nklt_locus == std::vector<std::string>{"C"});
        CHECK(c.nlc_locus.empty());
    }

    SUBCASE("E8 configuration is klt") {
        const PairClass c = classify(e8_contracted());
        CHECK(c.kind == PairKind::KLT);
    }

    SUBCASE("snc flag controls certification only") {
        LogSurface x = cuspidal_cubic_plane(Rational(1));
        x.assumptions.snc_resolution = false;
        const PairClass c = classify(x);
        CHECK(c.kind == PairKind::NonLC);
        CHECK_FALSE(c.certified);
    }

    SUBCASE("monotone in the boundary coefficient") {
        std::mt19937 rng(9091);
        std::uniform_int_distribution<long long> den(2, 9);
        auto rank_of = [](PairKind k) { return k == PairKind::KLT ? 0 : k == PairKind::LC ? 1 : 2; };
        for (int trial = 0; trial < 60; ++trial) {
            const long long q = den(rng);
            const long long p = rng() % q;
            const Rational low(p, q);
            const Rational high = low + Rational(1, q * 2) <= 1 ? low + Rational(1, q * 2) : Rational(1);
            const PairClass a = classify(cuspidal_cubic_plane(low));
            const PairClass b = classify(cuspidal_cubic_plane(high));
            CHECK(rank_of(a.kind) <= rank_of(b.kind));
        }
    }
}

TEST_CASE("log canonical threshold") {
    SUBCASE("smooth line in the plane") {
        LogSurface p2 = projective_plane();
        p2.assumptions = {true, true};
        const LctResult r = lct(p2, {{"l", Rational(1)}});
        REQUIRE(r.value.has_value());
        CHECK(*r.value == 1);
    }

    SUBCASE("cuspidal cubic: 5/6, bound by the last exceptional") {
        const LogSurface x = cuspidal_cubic_plane(Rational(0));
        const LctResult r = lct(x, {{"C", Rational(1)}});
        REQUIRE(r.value.has_value());
        CHECK(*r.value == Rational(5, 6));
        CHECK(r.binding == std::vector<std::string>{"E3"});
    }

    SUBCASE("scaling is inverse-linear") {
        const LogSurface x = cuspidal_cubic_plane(Rational(0));
        const LctResult doubled = lct(x, {{"C", Rational(2)}});
        REQUIRE(doubled.value.has_value());
        CHECK(*doubled.value == Rational(5, 12));
        const LctResult halved = lct(x, {{"C", Rational(1, 2)}});
        REQUIRE(halved.value.has_value());
        CHECK(*halved.value == Rational(5, 3));
    }

    SUBCASE("anti-monotone in theta") {
        const LogSurface x = cuspidal_cubic_plane(Rational(0));
        const LctResult small = lct(x, {{"C", Rational(1)}, {"l", Rational(1, 3)}});
        const LctResult large = lct(x, {{"C", Rational(1)}, {"l", Rational(2, 3)}});
        REQUIRE(small.value.has_value());
        REQUIRE(large.value.has_value());
        CHECK(*large.value <= *small.value);
    }

    SUBCASE("positive on klt pairs") {
        const LogSurface x = cuspidal_cubic_plane(Rational(1, 2));
        const LctResult r = lct(x, {{"C", Rational(1)}});
        REQUIRE(r.value.has_value());
        CHECK(*r.value > 0);
    }

    SUBCASE("unbounded when theta avoids every constraint") {
        // Theta supported on a contracted-free curve of a klt pair with slope
        // zero everywhere else does not exist here, so use an empty theta.
        LogSurface p2 = projective_plane();
        p2.assumptions = {true, true};
        const LctResult r = lct(p2, {});
        CHECK_FALSE(r.value.has_value());
    }

    SUBCASE("curves beyond the lc range at t = 0 are excluded") {
        // At coefficient one the cusp pair is already non-lc along E3; the
        // threshold against a general line ignores that curve.
        const LogSurface x = cuspidal_cubic_plane(Rational(1));
        const LctResult r = lct(x, {{"l", Rational(1)}});
        REQUIRE(r.value.has_value());
        CHECK(*r.value == 1);
    }

    SUBCASE("ineffective theta is rejected") {
        const LogSurface x = cuspidal_cubic_plane(Rational(0));
        CHECK_THROWS_AS(lct(x, {{"C", Rational(-1)}}), ThetaNotEffective);
        CHECK_THROWS_AS(lct(x, {{"E1", Rational(1)}}), ThetaNotEffective);  // contracted
        CHECK_THROWS_AS(lct(x, {{"nope", Rational(1)}}), ThetaNotEffective);
    }
}

TEST_CASE("numerical dimension") {
    LogSurface p2 = projective_plane();
    p2.assumptions = {true, true};
    CHECK(numerical_dimension(p2, cls({1})) == 2);
    CHECK(numerical_dimension(p2, cls({0})) == 0);

    const LogSurface b1 = blow_up(p2, {{"l", 1}});
    CHECK(numerical_dimension(b1, cls({1, -1})) == 1);
    CHECK_THROWS_AS(numerical_dimension(b1, cls({0, 1}) - cls({1, 0})), NotNefOnList);
}

TEST_CASE("fundamental cycles and Artin rationality") {
    SUBCASE("single (-2)-curve") {
        const LogSurface x = a_chain_contracted(1);
        const DivClass z = fundamental_cycle(x, {"E1"});
        CHECK(z == x.find_curve("E1")->cls);
        CHECK(is_rational_singularity(x, {"E1"}));
    }

    SUBCASE("A2 chain: Z = E1 + E2 with Z.E_i = -1") {
        const LogSurface x = a_chain_contracted(2);
        const DivClass z = fundamental_cycle(x, {"E1", "E2"});
        CHECK(z == x.find_curve("E1")->cls + x.find_curve("E2")->cls);
        CHECK(intersect(x.lattice, z, x.find_curve("E1")->cls) == -1);
        CHECK(intersect(x.lattice, z, x.find_curve("E2")->cls) == -1);
        CHECK(is_rational_singularity(x, {"E1", "E2"}));
    }

    SUBCASE("E8: the highest-root coefficients") {
        const LogSurface x = e8_contracted();
        const std::vector<std::string> component{"E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"};
        const DivClass z = fundamental_cycle(x, component);
        const long long expected[] = {2, 3, 4, 6, 5, 4, 3, 2};
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(z[i + 1] == expected[i]);
        }
        CHECK(intersect(x.lattice, z, z) == -2);
        CHECK(is_rational_singularity(x, component));
    }

    SUBCASE("simple elliptic is not rational") {
        const LogSurface x = simple_elliptic_contracted();
        CHECK_FALSE(is_rational_singularity(x, {"C"}));
    }

    SUBCASE("disconnected components are rejected") {
        LogSurface x = blow_up(blow_up(projective_plane(), {}), {});
        x = contract(x, {"E1", "E2"});
        CHECK_THROWS_AS(fundamental_cycle(x, {"E1", "E2"}), NotConnected);
        CHECK(contracted_components(x).size() == 2);
    }

    SUBCASE("brute-force minimality on small graphs") {
        // Enumerate effective cycles in a small box and confirm Laufer's
        // output is the least one with all pairings nonpositive.
        std::mt19937 rng(11011);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const LogSurface x = a_chain_contracted(n);
            std::vector<const Curve*> members;
            std::vector<std::string> names;
            for (int i = 1; i <= n; ++i) {
                names.push_back("E" + std::to_string(i));
                members.push_back(x.find_curve(names.back()));
            }
            const DivClass laufer = fundamental_cycle(x, names);

            // Box search up to coefficient 4.
            std::vector<long long> best;
            std::vector<long long> counter(n, 0);
            auto anti_nef = [&](const std::vector<long long>& coeffs) {
                DivClass z = DivClass::zero(x.lattice.rank);
                for (int i = 0; i < n; ++i) {
                    z = z + (Rational(coeffs[i]) * members[i]->cls);
                }
                for (int i = 0; i < n; ++i) {
                    if (intersect(x.lattice, z, members[i]->cls) > 0) {
                        return false;
                    }
                }
                return true;
            };
            for (;;) {
                int pos = 0;
                while (pos < n && counter[pos] == 4) {
                    counter[pos] = 0;
                    ++pos;
                }
                if (pos == n) {
                    break;
                }
                ++counter[pos];
                bool positive = false;
                for (int i = 0; i < n; ++i) {
                    positive = positive || counter[i] > 0;
                }
                if (!positive || !anti_nef(counter)) {
                    continue;
                }
                if (best.empty()) {
                    best = counter;
                } else {
                    for (int i = 0; i < n; ++i) {
                        best[i] = std::min(best[i], counter[i]);
                    }
                }
            }
            REQUIRE_FALSE(best.empty());
            // The componentwise minimum over all anti-nef cycles in the box
            // must be Laufer's cycle itself.
            DivClass best_cycle = DivClass::zero(x.lattice.rank);
            for (int i = 0; i < n; ++i) {
                best_cycle = best_cycle + (Rational(best[i]) * members[i]->cls);
            }
            CHECK(best_cycle == laufer);
        }
    }
}

TEST_CASE("kappa via abundance") {
    SUBCASE("four-lines minimal model has kappa 2") {
        LogSurface x = four_lines_blowup();
        x = contract(x, {"E1"});
        CHECK(kappa_via_abundance(x) == 2);
    }

    SUBCASE("numerically trivial adjoint class has kappa 0") {
        // The plane with a smooth cubic of coefficient one: K + C = 0.
        LogSurface x = add_curve(projective_plane(), "C", DivClass({Rational(3)}), 1);
        x = with_boundary(x, {{"C", Rational(1)}});
        x.assumptions = {true, true};
        CHECK(kappa_via_abundance(x) == 0);
    }

    SUBCASE("fibration-type adjoint class has kappa 1") {
        // F_0 with two sections and three fibers of coefficient one:
        // K + Δ = f, square zero but nontrivial.
        LogSurface x = hirzebruch(0);
        x = add_curve(x, "s2", DivClass({Rational(1), Rational(0)}), 0);
        x = add_curve(x, "f2", DivClass({Rational(0), Rational(1)}), 0);
        x = add_curve(x, "f3", DivClass({Rational(0), Rational(1)}), 0);
        x = with_boundary(x, {{"s", Rational(1)},
                              {"s2", Rational(1)},
                              {"f", Rational(1)},
                              {"f2", Rational(1)},
                              {"f3", Rational(1)}});
        x.assumptions = {true, true};
        CHECK(kappa_via_abundance(x) == 1);
    }

    SUBCASE("propagates the nefness requirement") {
        LogSurface p2 = projective_plane();
        p2.assumptions = {true, true};
        CHECK_THROWS_AS(kappa_via_abundance(p2), NotNefOnList);  // K is anti-ample
    }
}
