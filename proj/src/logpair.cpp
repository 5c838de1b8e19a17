#include "logsurf/logpair.hpp"

#include <algorithm>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

struct ContractedSystem {
    std::vector<const Curve*> curves;
    std::vector<DivClass> classes;
};

ContractedSystem contracted_system(const LogSurface& x) {
    ContractedSystem sys;
    sys.curves = x.contracted_curves();
    for (const Curve* c : sys.curves) {
        sys.classes.push_back(c->cls);
    }
    return sys;
}

/// Solved coefficients b with (seed + Σ b_j E_j) . E_k = 0 over the
/// contracted curves.
std::vector<Rational> orthogonalizing_coefficients(const LogSurface& x, const ContractedSystem& sys,
                                                   const DivClass& seed) {
    return solve_orthogonal(x.lattice, seed, sys.classes);
}

}  // namespace

DivClass adjoint_class(const LogSurface& x) {
    DivClass total = x.lattice.canonical;
    for (const auto& curve : x.curves) {
        const Rational d = x.boundary_coefficient(curve.name);
        if (d != 0 && !x.is_contracted(curve.name)) {
            total = total + (d * curve.cls);
        }
    }
    return total;
}

LogPullback log_pullback(const LogSurface& x) {
    const ContractedSystem sys = contracted_system(x);
    const DivClass seed = adjoint_class(x);
    const std::vector<Rational> solved = orthogonalizing_coefficients(x, sys, seed);

    LogPullback out;
    for (const auto& curve : x.curves) {
        if (!x.is_contracted(curve.name)) {
            out.delta_y[curve.name] = x.boundary_coefficient(curve.name);
        }
    }
    for (std::size_t j = 0; j < sys.curves.size(); ++j) {
        out.delta_y[sys.curves[j]->name] = solved[j];
        out.discrepancies[sys.curves[j]->name] = -solved[j];
    }
    return out;
}

DivClass adjoint_pullback_class(const LogSurface& x) {
    const ContractedSystem sys = contracted_system(x);
    DivClass total = adjoint_class(x);
    const std::vector<Rational> solved = orthogonalizing_coefficients(x, sys, total);
    for (std::size_t j = 0; j < sys.classes.size(); ++j) {
        total = total + (solved[j] * sys.classes[j]);
    }
    return total;
}

DivClass mumford_pullback(const LogSurface& x, const DivClass& d) {
    const ContractedSystem sys = contracted_system(x);
    const std::vector<Rational> solved = orthogonalizing_coefficients(x, sys, d);
    DivClass total = d;
    for (std::size_t j = 0; j < sys.classes.size(); ++j) {
        total = total + (solved[j] * sys.classes[j]);
    }
    return total;
}

Rational pair_x(const LogSurface& x, const DivClass& a, const DivClass& b) {
    // The pullback of a is orthogonal to the contracted span, so pairing it
    // with b or with the pullback of b gives the same number.
    return intersect(x.lattice, mumford_pullback(x, a), b);
}

std::string to_string(PairKind kind) {
    switch (kind) {
        case PairKind::KLT:
            return "KLT";
        case PairKind::LC:
            return "LC";
        case PairKind::NonLC:
            return "NonLC";
    }
    return "?";
}

PairClass classify(const LogSurface& x) {
    const LogPullback pullback = log_pullback(x);
    PairClass out;
    out.certified = x.assumptions.snc_resolution;
    for (const auto& curve : x.curves) {
        const Rational& coeff = pullback.delta_y.at(curve.name);
        if (coeff >= 1) {
            out.nklt_locus.push_back(curve.name);
        }
        if (coeff > 1) {
            out.nlc_locus.push_back(curve.name);
        }
    }
    if (!out.nlc_locus.empty()) {
        out.kind = PairKind::NonLC;
    } else if (!out.nklt_locus.empty()) {
        out.kind = PairKind::LC;
    } else {
        out.kind = PairKind::KLT;
    }
    return out;
}

LctResult lct(const LogSurface& x, const std::map<std::string, Rational>& theta) {
    DivClass theta_class = DivClass::zero(x.lattice.rank);
    for (const auto& [name, value] : theta) {
        const Curve* curve = x.find_curve(name);
        if (curve == nullptr || x.is_contracted(name)) {
            throw ThetaNotEffective("lct: theta names no listed curve of X ('" + name + "')");
        }
        if (value < 0) {
            throw ThetaNotEffective("lct: negative coefficient on '" + name + "'");
        }
        theta_class = theta_class + (value * curve->cls);
    }

    const ContractedSystem sys = contracted_system(x);
    const LogPullback base = log_pullback(x);
    const std::vector<Rational> slope_solved =
        sys.classes.empty() ? std::vector<Rational>{}
                            : solve_orthogonal(x.lattice, theta_class, sys.classes);

    // Coefficient of each curve in the pullback of K + Δ + tΘ is
    // base + t * slope; collect the binding constraints coefficient <= 1,
    // skipping curves already beyond 1 at t = 0.
    std::optional<Rational> best;
    std::vector<std::string> binding;
    auto consider = [&](const std::string& name, const Rational& c0, const Rational& slope) {
        if (c0 > 1 || slope <= 0) {
            return;
        }
        const Rational bound = (Rational(1) - c0) / slope;
        if (!best || bound < *best) {
            best = bound;
            binding.clear();
        }
        if (best && bound == *best) {
            binding.push_back(name);
        }
    };
    for (const auto& curve : x.curves) {
        if (x.is_contracted(curve.name)) {
            continue;
        }
        Rational slope(0);
        if (auto it = theta.find(curve.name); it != theta.end()) {
            slope = it->second;
        }
        consider(curve.name, base.delta_y.at(curve.name), slope);
    }
    for (std::size_t j = 0; j < sys.curves.size(); ++j) {
        consider(sys.curves[j]->name, base.delta_y.at(sys.curves[j]->name), slope_solved[j]);
    }
    return LctResult{best, std::move(binding)};
}

int numerical_dimension(const LogSurface& x, const DivClass& d) {
    const DivClass pulled = mumford_pullback(x, d);
    for (const Curve* curve : x.non_contracted_curves()) {
        if (intersect(x.lattice, pulled, curve->cls) < 0) {
            throw NotNefOnList("numerical_dimension: class pairs negatively with '" + curve->name + "'");
        }
    }
    const Rational square = intersect(x.lattice, pulled, pulled);
    if (square > 0) {
        return 2;
    }
    if (square == 0) {
        bool trivial = true;
        for (std::size_t i = 0; i < x.lattice.rank && trivial; ++i) {
            trivial = intersect(x.lattice, pulled, DivClass::unit(x.lattice.rank, i)) == 0;
        }
        if (trivial) {
            return 0;
        }
    }
    // Square zero and nontrivial; a negative square can only arise when the
    // curve list is incomplete, and is reported as dimension 1 as well.
    return 1;
}

std::vector<std::vector<std::string>> contracted_components(const LogSurface& x) {
    const std::vector<const Curve*> members = x.contracted_curves();
    const std::size_t n = members.size();
    std::vector<bool> used(n, false);
    std::vector<std::vector<std::string>> components;
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) {
            continue;
        }
        std::vector<std::size_t> stack{i};
        std::vector<std::size_t> component;
        used[i] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (std::size_t w = 0; w < n; ++w) {
                if (!used[w] && intersect(x.lattice, members[v]->cls, members[w]->cls) != 0) {
                    used[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(component.begin(), component.end());
        std::vector<std::string> names;
        for (std::size_t v : component) {
            names.push_back(members[v]->name);
        }
        components.push_back(std::move(names));
    }
    return components;
}

namespace {

std::vector<const Curve*> component_curves(const LogSurface& x, const std::vector<std::string>& component) {
    if (component.empty()) {
        throw NotConnected("fundamental_cycle: empty component");
    }
    std::vector<const Curve*> members;
    for (const auto& name : component) {
        const Curve* curve = x.find_curve(name);
        if (curve == nullptr || !x.is_contracted(name)) {
            throw PreconditionError("fundamental_cycle: '" + name + "' is not a contracted curve");
        }
        members.push_back(curve);
    }
    // Connectivity via nonzero pairwise intersections.
    const std::size_t n = members.size();
    std::vector<bool> reached(n, false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if (!reached[w] && intersect(x.lattice, members[v]->cls, members[w]->cls) != 0) {
                reached[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    if (count != n) {
        throw NotConnected("fundamental_cycle: component is not connected");
    }
    return members;
}

}  // namespace

DivClass fundamental_cycle(const LogSurface& x, const std::vector<std::string>& component) {
    const std::vector<const Curve*> members = component_curves(x, component);
    DivClass cycle = DivClass::zero(x.lattice.rank);
    for (const Curve* c : members) {
        cycle = cycle + c->cls;
    }
    // Laufer: while some member pairs positively, add it; negative
    // definiteness bounds the coefficients, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Curve* c : members) {
            if (intersect(x.lattice, cycle, c->cls) > 0) {
                cycle = cycle + c->cls;
                changed = true;
                break;
            }
        }
    }
    return cycle;
}

bool is_rational_singularity(const LogSurface& x, const std::vector<std::string>& component) {
    const DivClass z = fundamental_cycle(x, component);
    const Rational pa =
        Rational(1) + (intersect(x.lattice, z, z) + intersect(x.lattice, x.lattice.canonical, z)) / 2;
    return pa == 0;
}

int kappa_via_abundance(const LogSurface& x) {
    return numerical_dimension(x, adjoint_class(x));
}

}  // namespace logsurf
