#include "logsurf/mmp.hpp"

#include <algorithm>
#include <numeric>

#include "logsurf/errors.hpp"

namespace logsurf {

std::string to_string(TieBreak tb) {
    switch (tb) {
        case TieBreak::ListOrder:
            return "list";
        case TieBreak::Reversed:
            return "reversed";
        case TieBreak::Rotated:
            return "rotated";
    }
    return "?";
}

std::optional<TieBreak> tiebreak_from_string(const std::string& text) {
    if (text == "list") {
        return TieBreak::ListOrder;
    }
    if (text == "reversed") {
        return TieBreak::Reversed;
    }
    if (text == "rotated") {
        return TieBreak::Rotated;
    }
    return std::nullopt;
}

std::string to_string(MMPOutcome::Kind kind) {
    switch (kind) {
        case MMPOutcome::Kind::MinimalModel:
            return "MinimalModel";
        case MMPOutcome::Kind::MoriFiberSpaceOverCurve:
            return "MoriFiberSpaceOverCurve";
        case MMPOutcome::Kind::MoriFiberSpaceOverPoint:
            return "MoriFiberSpaceOverPoint";
    }
    return "?";
}

namespace {

/// Positions of the non-contracted curves under a tie-break order.
std::vector<std::size_t> priority_of(std::size_t count, TieBreak tb) {
    std::vector<std::size_t> priority(count);
    std::iota(priority.begin(), priority.end(), std::size_t{0});
    switch (tb) {
        case TieBreak::ListOrder:
            break;
        case TieBreak::Reversed:
            std::reverse(priority.begin(), priority.end());
            break;
        case TieBreak::Rotated:
            if (count > 1) {
                std::rotate(priority.begin(), priority.begin() + 1, priority.end());
            }
            break;
    }
    // priority[k] = index scanned k-th; invert to a rank per index.
    std::vector<std::size_t> rank(count);
    for (std::size_t k = 0; k < count; ++k) {
        rank[priority[k]] = k;
    }
    return rank;
}

}  // namespace

std::optional<Extremal> find_extremal(const LogSurface& x, TieBreak tb) {
    const DivClass adjoint = adjoint_pullback_class(x);
    const std::vector<const Curve*> listed = x.non_contracted_curves();

    struct Candidate {
        std::size_t index;
        Rational degree;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < listed.size(); ++i) {
        // adjoint is orthogonal to the contracted span, so pairing with the
        // raw class computes the X-degree.
        const Rational degree = -intersect(x.lattice, adjoint, listed[i]->cls);
        if (degree > 0) {
            candidates.push_back({i, degree});
        }
    }
    if (candidates.empty()) {
        return std::nullopt;
    }

    if (picard_number(x) == 1) {
        Extremal out;
        out.kind = Extremal::Kind::FanoPoint;
        out.degree = std::max_element(candidates.begin(), candidates.end(),
                                      [](const Candidate& a, const Candidate& b) { return a.degree < b.degree; })
                         ->degree;
        return out;
    }

    const std::vector<std::size_t> rank = priority_of(listed.size(), tb);
    std::stable_sort(candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
        if (a.degree != b.degree) {
            return a.degree > b.degree;
        }
        return rank[a.index] < rank[b.index];
    });

    for (const Candidate& cand : candidates) {
        const Curve* curve = listed[cand.index];
        const DivClass pulled = mumford_pullback(x, curve->cls);
        const Rational square = intersect(x.lattice, pulled, curve->cls);
        if (square < 0) {
            Extremal out;
            out.kind = Extremal::Kind::Birational;
            out.curve = curve->name;
            out.degree = cand.degree;
            return out;
        }
        if (square == 0 && picard_number(x) == 2) {
            bool nef = true;
            for (const Curve* other : listed) {
                if (intersect(x.lattice, pulled, other->cls) < 0) {
                    nef = false;
                    break;
                }
            }
            if (nef) {
                Extremal out;
                out.kind = Extremal::Kind::FiberType;
                out.curve = curve->name;
                out.degree = cand.degree;
                out.fiber_class = pulled;
                return out;
            }
        }
        // Positive square at Picard number > 1, or an uncertifiable
        // square-zero class: try the next candidate.
    }
    throw AmbiguousConfiguration(
        "adjoint-negative curves exist but none certifies an extremal ray ('" +
        listed[candidates.front().index]->name + "' has degree " + format_rational(candidates.front().degree) +
        " and nonnegative self-intersection on X)");
}

MMPOutcome mmp_run(const LogSurface& x, TieBreak tb) {
    const DivClass initial_adjoint = adjoint_pullback_class(x);
    const std::set<std::string> initial_contracted = x.contracted;
    const int initial_rho = picard_number(x);

    MMPOutcome out;
    LogSurface current = x;
    for (;;) {
        const auto extremal = find_extremal(current, tb);
        if (!extremal) {
            out.kind = MMPOutcome::Kind::MinimalModel;
            break;
        }
        if (extremal->kind == Extremal::Kind::FanoPoint) {
            out.kind = MMPOutcome::Kind::MoriFiberSpaceOverPoint;
            break;
        }
        if (extremal->kind == Extremal::Kind::FiberType) {
            out.kind = MMPOutcome::Kind::MoriFiberSpaceOverCurve;
            out.fiber_class = extremal->fiber_class;
            break;
        }
        const int rho = picard_number(current);
        current = contract(current, {extremal->curve}, /*allow_boundary=*/true);
        out.trace.push_back(MMPStep{extremal->curve, extremal->degree, rho, rho - 1});
        if (static_cast<int>(out.trace.size()) > initial_rho - 1) {
            throw LogicError("mmp_run: contraction count exceeded rho - 1");
        }
    }
    out.final_surface = current;

    if (out.kind == MMPOutcome::Kind::MinimalModel) {
        MMPOutcome::Decomposition decomposition;
        decomposition.pullback = adjoint_pullback_class(current);

        // Solve K + Δ = pullback + Σ e_c C_c over the curves contracted by
        // this run, where C_c is taken as a class on the initial X.
        std::vector<const Curve*> contracted_here;
        for (const auto& curve : current.curves) {
            if (current.is_contracted(curve.name) && initial_contracted.count(curve.name) == 0) {
                contracted_here.push_back(&curve);
            }
        }
        const DivClass difference = initial_adjoint - decomposition.pullback;
        if (!contracted_here.empty()) {
            std::vector<DivClass> pulled;
            for (const Curve* c : contracted_here) {
                pulled.push_back(mumford_pullback(x, c->cls));
            }
            QMatrix gram = gram_of(x.lattice, pulled);
            QVector rhs;
            for (const Curve* c : contracted_here) {
                rhs.push_back(intersect(x.lattice, difference, c->cls));
            }
            const auto solved = solve_linear(gram, rhs);
            if (!solved) {
                throw LogicError("mmp_run: exceptional Gram matrix was singular");
            }
            DivClass reassembled = decomposition.pullback;
            for (std::size_t k = 0; k < contracted_here.size(); ++k) {
                if ((*solved)[k] < 0) {
                    throw LogicError("mmp_run: exceptional part of '" + contracted_here[k]->name +
                                     "' is negative; negativity lemma violated");
                }
                decomposition.exceptional[contracted_here[k]->name] = (*solved)[k];
                reassembled = reassembled + ((*solved)[k] * pulled[k]);
            }
            if (!(reassembled == initial_adjoint)) {
                throw LogicError("mmp_run: pullback + exceptional does not reassemble the adjoint class");
            }
        } else if (!(decomposition.pullback == initial_adjoint)) {
            throw LogicError("mmp_run: trivial run changed the adjoint class");
        }
        out.decomposition = std::move(decomposition);
    }
    return out;
}

std::vector<BoundCheckItem> check_extremal_bound(const MMPOutcome& outcome) {
    std::vector<BoundCheckItem> items;
    for (const auto& step : outcome.trace) {
        items.push_back(BoundCheckItem{"birational step " + step.contracted_curve,
                                       format_rational(step.degree),
                                       step.degree > 0 && step.degree <= 2});
    }
    const LogSurface& final_surface = outcome.final_surface;
    if (outcome.kind == MMPOutcome::Kind::MoriFiberSpaceOverCurve && outcome.fiber_class) {
        const DivClass adjoint = adjoint_pullback_class(final_surface);
        const Rational degree = -intersect(final_surface.lattice, adjoint, *outcome.fiber_class);
        items.push_back(BoundCheckItem{"fiber", format_rational(degree), degree > 0 && degree <= 2});
    }
    if (outcome.kind == MMPOutcome::Kind::MoriFiberSpaceOverPoint) {
        const DivClass adjoint = adjoint_pullback_class(final_surface);
        std::optional<Rational> least;
        for (const Curve* curve : final_surface.non_contracted_curves()) {
            const Rational degree = -intersect(final_surface.lattice, adjoint, curve->cls);
            if (degree > 0 && (!least || degree < *least)) {
                least = degree;
            }
        }
        const Rational k_square = pair_x(final_surface, final_surface.lattice.canonical,
                                         final_surface.lattice.canonical);
        const Rational limit = k_square == 9 ? Rational(3) : Rational(2);
        items.push_back(BoundCheckItem{"fano point",
                                       least ? format_rational(*least) : std::string("-"),
                                       least.has_value() && *least <= limit});
    }
    return items;
}

bool uniqueness_check(const LogSurface& x) {
    const TieBreak orders[] = {TieBreak::ListOrder, TieBreak::Reversed, TieBreak::Rotated};
    std::optional<MMPOutcome> reference;
    for (TieBreak tb : orders) {
        MMPOutcome outcome = mmp_run(x, tb);
        if (!reference) {
            reference = std::move(outcome);
            continue;
        }
        if (outcome.kind != reference->kind) {
            return false;
        }
        if (outcome.final_surface.contracted != reference->final_surface.contracted) {
            return false;
        }
        if (outcome.decomposition.has_value() != reference->decomposition.has_value()) {
            return false;
        }
        if (outcome.decomposition &&
            (!(outcome.decomposition->pullback == reference->decomposition->pullback) ||
             outcome.decomposition->exceptional != reference->decomposition->exceptional)) {
            return false;
        }
    }
    return true;
}

LogSurface canonical_model(const LogSurface& x) {
    const DivClass adjoint = adjoint_pullback_class(x);
    std::set<std::string> trivial;
    for (const Curve* curve : x.non_contracted_curves()) {
        const Rational degree = intersect(x.lattice, adjoint, curve->cls);
        if (degree < 0) {
            throw NotNefAndBig("canonical_model: adjoint class is negative against '" + curve->name + "'");
        }
        if (degree == 0) {
            trivial.insert(curve->name);
        }
    }
    if (intersect(x.lattice, adjoint, adjoint) <= 0) {
        throw NotNefAndBig("canonical_model: adjoint class is not big");
    }
    if (trivial.empty()) {
        return x;
    }

    bool was_rational = true;
    for (const auto& component : contracted_components(x)) {
        was_rational = was_rational && is_rational_singularity(x, component);
    }
    LogSurface result = contract(x, trivial, /*allow_boundary=*/true);
    if (was_rational) {
        for (const auto& component : contracted_components(result)) {
            if (!is_rational_singularity(result, component)) {
                throw LogicError("canonical_model: rationality was not preserved on component containing '" +
                                 component.front() + "'");
            }
        }
    }
    return result;
}

Rational nef_threshold(const LogSurface& x, const std::map<std::string, Rational>& delta_from,
                       const std::map<std::string, Rational>& delta_to) {
    const LogSurface start = with_boundary(x, delta_from);
    const LogSurface end = with_boundary(x, delta_to);
    const DivClass a0 = adjoint_pullback_class(start);
    const DivClass a1 = adjoint_pullback_class(end);

    Rational best(1);
    for (const Curve* curve : x.non_contracted_curves()) {
        const Rational at_start = intersect(x.lattice, a0, curve->cls);
        if (at_start < 0) {
            throw StartNotNef("nef_threshold: K + delta_from is negative against '" + curve->name + "'");
        }
        const Rational at_end = intersect(x.lattice, a1, curve->cls);
        if (at_end >= 0) {
            continue;
        }
        // (1-t)·at_start + t·at_end = 0  at  t = at_start / (at_start - at_end).
        const Rational bound = at_start / (at_start - at_end);
        best = std::min(best, bound);
    }
    return best;
}

}  // namespace logsurf
