#include "logsurf/zariski.hpp"

#include <algorithm>

#include "logsurf/errors.hpp"

namespace logsurf {

ZariskiDecomposition zariski_decompose(const LogSurface& x, const DivClass& d) {
    // Work with the well-defined class on X.
    const DivClass d_x = mumford_pullback(x, d);

    // X-level pullbacks of the listed curves, fixed once.
    const std::vector<const Curve*> listed = x.non_contracted_curves();
    std::vector<DivClass> pulled;
    pulled.reserve(listed.size());
    for (const Curve* c : listed) {
        pulled.push_back(mumford_pullback(x, c->cls));
    }
    auto deg_against = [&](const DivClass& cls, std::size_t i) {
        // cls is orthogonal to the contracted span, so pairing with the raw
        // curve class equals the X-pairing.
        return intersect(x.lattice, cls, listed[i]->cls);
    };

    std::vector<bool> in_support(listed.size(), false);
    std::vector<std::size_t> support;
    std::vector<Rational> coefficients;
    DivClass p = d_x;

    for (;;) {
        bool grew = false;
        for (std::size_t i = 0; i < listed.size(); ++i) {
            if (!in_support[i] && deg_against(p, i) < 0) {
                in_support[i] = true;
                support.push_back(i);
                grew = true;
            }
        }
        if (!grew) {
            break;
        }
        std::sort(support.begin(), support.end());

        std::vector<std::string> names;
        std::vector<DivClass> support_pulled;
        for (std::size_t i : support) {
            names.push_back(listed[i]->name);
            support_pulled.push_back(pulled[i]);
        }
        QMatrix gram = gram_of(x.lattice, support_pulled);
        const auto pivots = symmetric_pivots(gram);
        bool definite = pivots.has_value();
        if (definite) {
            for (const auto& pv : *pivots) {
                definite = definite && pv < 0;
            }
        }
        if (!definite) {
            throw NotPseudoEffective(
                "class is not pseudo-effective relative to the curve list: support {" +
                    [&] {
                        std::string s;
                        for (std::size_t k = 0; k < names.size(); ++k) {
                            s += (k ? ", " : "") + names[k];
                        }
                        return s;
                    }() +
                    "} is not negative definite",
                names);
        }

        QVector rhs;
        for (std::size_t i : support) {
            rhs.push_back(deg_against(d_x, i));
        }
        const auto solved = solve_linear(gram, rhs);
        if (!solved) {
            throw LogicError("zariski_decompose: negative definite support Gram was singular");
        }
        coefficients = *solved;
        for (std::size_t k = 0; k < coefficients.size(); ++k) {
            if (coefficients[k] < 0) {
                throw NotPseudoEffective("class is not pseudo-effective relative to the curve list: "
                                         "solved coefficient of '" +
                                             names[k] + "' is negative",
                                         names);
            }
        }
        p = d_x;
        for (std::size_t k = 0; k < support.size(); ++k) {
            p = p - (coefficients[k] * pulled[support[k]]);
        }
    }

    ZariskiDecomposition out;
    out.positive = p;
    std::vector<DivClass> support_pulled;
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (coefficients[k] == 0) {
            continue;
        }
        out.negative[listed[support[k]]->name] = coefficients[k];
        out.support.push_back(listed[support[k]]->name);
        support_pulled.push_back(pulled[support[k]]);
    }
    out.support_gram = gram_of(x.lattice, support_pulled);
    for (std::size_t k = 0; k < out.support_gram.size(); ++k) {
        QMatrix minor(k + 1, QVector(k + 1));
        for (std::size_t i = 0; i <= k; ++i) {
            for (std::size_t j = 0; j <= k; ++j) {
                minor[i][j] = out.support_gram[i][j];
            }
        }
        out.support_minors.push_back(determinant(minor));
    }
    return out;
}

}  // namespace logsurf
