#include "logsurf/rational.hpp"

#include <cctype>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || (!den.empty() && !all_digits(den)) ||
        (den.empty() && body.find('/') != std::string_view::npos)) {
        throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    }
    const BigInt p{std::string(num)};
    const BigInt q = den.empty() ? BigInt(1) : BigInt{std::string(den)};
    if (q == 0) {
        throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
    }
    Rational value(p, q);
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
    if (denominator(value) == 1) {
        return numerator(value).str();
    }
    return numerator(value).str() + "/" + denominator(value).str();
}

bool is_integer(const Rational& value) {
    return denominator(value) == 1;
}

BigInt to_integer(const Rational& value) {
    if (!is_integer(value)) {
        throw LogicError("to_integer on non-integral rational " + format_rational(value));
    }
    return numerator(value);
}

}  // namespace logsurf
