#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logsurf {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (surface files, rational literals, class expressions).
struct ParseError : Error {
    using Error::Error;
};

/// A divisor class was paired with a lattice of a different rank.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A curve collection that must be negative definite is not.
struct NotNegativeDefinite : Error {
    using Error::Error;
};

/// A blow-up would drive some arithmetic genus below zero.
struct InvalidMultiplicity : Error {
    using Error::Error;
};

/// blow_down was asked to contract a curve that is not a contractible
/// (-1)-curve in the required position.
struct NotMinusOneCurve : Error {
    using Error::Error;
};

/// Generic violated precondition on an operation argument.
struct PreconditionError : Error {
    using Error::Error;
};

struct ThetaNotEffective : Error {
    using Error::Error;
};

struct NotNefOnList : Error {
    using Error::Error;
};

struct NotConnected : Error {
    using Error::Error;
};

struct NotNefAndBig : Error {
    using Error::Error;
};

struct StartNotNef : Error {
    using Error::Error;
};

/// The listed curve data cannot certify an extremal ray.
struct AmbiguousConfiguration : Error {
    using Error::Error;
};

/// Internal consistency violation; indicates a bug or a combinatorially
/// unrealizable hand-authored input.
struct LogicError : Error {
    using Error::Error;
};

/// A class is not pseudo-effective relative to the supplied curve list.
/// Carries the support set that witnessed the failure.
struct NotPseudoEffective : Error {
    NotPseudoEffective(const std::string& message, std::vector<std::string> support_names)
        : Error(message), support(std::move(support_names)) {}

    std::vector<std::string> support;
};

}  // namespace logsurf
