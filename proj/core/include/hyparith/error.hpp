#pragma once

#include <stdexcept>
#include <string>

namespace hyparith {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file or string.
struct ParseError : Error {
    using Error::Error;
};

/// Structurally well-formed input violating a documented invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// The requested computation needs more input precision to be certified.
struct InsufficientPrecision : Error {
    using Error::Error;
};

/// Integer-relation search exhausted the degree/height budget. Distinct from
/// InsufficientPrecision: the input was precise enough, no relation exists
/// within the bounds.
struct NotRecognized : Error {
    using Error::Error;
};

/// Interval Newton contraction test failed; no certificate can be issued.
struct NoCertificate : Error {
    using Error::Error;
};

/// A rational prime dividing the index [O_K : Z[theta]] was hit. The order
/// Z[theta] cannot decide valuations there.
struct UnsupportedPrime : Error {
    using Error::Error;
};

/// An interval contains zero but is too wide to decide a predicate.
/// Callers retry at higher precision.
struct Inconclusive : Error {
    using Error::Error;
};

/// Argument outside the operation's domain (z in {0,1}, zero polynomial, ...).
struct DegenerateInput : Error {
    using Error::Error;
};

/// Lattice rows (or matrix input) not of full rank.
struct RankError : Error {
    using Error::Error;
};

/// Hilbert-symbol extraction found no irreducible non-elementary pair.
struct NoSuitablePair : Error {
    using Error::Error;
};

/// A supposedly impossible state; indicates a bug, never a data condition.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace hyparith
