#pragma once

#include <stdexcept>
#include <string>

namespace fgpal {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A letter refers to a generator outside the declared rank.
struct LetterOutOfRangeError : Error {
    using Error::Error;
};

/// Two words from free groups of different ranks were combined.
struct RankMismatchError : Error {
    using Error::Error;
};

/// Letter-level concatenation would cancel at the seam, so the
/// concatenation hypothesis does not hold.
struct CancellationAtSeamError : Error {
    using Error::Error;
};

struct NotCyclicallyReducedError : Error {
    using Error::Error;
};

struct EmptyWordError : Error {
    using Error::Error;
};

/// |X| and |Y| have a common factor, so no primitive has these exponent sums.
struct NotCoprimeError : Error {
    using Error::Error;
};

struct ZeroPairError : Error {
    using Error::Error;
};

/// X + Y is even where an odd total is required.
struct EvenSumError : Error {
    using Error::Error;
};

/// X + Y is odd where an even total is required.
struct OddSumError : Error {
    using Error::Error;
};

/// AY - BX is not +1 or -1.
struct BadDeterminantError : Error {
    using Error::Error;
};

struct NotPrimitiveError : Error {
    using Error::Error;
};

/// A structural precondition of the called operation does not hold.
struct PreconditionViolatedError : Error {
    using Error::Error;
};

/// Malformed word text.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace fgpal
