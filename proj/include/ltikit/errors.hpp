#pragma once

#include <stdexcept>
#include <string>

namespace ltikit {

// Base class for all domain and numeric errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct ImproperTF : Error { using Error::Error; };
struct NonConjugateRoots : Error { using Error::Error; };
struct NonStrictlyProper : Error { using Error::Error; };
struct NonPositive : Error { using Error::Error; };
struct PoleOnGrid : Error { using Error::Error; };
struct SequenceTooShort : Error { using Error::Error; };
struct BadRange : Error { using Error::Error; };
struct DegenerateSignal : Error { using Error::Error; };
struct OriginEvaluation : Error { using Error::Error; };
struct BadBin : Error { using Error::Error; };
struct ZeroLeadingFeedback : Error { using Error::Error; };
struct NyquistViolation : Error { using Error::Error; };
struct ZeroArgument : Error { using Error::Error; };
struct BadPole : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };
struct DelayFreeLoop : Error { using Error::Error; };
struct UnsupportedTopology : Error { using Error::Error; };
struct NetlistParse : Error { using Error::Error; };

}  // namespace ltikit
