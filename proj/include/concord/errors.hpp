#pragma once

#include <stdexcept>
#include <string>

namespace concord {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inputs outside an operation's stated domain.
struct DomainError : Error { using Error::Error; };

// Inputs that violate a coprimality precondition.
struct CoprimalityError : DomainError { using DomainError::DomainError; };

// Surgery slopes outside the supported 1/n family.
struct UnsupportedSlope : Error { using Error::Error; };

// The exact and floating evaluation paths of the moduli dimension disagree,
// or the floating path sits too far from an integer.
struct EvaluationDisagreement : Error { using Error::Error; };

// Malformed matrix or linking data.
struct ShapeError : Error { using Error::Error; };

// Iterated-double depth outside a construction's range.
struct DepthError : Error { using Error::Error; };

// Malformed certification family.
struct InvalidFamily : Error { using Error::Error; };

// An all-zero coefficient vector.
struct ZeroCombination : Error { using Error::Error; };

// Bad CLI/config input.
struct ConfigError : Error { using Error::Error; };

} // namespace concord
