#ifndef TRIGPOT_ERRORS_HPP
#define TRIGPOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trigpot {

// Base for all arithmetic / contract violations that callers may want to catch.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Read of a series coefficient below the known range, or a series too short
// to represent what was asked.
struct TruncationError : MathError {
    using MathError::MathError;
};

// Antiderivative would need a log term: the t^-1 coefficient is nonzero.
// The offending coefficient is carried as its serialized form.
struct LogObstructionError : MathError {
    explicit LogObstructionError(std::string coeff)
        : MathError("logarithmic obstruction: nonzero t^-1 coefficient " + coeff),
          offending_coefficient(std::move(coeff)) {}
    std::string offending_coefficient;
};

// Recomputation at doubled truncation order gave a different value.
struct StabilityError : MathError {
    using MathError::MathError;
};

// P-finite evaluation hit a vanishing leading coefficient.
struct SingularIndexError : MathError {
    using MathError::MathError;
};

// A root would require a second independent square root over the base field.
struct TowerOverflowError : MathError {
    using MathError::MathError;
};

// A certification routine could not establish the claim (honest failure;
// callers typically raise n0 and retry, or report).
struct CertificationError : MathError {
    using MathError::MathError;
};

}  // namespace trigpot

#endif
