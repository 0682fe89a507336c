// errors.hpp — Exception hierarchy for the two-mode Rabi library

#pragma once

#include <stdexcept>
#include <string>

namespace rabi {

// Base class for all library failures. std::invalid_argument is still used
// for plain precondition violations on caller input (bad cutoffs, bad grids).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in different bases (cutoffs or basis kind differ).
struct BasisMismatch : Error {
    using Error::Error;
};

// A coherent displacement does not fit in the requested Fock cutoff.
struct TruncationInsufficient : Error {
    using Error::Error;
};

// A self-consistency denominator (omega±J) − eta*Omega fell below the guard.
struct SingularDenominator : Error {
    using Error::Error;
};

// Fixed-point iteration exhausted max_iter without meeting the residual tol.
struct NoConvergence : Error {
    using Error::Error;
};

// The truncation ladder hit its cutoff cap before the energy settled.
struct NotConverged : Error {
    using Error::Error;
};

// The sensitivity linear system is ill-conditioned (near a denominator pole).
struct SingularJacobian : Error {
    using Error::Error;
};

// A measured value lies outside the invertible range of the detection curve.
struct OutOfRange : Error {
    using Error::Error;
};

// The detection curve failed its monotonicity spot-check on the bracket.
struct NonMonotoneBracket : Error {
    using Error::Error;
};

} // namespace rabi
