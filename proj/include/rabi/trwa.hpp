// trwa.hpp — Transformed rotating-wave approximation for the two-mode Rabi
// model: self-consistent displacements (xi_a, xi_b) and vacuum factor eta,
// the closed-form ground-state energy, the displaced-coherent ground state,
// and the plain-RWA baseline.
//
// The self-consistency system is
//   xi_a = sqrt(2) g / (4 [(omega+J) - eta*Omega])
//   xi_b = sqrt(2) g / (4 [(omega-J) - eta*Omega])
//   eta  = exp(-2 (xi_a^2 + xi_b^2))
// solved as a scalar root problem in eta on (0, 1]: r(eta) = eta -
// exp(-2(xi_a(eta)^2 + xi_b(eta)^2)) is strictly increasing whenever both
// denominators stay positive on the whole interval, so the root is unique
// and bracketed by r(0) < 0 <= r(1).

#pragma once

#include "rabi/basis.hpp"
#include "rabi/hamiltonian.hpp"

#include <utility>

namespace rabi {

struct TrwaSolution {
    double xi_a = 0.0;      // displacement of supermode A
    double xi_b = 0.0;      // displacement of supermode B
    double eta = 1.0;       // vacuum average, in (0, 1]
    double energy = 0.0;    // closed-form ground-state energy
    double residual = 0.0;  // |eta - exp(-2(xi_a^2+xi_b^2))| at convergence
    int iterations = 0;
};

enum class TrwaMethod {
    Hybrid,            // bisection bracket refined by damped fixed-point polish
    Bisection,         // pure bisection on r(eta)
    DampedFixedPoint,  // eta <- (1-d) eta + d exp(...), d = 0.5, from eta = 1
};

// Solves the self-consistency system. Requires (omega - J) - Omega above the
// denominator guard at eta = 1 (sufficient for a unique positive-denominator
// branch); throws SingularDenominator otherwise or whenever an iterate
// drives a denominator below the guard, and NoConvergence if max_iter is
// exhausted before the residual drops below tol.
TrwaSolution solve_self_consistent(const ModelParams& p, double tol = 1e-13,
                                   int max_iter = 500,
                                   TrwaMethod method = TrwaMethod::Hybrid);

// Closed-form ground-state energy from the solution fields:
//   E = -eta*Omega/2 + (omega+J) xi_a^2 - g xi_a/sqrt(2)
//                    + (omega-J) xi_b^2 - g xi_b/sqrt(2)
double trwa_energy(const TrwaSolution& sol, const ModelParams& p);

// Displaced-coherent ground state on a supermode basis:
//   |G_T> = ( |-xi_a, -xi_b, up> - |+xi_a, +xi_b, down> ) / sqrt(2)
// Throws TruncationInsufficient when the cutoffs cannot hold the
// displacements.
QuantumState build_trwa_state(const TrwaSolution& sol, const BasisSpec& basis);

// RWA baseline: energy -Omega/2 and state |0,0> ⊗ |g>, independent of g and
// J. Valid on either basis kind (the two-mode vacuum is rotation invariant).
std::pair<double, QuantumState> rwa_ground(const ModelParams& p, const BasisSpec& basis);

} // namespace rabi
