// exact.hpp — Numerically converged ground state of the truncated two-mode
// Rabi Hamiltonian, with automatic Fock-cutoff convergence.

#pragma once

#include "rabi/basis.hpp"
#include "rabi/hamiltonian.hpp"

#include <utility>
#include <vector>

namespace rabi {

struct TruncationConfig {
    int n_start = 12;          // initial per-mode cutoff
    int n_cap = 96;            // hard ceiling (doubling schedule 12→24→48→96)
    double energy_tol = 1e-10; // convergence threshold between successive cutoffs

    // Throws std::invalid_argument unless 1 <= n_start <= n_cap and
    // energy_tol > 0.
    void validate() const;
};

struct GroundStateResult {
    double energy = 0.0;
    QuantumState state;        // normalized; largest-magnitude amplitude real positive
    int cutoff_used = 0;
    bool converged = false;
    bool near_degenerate = false;  // gap < 1e-12: parity-even member selected
    std::vector<std::pair<int, double>> energy_history;  // (cutoff, energy)
};

// Lowest eigenpair at the smallest cutoff n where |E(n) - E(n_prev)| <
// energy_tol, doubling the per-mode cutoff from n_start. If the cap is
// reached first, the best-effort result is returned with converged=false
// (no throw); downstream consumers that need convergence throw NotConverged.
GroundStateResult ground_state(const ModelParams& p, const TruncationConfig& cfg,
                               BasisKind kind);

// k lowest eigenvalues, ascending, converged over the same doubling ladder
// (every eigenvalue must settle within energy_tol). Throws NotConverged if
// the cap is reached first.
std::vector<double> low_spectrum(const ModelParams& p, const TruncationConfig& cfg, int k,
                                 BasisKind kind = BasisKind::Local);

// Zero-padded copy of `state` in a basis with equal-or-larger cutoffs of the
// same kind. Used to warm-start the eigensolver along the cutoff ladder.
QuantumState embed_state(const QuantumState& state, const BasisSpec& larger);

} // namespace rabi
