// lanczos.hpp — Lowest eigenpairs of a sparse Hermitian matrix.
//
// Restarted Lanczos with full reorthogonalization and deflation, suited to
// the truncated Rabi Hamiltonians here (well separated extremal eigenvalues,
// dims up to a few tens of thousands). Small problems fall back to a dense
// eigendecomposition. Deterministic: start vectors come from a fixed seed,
// so repeated runs give bit-identical results.

#pragma once

#include "rabi/basis.hpp"

#include <cstdint>

namespace rabi {

struct LanczosOptions {
    // Absolute residual target ||H x - lambda x||; floored internally at the
    // machine-precision scale of the matrix.
    double tol = 1e-9;
    int max_basis = 256;        // Krylov vectors kept before a restart
    int max_restarts = 48;
    std::uint64_t seed = 0x2545f4914f6cdd1dULL;
};

struct EigenPairs {
    Eigen::VectorXd values;     // ascending
    Eigen::MatrixXcd vectors;   // matching columns, unit norm
};

// k lowest eigenpairs of Hermitian H. `guess` optionally seeds the first
// Krylov space (e.g. the eigenvector from a coarser truncation). Throws
// rabi::Error if the residual target cannot be met within the restart
// budget, std::invalid_argument on bad k.
EigenPairs lowest_eigenpairs(const SparseMatrixC& H, int k,
                             const LanczosOptions& opts = {},
                             const Eigen::VectorXcd* guess = nullptr);

} // namespace rabi
