// ops.hpp — Ladder/Pauli operator builders and coherent-state construction
// on the truncated qubit ⊗ mode-1 ⊗ mode-2 basis.

#pragma once

#include "rabi/basis.hpp"

namespace rabi {

enum class Pauli { X, Y, Z };

// Truncated lowering operator on one mode, identity on the other factors.
// Matrix elements <n-1| op |n> = sqrt(n). The only deviation from the exact
// commutation relation sits at the top Fock level: [a, a†] = I except the
// diagonal entry 1 - n_max at n = n_max - 1.
OperatorMatrix annihilation_op(const BasisSpec& basis, Mode which_mode);

// adjoint of annihilation_op.
OperatorMatrix creation_op(const BasisSpec& basis, Mode which_mode);

// Diagonal occupation operator n = op† op for one mode.
OperatorMatrix number_op(const BasisSpec& basis, Mode which_mode);

OperatorMatrix identity_op(const BasisSpec& basis);

// Pauli matrix in the sigma_z eigenbasis (|up>, |down>), tensored with the
// identity on both modes. The emitter states are the sigma_x eigenstates
// |g> = (|up> - |down>)/sqrt(2), |e> = (|up> + |down>)/sqrt(2).
OperatorMatrix pauli_op(const BasisSpec& basis, Pauli which);

// Single computational basis vector |qubit, n1, n2>.
QuantumState basis_state(const BasisSpec& basis, Qubit qubit, int n1, int n2);

// Truncation adequacy heuristic: alpha^2 + 6|alpha| + 10 <= n_max keeps the
// pre-normalization coherent norm deficit below 1e-8 for |alpha| <= 2.
bool coherent_cutoff_adequate(double alpha, int n_max);

// Product state |qubit> ⊗ |alpha1> ⊗ |alpha2> with real displacements,
// amplitudes <n|alpha> = exp(-alpha^2/2) alpha^n / sqrt(n!), renormalized to
// unit norm after truncation. Throws TruncationInsufficient when the
// adequacy heuristic fails unless skip_truncation_check is set.
QuantumState coherent_state(const BasisSpec& basis, double alpha1, double alpha2,
                            Qubit qubit, bool skip_truncation_check = false);

// <state| op |state>. Real to 1e-10 when op is Hermitian.
Complex expectation(const QuantumState& state, const OperatorMatrix& op);

// <s1|s2> (s1 conjugated).
Complex overlap(const QuantumState& s1, const QuantumState& s2);

} // namespace rabi
