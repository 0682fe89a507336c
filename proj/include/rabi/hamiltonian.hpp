// hamiltonian.hpp — Two-mode Rabi Hamiltonian in the local resonator basis
// and in the supermode basis, plus the supermode↔local observable mapping.
//
// Local basis (mode 1 ↦ a, mode 2 ↦ b):
//   H = ω a†a + (Ω/2)σx + (g/2)(a†+a)σz + ω b†b + J(a†b + b†a)
// Supermode basis (mode 1 ↦ A = (a+b)/√2, mode 2 ↦ B = (a−b)/√2):
//   H = (ω+J)A†A + (ω−J)B†B + (Ω/2)σx + g/(2√2)(A+A†+B+B†)σz

#pragma once

#include "rabi/basis.hpp"

namespace rabi {

// Physical parameters in units of the resonator frequency (omega = 1 by
// convention). Both supermode frequencies omega ± J must stay positive.
struct ModelParams {
    double omega = 1.0;   // resonator frequency
    double Omega = 0.1;   // emitter level splitting
    double g = 0.0;       // emitter-resonator coupling
    double J = 0.0;       // resonator-resonator hopping

    // Throws std::invalid_argument on non-finite values, omega <= 0,
    // Omega < 0, g < 0, or omega - |J| <= 0.
    void validate() const;
};

OperatorMatrix build_local_hamiltonian(const ModelParams& p, const BasisSpec& basis);

OperatorMatrix build_supermode_hamiltonian(const ModelParams& p, const BasisSpec& basis);

// Dispatches on basis.kind.
OperatorMatrix build_hamiltonian(const ModelParams& p, const BasisSpec& basis);

// Local-resonator number operators expressed on a supermode basis, from
// a = (A+B)/√2 and b = (A−B)/√2:
//   a†a = (A†+B†)(A+B)/2,   b†b = (A†−B†)(A−B)/2.
enum class LocalResonator { A, B };
OperatorMatrix local_number_op_in_supermode_basis(const BasisSpec& basis, LocalResonator which);

// Z2 symmetry of the model: P = σx ⊗ (−1)^{n1+n2}. Commutes with both
// Hamiltonian builders; used to resolve (near-)degenerate ground states.
OperatorMatrix parity_op(const BasisSpec& basis);

} // namespace rabi
