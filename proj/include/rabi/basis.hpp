// basis.hpp — Truncated qubit ⊗ mode-1 ⊗ mode-2 basis, states, and operator carrier
//
// Index convention (fixed, golden fixtures depend on it):
//   index = qubit*n1_max*n2_max + n1*n2_max + n2
// with qubit 0 = |up>, 1 = |down> (sigma_z eigenbasis) and n1, n2 the Fock
// occupations of modes 1 and 2. Mode 1/2 denote (a, b) in a Local basis and
// the supermodes (A, B) in a Supermode basis.
//
// All types are immutable value types once built; every operation on them is
// a pure function, so concurrent use needs no synchronization.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <array>
#include <complex>

namespace rabi {

using Complex = std::complex<double>;
using SparseMatrixC = Eigen::SparseMatrix<Complex>;

enum class BasisKind { Local, Supermode };
enum class Mode { One, Two };
enum class Qubit { Up, Down };

struct BasisSpec {
    int n1_max = 1;               // Fock cutoff, mode 1 (kept states 0..n1_max-1)
    int n2_max = 1;               // Fock cutoff, mode 2
    BasisKind kind = BasisKind::Local;

    int dim() const noexcept { return 2 * n1_max * n2_max; }

    int index(int qubit, int n1, int n2) const noexcept {
        return qubit * n1_max * n2_max + n1 * n2_max + n2;
    }

    // Inverse of index(): {qubit, n1, n2}.
    std::array<int, 3> unpack(int idx) const noexcept {
        const int block = n1_max * n2_max;
        const int qubit = idx / block;
        const int rem = idx - qubit * block;
        return {qubit, rem / n2_max, rem % n2_max};
    }

    bool operator==(const BasisSpec&) const = default;

    // Throws std::invalid_argument on non-positive cutoffs.
    void validate() const;
};

// Throws BasisMismatch unless the two specs are identical.
void require_same_basis(const BasisSpec& lhs, const BasisSpec& rhs, const char* where);

struct QuantumState {
    BasisSpec basis;
    Eigen::VectorXcd amplitudes;

    double norm() const { return amplitudes.norm(); }

    QuantumState normalized() const {
        QuantumState out{basis, amplitudes / amplitudes.norm()};
        return out;
    }
};

// Entrywise operator carrier. Storage is sparse; dense() materializes for
// entrywise checks. `hermitian` is a builder promise, verified in tests at
// the 1e-12 entrywise level.
struct OperatorMatrix {
    BasisSpec basis;
    SparseMatrixC matrix;
    bool hermitian = false;

    Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(matrix); }

    OperatorMatrix adjoint() const {
        return {basis, SparseMatrixC(matrix.adjoint()), hermitian};
    }
};

// Basic operator arithmetic; operands must share a basis.
OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
OperatorMatrix operator+(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
OperatorMatrix operator-(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
OperatorMatrix operator*(Complex scale, const OperatorMatrix& op);
OperatorMatrix operator*(double scale, const OperatorMatrix& op);

// Matrix-vector application.
QuantumState apply(const OperatorMatrix& op, const QuantumState& state);

} // namespace rabi
