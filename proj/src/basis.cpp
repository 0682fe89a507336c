#include "rabi/basis.hpp"

#include "rabi/errors.hpp"

#include <stdexcept>
#include <string>

namespace rabi {

void BasisSpec::validate() const {
    if (n1_max < 1 || n2_max < 1) {
        throw std::invalid_argument("BasisSpec: Fock cutoffs must be >= 1, got n1_max=" +
                                    std::to_string(n1_max) + " n2_max=" + std::to_string(n2_max));
    }
}

void require_same_basis(const BasisSpec& lhs, const BasisSpec& rhs, const char* where) {
    if (!(lhs == rhs)) {
        throw BasisMismatch(std::string(where) + ": operands live in different bases");
    }
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
    require_same_basis(lhs.basis, rhs.basis, "operator*");
    return {lhs.basis, SparseMatrixC(lhs.matrix * rhs.matrix), false};
}

OperatorMatrix operator+(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
    require_same_basis(lhs.basis, rhs.basis, "operator+");
    return {lhs.basis, SparseMatrixC(lhs.matrix + rhs.matrix), lhs.hermitian && rhs.hermitian};
}

OperatorMatrix operator-(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
    require_same_basis(lhs.basis, rhs.basis, "operator-");
    return {lhs.basis, SparseMatrixC(lhs.matrix - rhs.matrix), lhs.hermitian && rhs.hermitian};
}

OperatorMatrix operator*(Complex scale, const OperatorMatrix& op) {
    return {op.basis, SparseMatrixC(scale * op.matrix),
            op.hermitian && scale.imag() == 0.0};
}

OperatorMatrix operator*(double scale, const OperatorMatrix& op) {
    return {op.basis, SparseMatrixC(scale * op.matrix), op.hermitian};
}

QuantumState apply(const OperatorMatrix& op, const QuantumState& state) {
    require_same_basis(op.basis, state.basis, "apply");
    return {state.basis, op.matrix * state.amplitudes};
}

} // namespace rabi
