#include "rabi/hamiltonian.hpp"

#include "rabi/errors.hpp"
#include "rabi/ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rabi {

void ModelParams::validate() const {
    if (!std::isfinite(omega) || !std::isfinite(Omega) || !std::isfinite(g) || !std::isfinite(J)) {
        throw std::invalid_argument("ModelParams: all parameters must be finite");
    }
    if (omega <= 0.0) {
        throw std::invalid_argument("ModelParams: omega must be > 0");
    }
    if (Omega < 0.0) {
        throw std::invalid_argument("ModelParams: Omega must be >= 0");
    }
    if (g < 0.0) {
        throw std::invalid_argument("ModelParams: g must be >= 0");
    }
    if (omega - std::abs(J) <= 0.0) {
        throw std::invalid_argument("ModelParams: omega - |J| must be > 0 "
                                    "(supermode frequency omega-J would not be positive)");
    }
}

OperatorMatrix build_local_hamiltonian(const ModelParams& p, const BasisSpec& basis) {
    p.validate();
    basis.validate();
    if (basis.kind != BasisKind::Local) {
        throw BasisMismatch("build_local_hamiltonian: basis kind must be Local");
    }
    const auto a = annihilation_op(basis, Mode::One);
    const auto b = annihilation_op(basis, Mode::Two);
    const auto a_dag = a.adjoint();
    const auto b_dag = b.adjoint();
    const auto sx = pauli_op(basis, Pauli::X);
    const auto sz = pauli_op(basis, Pauli::Z);

    OperatorMatrix h = p.omega * (a_dag * a)
                     + (p.Omega / 2.0) * sx
                     + (p.g / 2.0) * ((a_dag + a) * sz)
                     + p.omega * (b_dag * b)
                     + p.J * (a_dag * b + b_dag * a);
    h.hermitian = true;
    return h;
}

OperatorMatrix build_supermode_hamiltonian(const ModelParams& p, const BasisSpec& basis) {
    p.validate();
    basis.validate();
    if (basis.kind != BasisKind::Supermode) {
        throw BasisMismatch("build_supermode_hamiltonian: basis kind must be Supermode");
    }
    const auto A = annihilation_op(basis, Mode::One);
    const auto B = annihilation_op(basis, Mode::Two);
    const auto A_dag = A.adjoint();
    const auto B_dag = B.adjoint();
    const auto sx = pauli_op(basis, Pauli::X);
    const auto sz = pauli_op(basis, Pauli::Z);

    OperatorMatrix h = (p.omega + p.J) * (A_dag * A)
                     + (p.omega - p.J) * (B_dag * B)
                     + (p.Omega / 2.0) * sx
                     + (p.g / (2.0 * std::sqrt(2.0))) * ((A + A_dag + B + B_dag) * sz);
    h.hermitian = true;
    return h;
}

OperatorMatrix build_hamiltonian(const ModelParams& p, const BasisSpec& basis) {
    return basis.kind == BasisKind::Local ? build_local_hamiltonian(p, basis)
                                          : build_supermode_hamiltonian(p, basis);
}

OperatorMatrix local_number_op_in_supermode_basis(const BasisSpec& basis, LocalResonator which) {
    basis.validate();
    if (basis.kind != BasisKind::Supermode) {
        throw BasisMismatch("local_number_op_in_supermode_basis: basis kind must be Supermode");
    }
    const auto A = annihilation_op(basis, Mode::One);
    const auto B = annihilation_op(basis, Mode::Two);
    const OperatorMatrix mix = which == LocalResonator::A ? A + B : A - B;
    OperatorMatrix n = 0.5 * (mix.adjoint() * mix);
    n.hermitian = true;
    return n;
}

OperatorMatrix parity_op(const BasisSpec& basis) {
    basis.validate();
    std::vector<Eigen::Triplet<Complex>> trips;
    trips.reserve(static_cast<std::size_t>(basis.dim()));
    for (int n1 = 0; n1 < basis.n1_max; ++n1) {
        for (int n2 = 0; n2 < basis.n2_max; ++n2) {
            const double sign = (n1 + n2) % 2 == 0 ? 1.0 : -1.0;
            trips.emplace_back(basis.index(0, n1, n2), basis.index(1, n1, n2), sign);
            trips.emplace_back(basis.index(1, n1, n2), basis.index(0, n1, n2), sign);
        }
    }
    SparseMatrixC m(basis.dim(), basis.dim());
    m.setFromTriplets(trips.begin(), trips.end());
    m.makeCompressed();
    return {basis, std::move(m), true};
}

} // namespace rabi
