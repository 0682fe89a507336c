#include "rabi/ops.hpp"

#include "rabi/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rabi {

namespace {

using Triplet = Eigen::Triplet<Complex>;

OperatorMatrix from_triplets(const BasisSpec& basis, const std::vector<Triplet>& trips,
                             bool hermitian) {
    SparseMatrixC m(basis.dim(), basis.dim());
    m.setFromTriplets(trips.begin(), trips.end());
    m.makeCompressed();
    return {basis, std::move(m), hermitian};
}

} // namespace

OperatorMatrix annihilation_op(const BasisSpec& basis, Mode which_mode) {
    basis.validate();
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(basis.dim()));
    for (int q = 0; q < 2; ++q) {
        for (int n1 = 0; n1 < basis.n1_max; ++n1) {
            for (int n2 = 0; n2 < basis.n2_max; ++n2) {
                if (which_mode == Mode::One && n1 > 0) {
                    trips.emplace_back(basis.index(q, n1 - 1, n2), basis.index(q, n1, n2),
                                       std::sqrt(static_cast<double>(n1)));
                } else if (which_mode == Mode::Two && n2 > 0) {
                    trips.emplace_back(basis.index(q, n1, n2 - 1), basis.index(q, n1, n2),
                                       std::sqrt(static_cast<double>(n2)));
                }
            }
        }
    }
    return from_triplets(basis, trips, false);
}

OperatorMatrix creation_op(const BasisSpec& basis, Mode which_mode) {
    return annihilation_op(basis, which_mode).adjoint();
}

OperatorMatrix number_op(const BasisSpec& basis, Mode which_mode) {
    basis.validate();
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(basis.dim()));
    for (int q = 0; q < 2; ++q) {
        for (int n1 = 0; n1 < basis.n1_max; ++n1) {
            for (int n2 = 0; n2 < basis.n2_max; ++n2) {
                const double n = which_mode == Mode::One ? n1 : n2;
                if (n > 0) {
                    const int i = basis.index(q, n1, n2);
                    trips.emplace_back(i, i, n);
                }
            }
        }
    }
    return from_triplets(basis, trips, true);
}

OperatorMatrix identity_op(const BasisSpec& basis) {
    basis.validate();
    SparseMatrixC m(basis.dim(), basis.dim());
    m.setIdentity();
    return {basis, std::move(m), true};
}

OperatorMatrix pauli_op(const BasisSpec& basis, Pauli which) {
    basis.validate();
    // 2x2 blocks in the (up, down) ordering.
    Complex m00{}, m01{}, m10{}, m11{};
    switch (which) {
        case Pauli::X: m01 = 1.0; m10 = 1.0; break;
        case Pauli::Y: m01 = Complex(0.0, -1.0); m10 = Complex(0.0, 1.0); break;
        case Pauli::Z: m00 = 1.0; m11 = -1.0; break;
    }
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(basis.dim()) * 2);
    for (int n1 = 0; n1 < basis.n1_max; ++n1) {
        for (int n2 = 0; n2 < basis.n2_max; ++n2) {
            const int iu = basis.index(0, n1, n2);
            const int id = basis.index(1, n1, n2);
            if (m00 != 0.0) trips.emplace_back(iu, iu, m00);
            if (m01 != 0.0) trips.emplace_back(iu, id, m01);
            if (m10 != 0.0) trips.emplace_back(id, iu, m10);
            if (m11 != 0.0) trips.emplace_back(id, id, m11);
        }
    }
    return from_triplets(basis, trips, true);
}

QuantumState basis_state(const BasisSpec& basis, Qubit qubit, int n1, int n2) {
    basis.validate();
    if (n1 < 0 || n1 >= basis.n1_max || n2 < 0 || n2 >= basis.n2_max) {
        throw std::invalid_argument("basis_state: occupation outside the truncated basis");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(basis.dim());
    amps(basis.index(qubit == Qubit::Up ? 0 : 1, n1, n2)) = 1.0;
    return {basis, std::move(amps)};
}

bool coherent_cutoff_adequate(double alpha, int n_max) {
    const double a = std::abs(alpha);
    return a * a + 6.0 * a + 10.0 <= static_cast<double>(n_max);
}

namespace {

// <n|alpha> for n = 0..n_max-1 via the stable recurrence c_n = c_{n-1} alpha/sqrt(n).
Eigen::VectorXd coherent_amplitudes(double alpha, int n_max) {
    Eigen::VectorXd c(n_max);
    c(0) = std::exp(-alpha * alpha / 2.0);
    for (int n = 1; n < n_max; ++n) {
        c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    }
    return c;
}

} // namespace

QuantumState coherent_state(const BasisSpec& basis, double alpha1, double alpha2,
                            Qubit qubit, bool skip_truncation_check) {
    basis.validate();
    if (!skip_truncation_check) {
        if (!coherent_cutoff_adequate(alpha1, basis.n1_max)) {
            throw TruncationInsufficient("coherent_state: mode-1 cutoff " +
                                         std::to_string(basis.n1_max) +
                                         " too small for displacement " + std::to_string(alpha1));
        }
        if (!coherent_cutoff_adequate(alpha2, basis.n2_max)) {
            throw TruncationInsufficient("coherent_state: mode-2 cutoff " +
                                         std::to_string(basis.n2_max) +
                                         " too small for displacement " + std::to_string(alpha2));
        }
    }
    const Eigen::VectorXd c1 = coherent_amplitudes(alpha1, basis.n1_max);
    const Eigen::VectorXd c2 = coherent_amplitudes(alpha2, basis.n2_max);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(basis.dim());
    const int q = qubit == Qubit::Up ? 0 : 1;
    for (int n1 = 0; n1 < basis.n1_max; ++n1) {
        for (int n2 = 0; n2 < basis.n2_max; ++n2) {
            amps(basis.index(q, n1, n2)) = c1(n1) * c2(n2);
        }
    }
    amps /= amps.norm();
    return {basis, std::move(amps)};
}

Complex expectation(const QuantumState& state, const OperatorMatrix& op) {
    require_same_basis(state.basis, op.basis, "expectation");
    return state.amplitudes.dot(op.matrix * state.amplitudes);
}

Complex overlap(const QuantumState& s1, const QuantumState& s2) {
    require_same_basis(s1.basis, s2.basis, "overlap");
    return s1.amplitudes.dot(s2.amplitudes);
}

} // namespace rabi
