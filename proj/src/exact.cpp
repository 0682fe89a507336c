#include "rabi/exact.hpp"

#include "rabi/errors.hpp"
#include "rabi/lanczos.hpp"
#include "rabi/ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rabi {

namespace {

constexpr double kDegenerateGap = 1e-12;
constexpr double kParitySlack = 1e-8;

// Global phase convention: largest-magnitude amplitude real positive.
void fix_phase(Eigen::VectorXcd& amps) {
    Eigen::Index imax = 0;
    amps.cwiseAbs().maxCoeff(&imax);
    const Complex a = amps(imax);
    const double mag = std::abs(a);
    if (mag > 0.0) {
        amps *= std::conj(a) / mag;
    }
}

struct CutoffSolve {
    double energy;
    QuantumState state;
    bool near_degenerate;
};

// Lowest eigenpair at a fixed cutoff. The parity expectation is used as a
// cheap degeneracy tripwire; only when it looks mixed do we pay for the
// second eigenpair and, if the gap is below kDegenerateGap, rotate to the
// parity-even member.
CutoffSolve solve_at_cutoff(const ModelParams& p, const BasisSpec& basis,
                            const QuantumState* warm) {
    const OperatorMatrix h = build_hamiltonian(p, basis);
    const Eigen::VectorXcd* guess = nullptr;
    Eigen::VectorXcd guess_storage;
    if (warm != nullptr) {
        guess_storage = embed_state(*warm, basis).amplitudes;
        guess = &guess_storage;
    }

    LanczosOptions opts;
    EigenPairs pair = lowest_eigenpairs(h.matrix, 1, opts, guess);
    QuantumState psi{basis, pair.vectors.col(0)};

    const OperatorMatrix parity = parity_op(basis);
    bool near_degenerate = false;
    const double parity_exp = std::abs(expectation(psi, parity));
    if (parity_exp < 1.0 - kParitySlack) {
        EigenPairs two = lowest_eigenpairs(h.matrix, 2, opts, guess);
        const double gap = two.values(1) - two.values(0);
        if (gap < kDegenerateGap) {
            near_degenerate = true;
            // Diagonalize P in the two-dimensional ground space and keep the
            // parity-even combination.
            Eigen::Matrix2cd pblock;
            QuantumState v0{basis, two.vectors.col(0)};
            QuantumState v1{basis, two.vectors.col(1)};
            const Eigen::VectorXcd pv0 = parity.matrix * v0.amplitudes;
            const Eigen::VectorXcd pv1 = parity.matrix * v1.amplitudes;
            pblock(0, 0) = v0.amplitudes.dot(pv0);
            pblock(0, 1) = v0.amplitudes.dot(pv1);
            pblock(1, 0) = v1.amplitudes.dot(pv0);
            pblock(1, 1) = v1.amplitudes.dot(pv1);
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(pblock);
            // Eigenvalues ascending: the even member has eigenvalue near +1.
            const Eigen::Vector2cd coeff = es.eigenvectors().col(1);
            Eigen::VectorXcd mixed =
                coeff(0) * v0.amplitudes + coeff(1) * v1.amplitudes;
            mixed /= mixed.norm();
            psi.amplitudes = mixed;
        } else {
            psi.amplitudes = two.vectors.col(0);
        }
        pair.values(0) = std::real(psi.amplitudes.dot(h.matrix * psi.amplitudes));
    }

    fix_phase(psi.amplitudes);
    return {pair.values(0), std::move(psi), near_degenerate};
}

} // namespace

void TruncationConfig::validate() const {
    if (n_start < 1 || n_start > n_cap) {
        throw std::invalid_argument("TruncationConfig: need 1 <= n_start <= n_cap");
    }
    if (!(energy_tol > 0.0)) {
        throw std::invalid_argument("TruncationConfig: energy_tol must be > 0");
    }
}

QuantumState embed_state(const QuantumState& state, const BasisSpec& larger) {
    const BasisSpec& src = state.basis;
    if (larger.kind != src.kind || larger.n1_max < src.n1_max || larger.n2_max < src.n2_max) {
        throw std::invalid_argument("embed_state: target basis must match kind and not shrink");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(larger.dim());
    for (int q = 0; q < 2; ++q) {
        for (int n1 = 0; n1 < src.n1_max; ++n1) {
            for (int n2 = 0; n2 < src.n2_max; ++n2) {
                amps(larger.index(q, n1, n2)) = state.amplitudes(src.index(q, n1, n2));
            }
        }
    }
    return {larger, std::move(amps)};
}

GroundStateResult ground_state(const ModelParams& p, const TruncationConfig& cfg,
                               BasisKind kind) {
    p.validate();
    cfg.validate();

    GroundStateResult result;
    const QuantumState* warm = nullptr;
    int n = cfg.n_start;
    while (true) {
        const BasisSpec basis{n, n, kind};
        CutoffSolve solve = solve_at_cutoff(p, basis, warm);
        result.energy = solve.energy;
        result.state = std::move(solve.state);
        result.near_degenerate = solve.near_degenerate;
        result.cutoff_used = n;
        result.energy_history.emplace_back(n, result.energy);

        const auto hist = result.energy_history.size();
        if (hist >= 2 &&
            std::abs(result.energy_history[hist - 1].second -
                     result.energy_history[hist - 2].second) < cfg.energy_tol) {
            result.converged = true;
            return result;
        }
        if (n >= cfg.n_cap) {
            result.converged = false;
            return result;
        }
        warm = &result.state;
        n = std::min(2 * n, cfg.n_cap);
    }
}

std::vector<double> low_spectrum(const ModelParams& p, const TruncationConfig& cfg, int k,
                                 BasisKind kind) {
    p.validate();
    cfg.validate();
    if (k < 1) {
        throw std::invalid_argument("low_spectrum: k must be >= 1");
    }

    Eigen::VectorXd prev;
    int n = cfg.n_start;
    while (true) {
        const BasisSpec basis{n, n, kind};
        if (basis.dim() < k) {
            throw std::invalid_argument("low_spectrum: k exceeds the basis dimension");
        }
        const OperatorMatrix h = build_hamiltonian(p, basis);
        EigenPairs pairs = lowest_eigenpairs(h.matrix, k);
        if (prev.size() == pairs.values.size() &&
            (pairs.values - prev).cwiseAbs().maxCoeff() < cfg.energy_tol) {
            return {pairs.values.data(), pairs.values.data() + pairs.values.size()};
        }
        if (n >= cfg.n_cap) {
            throw NotConverged("low_spectrum: cutoff cap " + std::to_string(cfg.n_cap) +
                               " reached before the spectrum settled");
        }
        prev = pairs.values;
        n = std::min(2 * n, cfg.n_cap);
    }
}

} // namespace rabi
