#include "rabi/trwa.hpp"

#include "rabi/errors.hpp"
#include "rabi/ops.hpp"

#include <cmath>
#include <string>

namespace rabi {

namespace {

constexpr double kDenominatorGuard = 1e-9;

struct Displacements {
    double xi_a;
    double xi_b;
};

Displacements displacements_at(const ModelParams& p, double eta) {
    const double den_a = (p.omega + p.J) - eta * p.Omega;
    const double den_b = (p.omega - p.J) - eta * p.Omega;
    if (den_a < kDenominatorGuard || den_b < kDenominatorGuard) {
        throw SingularDenominator(
            "trwa: denominator (omega±J) - eta*Omega fell below the guard at eta = " +
            std::to_string(eta));
    }
    const double num = std::sqrt(2.0) * p.g / 4.0;
    return {num / den_a, num / den_b};
}

double vacuum_average(const Displacements& xi) {
    return std::exp(-2.0 * (xi.xi_a * xi.xi_a + xi.xi_b * xi.xi_b));
}

double energy_formula(const ModelParams& p, const Displacements& xi, double eta) {
    const double s2 = std::sqrt(2.0);
    return -eta * p.Omega / 2.0
         + (p.omega + p.J) * xi.xi_a * xi.xi_a - p.g * xi.xi_a / s2
         + (p.omega - p.J) * xi.xi_b * xi.xi_b - p.g * xi.xi_b / s2;
}

TrwaSolution finish(const ModelParams& p, double eta, int iterations) {
    const Displacements xi = displacements_at(p, eta);
    TrwaSolution sol;
    sol.xi_a = xi.xi_a;
    sol.xi_b = xi.xi_b;
    sol.eta = eta;
    sol.residual = std::abs(eta - vacuum_average(xi));
    sol.iterations = iterations;
    sol.energy = energy_formula(p, xi, eta);
    return sol;
}

// r(eta) = eta - exp(-2(xi_a(eta)^2 + xi_b(eta)^2)); strictly increasing on
// the positive-denominator branch.
double root_fn(const ModelParams& p, double eta) {
    return eta - vacuum_average(displacements_at(p, eta));
}

TrwaSolution solve_bisection(const ModelParams& p, double tol, int max_iter) {
    double lo = 0.0;
    double hi = 1.0;
    int used = 0;
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval collapsed to adjacent doubles
        ++used;
        if (root_fn(p, mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    TrwaSolution sol = finish(p, 0.5 * (lo + hi), used);
    if (sol.residual >= tol) {
        throw NoConvergence("trwa bisection: residual " + std::to_string(sol.residual) +
                            " above tol after " + std::to_string(used) + " iterations");
    }
    return sol;
}

TrwaSolution solve_damped(const ModelParams& p, double tol, int max_iter, double eta_start) {
    constexpr double kDamping = 0.5;
    double eta = eta_start;
    for (int it = 1; it <= max_iter; ++it) {
        const double target = vacuum_average(displacements_at(p, eta));
        eta = (1.0 - kDamping) * eta + kDamping * target;
        const double residual = std::abs(eta - vacuum_average(displacements_at(p, eta)));
        if (residual < tol) {
            return finish(p, eta, it);
        }
    }
    throw NoConvergence("trwa damped iteration: no convergence within " +
                        std::to_string(max_iter) + " iterations");
}

} // namespace

TrwaSolution solve_self_consistent(const ModelParams& p, double tol, int max_iter,
                                   TrwaMethod method) {
    p.validate();
    if (!(tol > 0.0)) {
        throw std::invalid_argument("solve_self_consistent: tol must be > 0");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("solve_self_consistent: max_iter must be >= 1");
    }
    // Positive denominators at eta = 1 keep them positive on all of (0, 1],
    // which is what makes the scalar root unique.
    displacements_at(p, 1.0);

    if (p.g == 0.0) {
        TrwaSolution sol = finish(p, 1.0, 0);
        sol.residual = 0.0;
        return sol;
    }

    switch (method) {
        case TrwaMethod::Bisection:
            return solve_bisection(p, tol, max_iter);
        case TrwaMethod::DampedFixedPoint:
            return solve_damped(p, tol, max_iter, 1.0);
        case TrwaMethod::Hybrid:
            break;
    }
    // Bisection brackets the root to ~machine width, the damped pass polishes
    // the residual below tol.
    TrwaSolution bracket = solve_bisection(p, 1.0, max_iter);
    TrwaSolution sol = solve_damped(p, tol, max_iter, bracket.eta);
    sol.iterations += bracket.iterations;
    return sol;
}

double trwa_energy(const TrwaSolution& sol, const ModelParams& p) {
    return energy_formula(p, {sol.xi_a, sol.xi_b}, sol.eta);
}

QuantumState build_trwa_state(const TrwaSolution& sol, const BasisSpec& basis) {
    basis.validate();
    if (basis.kind != BasisKind::Supermode) {
        throw BasisMismatch("build_trwa_state: basis kind must be Supermode");
    }
    const QuantumState up = coherent_state(basis, -sol.xi_a, -sol.xi_b, Qubit::Up);
    const QuantumState down = coherent_state(basis, sol.xi_a, sol.xi_b, Qubit::Down);
    Eigen::VectorXcd amps = (up.amplitudes - down.amplitudes) / std::sqrt(2.0);
    amps /= amps.norm();
    return {basis, std::move(amps)};
}

std::pair<double, QuantumState> rwa_ground(const ModelParams& p, const BasisSpec& basis) {
    p.validate();
    basis.validate();
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(basis.dim());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    amps(basis.index(0, 0, 0)) = inv_sqrt2;
    amps(basis.index(1, 0, 0)) = -inv_sqrt2;
    return {-p.Omega / 2.0, QuantumState{basis, std::move(amps)}};
}

} // namespace rabi
