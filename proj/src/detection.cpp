#include "rabi/detection.hpp"

#include "rabi/errors.hpp"
#include "rabi/ops.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rabi {

namespace {

constexpr double kRouteAgreement = 1e-8;
constexpr double kEstimateTolG = 1e-10;

GroundStateResult converged_ground(const ModelParams& p, const TruncationConfig& cfg,
                                   BasisKind kind) {
    GroundStateResult gs = ground_state(p, cfg, kind);
    if (!gs.converged) {
        throw NotConverged("ground state did not converge below the cutoff cap " +
                           std::to_string(cfg.n_cap));
    }
    return gs;
}

double nb_of_solution(const ModelParams& p, double tol) {
    const TrwaSolution sol = solve_self_consistent(p, tol);
    return nb_trwa(sol);
}

} // namespace

double nb_trwa(const TrwaSolution& sol) {
    const double d = sol.xi_a - sol.xi_b;
    return 0.5 * d * d;
}

double nb_slope(const ModelParams& p, const TrwaSolution& sol) {
    p.validate();
    const double den_a = (p.omega + p.J) - sol.eta * p.Omega;
    const double den_b = (p.omega - p.J) - sol.eta * p.Omega;
    const double s2 = std::sqrt(2.0);
    // xi = g*c + s*deta with c the frozen-eta derivative and s = xi*Omega/den
    // the sensitivity to eta.
    const double c_a = s2 / (4.0 * den_a);
    const double c_b = s2 / (4.0 * den_b);
    const double s_a = sol.xi_a * p.Omega / den_a;
    const double s_b = sol.xi_b * p.Omega / den_b;
    // eta = exp(-2(xi_a^2+xi_b^2)) differentiated through both xi's:
    //   deta [1 + 4 eta (xi_a s_a + xi_b s_b)] = -4 eta (xi_a c_a + xi_b c_b)
    const double denom = 1.0 + 4.0 * sol.eta * (sol.xi_a * s_a + sol.xi_b * s_b);
    if (std::abs(denom) < 1e-12) {
        throw SingularJacobian("nb_slope: sensitivity system is singular");
    }
    const double deta = -4.0 * sol.eta * (sol.xi_a * c_a + sol.xi_b * c_b) / denom;
    const double dxi_a = c_a + s_a * deta;
    const double dxi_b = c_b + s_b * deta;
    return (dxi_a - dxi_b) * (sol.xi_a - sol.xi_b);
}

double nb_exact(const ModelParams& p, const TruncationConfig& cfg) {
    const GroundStateResult super = converged_ground(p, cfg, BasisKind::Supermode);
    const OperatorMatrix nb_super =
        local_number_op_in_supermode_basis(super.state.basis, LocalResonator::B);
    const double via_supermode = std::real(expectation(super.state, nb_super));

    const GroundStateResult local = converged_ground(p, cfg, BasisKind::Local);
    const OperatorMatrix nb_local = number_op(local.state.basis, Mode::Two);
    const double via_local = std::real(expectation(local.state, nb_local));

    if (std::abs(via_supermode - via_local) > kRouteAgreement) {
        throw Error("nb_exact: supermode and local routes disagree: " +
                    std::to_string(via_supermode) + " vs " + std::to_string(via_local));
    }
    return via_supermode;
}

std::pair<double, double> fidelities(const ModelParams& p, const TruncationConfig& cfg) {
    const GroundStateResult gs = converged_ground(p, cfg, BasisKind::Supermode);
    const TrwaSolution sol = solve_self_consistent(p);
    const QuantumState trwa = build_trwa_state(sol, gs.state.basis);
    const QuantumState rwa = rwa_ground(p, gs.state.basis).second;
    const double f_t = std::norm(overlap(gs.state, trwa));
    const double f_r = std::norm(overlap(gs.state, rwa));
    return {f_t, f_r};
}

double estimate_g(double nb_measured, const ModelParams& p_known, double g_max) {
    ModelParams p = p_known;
    p.g = 0.0;
    p.validate();
    if (nb_measured < 0.0) {
        throw std::invalid_argument("estimate_g: nb_measured must be >= 0");
    }
    if (p.J == 0.0) {
        throw std::invalid_argument("estimate_g: J must be nonzero (the detection curve "
                                    "vanishes identically at J = 0)");
    }
    if (!(g_max > 0.0)) {
        throw std::invalid_argument("estimate_g: g_max must be > 0");
    }
    if (nb_measured == 0.0) {
        return 0.0;
    }

    constexpr double kTrwaTol = 1e-13;
    auto nb_at = [&](double g) {
        ModelParams q = p;
        q.g = g;
        return nb_of_solution(q, kTrwaTol);
    };

    // Monotonicity spot-check on the bracket before trusting bisection.
    constexpr int kSpotPoints = 9;
    double prev = 0.0;
    for (int i = 1; i <= kSpotPoints; ++i) {
        const double g = g_max * static_cast<double>(i) / kSpotPoints;
        const double nb = nb_at(g);
        if (nb <= prev) {
            throw NonMonotoneBracket("estimate_g: detection curve is not strictly "
                                     "increasing near g = " + std::to_string(g));
        }
        prev = nb;
    }

    const double nb_top = nb_at(g_max);
    if (nb_measured > nb_top) {
        std::ostringstream msg;
        msg << "estimate_g: nb_measured = " << nb_measured
            << " exceeds the curve value " << nb_top << " at g_max = " << g_max;
        throw OutOfRange(msg.str());
    }

    double lo = 0.0;
    double hi = g_max;
    while (hi - lo > kEstimateTolG) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (nb_at(mid) < nb_measured) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

SweepRecord evaluate_point(const ModelParams& p, const TruncationConfig& cfg,
                           int* cutoff_used) {
    p.validate();
    cfg.validate();

    const TrwaSolution sol = solve_self_consistent(p);
    const GroundStateResult super = converged_ground(p, cfg, BasisKind::Supermode);
    const GroundStateResult local = converged_ground(p, cfg, BasisKind::Local);

    const QuantumState trwa_state = build_trwa_state(sol, super.state.basis);
    const QuantumState rwa_state = rwa_ground(p, super.state.basis).second;

    const OperatorMatrix nb_super_op =
        local_number_op_in_supermode_basis(super.state.basis, LocalResonator::B);
    const double nb_via_super = std::real(expectation(super.state, nb_super_op));
    const double nb_via_local =
        std::real(expectation(local.state, number_op(local.state.basis, Mode::Two)));
    if (std::abs(nb_via_super - nb_via_local) > kRouteAgreement) {
        throw Error("evaluate_point: supermode and local <n_b> routes disagree");
    }

    SweepRecord rec;
    rec.g = p.g;
    rec.e_exact = super.energy;
    rec.e_trwa = sol.energy;
    rec.e_rwa = -p.Omega / 2.0;
    rec.f_t = std::norm(overlap(super.state, trwa_state));
    rec.f_r = std::norm(overlap(super.state, rwa_state));
    rec.nb_trwa = nb_trwa(sol);
    rec.nb_exact = nb_via_super;
    rec.slope_trwa = nb_slope(p, sol);
    if (cutoff_used != nullptr) {
        *cutoff_used = std::max(super.cutoff_used, local.cutoff_used);
    }
    return rec;
}

SweepResult run_sweep(const ModelParams& p_base, const std::vector<double>& g_grid,
                      const TruncationConfig& cfg) {
    cfg.validate();
    if (g_grid.empty()) {
        throw std::invalid_argument("run_sweep: grid must not be empty");
    }
    for (std::size_t i = 0; i + 1 < g_grid.size(); ++i) {
        if (!(g_grid[i] < g_grid[i + 1])) {
            throw std::invalid_argument("run_sweep: grid must be strictly increasing");
        }
    }

    SweepResult result;
    result.params_base = p_base;
    result.g_grid = g_grid;
    result.meta.truncation = cfg;
    result.records.reserve(g_grid.size());
    for (const double g : g_grid) {
        ModelParams p = p_base;
        p.g = g;
        try {
            int cutoff = 0;
            result.records.push_back(evaluate_point(p, cfg, &cutoff));
            result.meta.max_cutoff_used = std::max(result.meta.max_cutoff_used, cutoff);
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "run_sweep: at g = " << g << ": " << e.what();
            throw Error(msg.str());
        }
    }
    return result;
}

} // namespace rabi
