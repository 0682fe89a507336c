// detection.hpp — Coupling-strength detection through the auxiliary
// resonator: mean excitation number <n_b> in the ground state, its
// sensitivity d<n_b>/dg, fidelity of the approximate ground states against
// the exact one, inversion of the detection curve, and the parameter sweep
// that backs the CSV outputs.

#pragma once

#include "rabi/exact.hpp"
#include "rabi/hamiltonian.hpp"
#include "rabi/trwa.hpp"

#include <utility>
#include <vector>

namespace rabi {

// Closed form <n_b> = (xi_a - xi_b)^2 / 2 on the TRWA ground state.
double nb_trwa(const TrwaSolution& sol);

// d<n_b>/dg by implicit differentiation of the self-consistency system at
// the converged point: with c = dxi/dg at frozen eta and s = dxi/d(eta-term),
// solving the linear relation for deta/dg and assembling
// (dxi_a/dg - dxi_b/dg)(xi_a - xi_b). Throws SingularJacobian if the linear
// system degenerates (only possible outside the positive-denominator regime).
double nb_slope(const ModelParams& p, const TrwaSolution& sol);

// <G|b†b|G> on the exact ground state. Computed independently in the
// supermode basis (mapped operator) and the local basis (direct number
// operator); the two routes must agree within 1e-8 or the call throws.
// Returns the supermode-route value. Throws NotConverged when the cutoff
// ladder fails.
double nb_exact(const ModelParams& p, const TruncationConfig& cfg);

// (F_T, F_R): squared overlaps of the exact ground state with the TRWA and
// RWA ground states, computed in the supermode basis at the converged
// cutoff.
std::pair<double, double> fidelities(const ModelParams& p, const TruncationConfig& cfg);

// Inverts nb_trwa(g) on [0, g_max] by bisection to |dg| < 1e-10. p_known
// supplies Omega, omega, J (its g field is ignored; J must be nonzero).
// Throws OutOfRange if nb_measured exceeds the curve value at g_max and
// NonMonotoneBracket if the monotonicity spot-check fails on the bracket.
double estimate_g(double nb_measured, const ModelParams& p_known, double g_max);

struct SweepRecord {
    double g = 0.0;
    double e_exact = 0.0;
    double e_trwa = 0.0;
    double e_rwa = 0.0;
    double f_t = 0.0;
    double f_r = 0.0;
    double nb_trwa = 0.0;
    double nb_exact = 0.0;
    double slope_trwa = 0.0;
};

struct SweepMeta {
    TruncationConfig truncation;
    double trwa_tol = 1e-13;
    int max_cutoff_used = 0;   // largest converged cutoff over the grid
};

struct SweepResult {
    ModelParams params_base;   // g field ignored
    std::vector<double> g_grid;
    std::vector<SweepRecord> records;
    SweepMeta meta;
};

// All quantities for a single parameter point (shared by run_sweep and the
// CLI single-point report).
SweepRecord evaluate_point(const ModelParams& p, const TruncationConfig& cfg,
                           int* cutoff_used = nullptr);

// One record per grid point, assembled in grid order. The grid must be
// strictly increasing; per-point failures are rethrown with the offending g
// attached.
SweepResult run_sweep(const ModelParams& p_base, const std::vector<double>& g_grid,
                      const TruncationConfig& cfg);

} // namespace rabi
