// io.hpp — Deterministic CSV/JSON serialization of sweep results and the
// figure-dataset bindings used by the CLI.
//
// CSV layout: UTF-8, comma separated, first line a `# key=value ...`
// provenance comment (parameters, tolerances, cutoffs), second line the
// column headers, then data rows. Floats are printed with 12 significant
// digits ('%.12g', C locale), so identical configs give byte-identical
// files.

#pragma once

#include "rabi/detection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rabi {

// %.12g, locale independent.
std::string format_sig(double value);

// Pre-bound figure datasets. The trailing letter selects the hopping
// strength (a: J = 0.05, b: J = 0.2); all use Omega = 0.1, omega = 1.
//   fig2a/fig2b: g, E_exact, E_trwa, E_rwa
//   fig3a/fig3b: g, F_T, F_R
//   fig4a/fig4b: g, nb_trwa, nb_exact, slope_trwa
enum class FigureId { Fig2a, Fig2b, Fig3a, Fig3b, Fig4a, Fig4b };

std::optional<FigureId> parse_figure_id(const std::string& name);
std::string figure_name(FigureId id);

// Parameter set a figure id binds (g field unused).
ModelParams figure_params(FigureId id);

// Column subset a figure id emits (g column always first).
std::vector<std::string> figure_columns(FigureId id);

// Uniform grid of `count` points on [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, int count);

// Full sweep table (all eight per-point quantities).
std::string sweep_to_csv(const SweepResult& sweep);
std::string sweep_to_json(const SweepResult& sweep);

// Figure subset of the sweep table.
std::string figure_to_csv(const SweepResult& sweep, FigureId id);

} // namespace rabi
