#include "rabi/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rabi {

namespace {

// (header, accessor) pairs in emission order.
struct Column {
    const char* name;
    double SweepRecord::* field;
};

constexpr Column kAllColumns[] = {
    {"g", &SweepRecord::g},
    {"E_exact", &SweepRecord::e_exact},
    {"E_trwa", &SweepRecord::e_trwa},
    {"E_rwa", &SweepRecord::e_rwa},
    {"F_T", &SweepRecord::f_t},
    {"F_R", &SweepRecord::f_r},
    {"nb_trwa", &SweepRecord::nb_trwa},
    {"nb_exact", &SweepRecord::nb_exact},
    {"slope_trwa", &SweepRecord::slope_trwa},
};

std::string provenance_line(const SweepResult& sweep) {
    std::ostringstream out;
    out << "# Omega=" << format_sig(sweep.params_base.Omega)
        << " omega=" << format_sig(sweep.params_base.omega)
        << " J=" << format_sig(sweep.params_base.J)
        << " g_min=" << format_sig(sweep.g_grid.front())
        << " g_max=" << format_sig(sweep.g_grid.back())
        << " g_count=" << sweep.g_grid.size()
        << " n_start=" << sweep.meta.truncation.n_start
        << " n_cap=" << sweep.meta.truncation.n_cap
        << " energy_tol=" << format_sig(sweep.meta.truncation.energy_tol)
        << " trwa_tol=" << format_sig(sweep.meta.trwa_tol)
        << " max_cutoff_used=" << sweep.meta.max_cutoff_used;
    return out.str();
}

std::string csv_with_columns(const SweepResult& sweep, const std::vector<std::string>& names) {
    std::vector<const Column*> cols;
    for (const auto& name : names) {
        const Column* found = nullptr;
        for (const Column& c : kAllColumns) {
            if (name == c.name) {
                found = &c;
                break;
            }
        }
        if (found == nullptr) {
            throw std::invalid_argument("csv: unknown column " + name);
        }
        cols.push_back(found);
    }

    std::ostringstream out;
    out << provenance_line(sweep) << '\n';
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i == 0 ? "" : ",") << cols[i]->name;
    }
    out << '\n';
    for (const SweepRecord& rec : sweep.records) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            out << (i == 0 ? "" : ",") << format_sig(rec.*(cols[i]->field));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace

std::string format_sig(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::optional<FigureId> parse_figure_id(const std::string& name) {
    if (name == "fig2a") return FigureId::Fig2a;
    if (name == "fig2b") return FigureId::Fig2b;
    if (name == "fig3a") return FigureId::Fig3a;
    if (name == "fig3b") return FigureId::Fig3b;
    if (name == "fig4a") return FigureId::Fig4a;
    if (name == "fig4b") return FigureId::Fig4b;
    return std::nullopt;
}

std::string figure_name(FigureId id) {
    switch (id) {
        case FigureId::Fig2a: return "fig2a";
        case FigureId::Fig2b: return "fig2b";
        case FigureId::Fig3a: return "fig3a";
        case FigureId::Fig3b: return "fig3b";
        case FigureId::Fig4a: return "fig4a";
        case FigureId::Fig4b: return "fig4b";
    }
    return {};
}

ModelParams figure_params(FigureId id) {
    ModelParams p;
    p.Omega = 0.1;
    p.omega = 1.0;
    switch (id) {
        case FigureId::Fig2a:
        case FigureId::Fig3a:
        case FigureId::Fig4a:
            p.J = 0.05;
            break;
        case FigureId::Fig2b:
        case FigureId::Fig3b:
        case FigureId::Fig4b:
            p.J = 0.2;
            break;
    }
    return p;
}

std::vector<std::string> figure_columns(FigureId id) {
    switch (id) {
        case FigureId::Fig2a:
        case FigureId::Fig2b:
            return {"g", "E_exact", "E_trwa", "E_rwa"};
        case FigureId::Fig3a:
        case FigureId::Fig3b:
            return {"g", "F_T", "F_R"};
        case FigureId::Fig4a:
        case FigureId::Fig4b:
            return {"g", "nb_trwa", "nb_exact", "slope_trwa"};
    }
    return {};
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
    if (count < 2) {
        throw std::invalid_argument("uniform_grid: count must be >= 2");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("uniform_grid: need lo < hi");
    }
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    }
    return grid;
}

std::string sweep_to_csv(const SweepResult& sweep) {
    std::vector<std::string> names;
    for (const Column& c : kAllColumns) names.emplace_back(c.name);
    return csv_with_columns(sweep, names);
}

std::string sweep_to_json(const SweepResult& sweep) {
    nlohmann::json j;
    j["params"] = {{"Omega", sweep.params_base.Omega},
                   {"omega", sweep.params_base.omega},
                   {"J", sweep.params_base.J}};
    j["truncation"] = {{"n_start", sweep.meta.truncation.n_start},
                       {"n_cap", sweep.meta.truncation.n_cap},
                       {"energy_tol", sweep.meta.truncation.energy_tol}};
    j["trwa_tol"] = sweep.meta.trwa_tol;
    j["max_cutoff_used"] = sweep.meta.max_cutoff_used;
    j["records"] = nlohmann::json::array();
    for (const SweepRecord& rec : sweep.records) {
        nlohmann::json r;
        for (const Column& c : kAllColumns) {
            r[c.name] = rec.*(c.field);
        }
        j["records"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

std::string figure_to_csv(const SweepResult& sweep, FigureId id) {
    return csv_with_columns(sweep, figure_columns(id));
}

} // namespace rabi
