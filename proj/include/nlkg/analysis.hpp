#pragma once

// Error metrics, parameter sweeps and the figure datasets.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "nlkg/dispersion.hpp"
#include "nlkg/model.hpp"

namespace nlkg::analysis {

// log10 |(omega - exact) / exact|; -infinity when the two agree exactly.
inline double relative_error_log10(double omega, double omega_exact) {
    if (omega_exact == 0.0 || std::isnan(omega_exact))
        throw std::domain_error("relative_error_log10: exact value must be nonzero");
    if (omega == omega_exact)
        return -std::numeric_limits<double>::infinity();
    return std::log10(std::abs((omega - omega_exact) / omega_exact));
}

struct AmplitudeGrid {
    double min = 0.0;
    double max = 1.0;
    int points = 2;
};

// Duffing only: abscissa mu A^2, evaluated at unit amplitude with mu = x.
struct MuA2Grid {
    double min = 0.0;
    double max = 1.0;
    int points = 2;
    bool log_scale = false;
};

using GridAxis = std::variant<AmplitudeGrid, MuA2Grid>;

struct SweepSpec {
    PotentialSpec potential;
    GridAxis axis;
    std::vector<MethodId> methods;
    double tol = 1e-12;
};

enum class CellStatus { ok, domain, non_convergence };

inline const char* reason_code(CellStatus s) {
    switch (s) {
        case CellStatus::ok: return "";
        case CellStatus::domain: return "domain";
        case CellStatus::non_convergence: return "nonconvergence";
    }
    return "";
}

// NaN marks a value that could not be computed.
struct Cell {
    CellStatus status = CellStatus::ok;
    double omega = std::numeric_limits<double>::quiet_NaN();
    double ratio = std::numeric_limits<double>::quiet_NaN();
    double delta = std::numeric_limits<double>::quiet_NaN();
};

struct Row {
    double x = 0.0;
    Cell exact;
    std::vector<Cell> cells;  // parallel to SweepTable::methods
};

struct SweepTable {
    std::string abscissa;
    std::vector<MethodId> methods;
    std::vector<Row> rows;
};

inline std::vector<double> grid_points(const GridAxis& axis) {
    auto build = [](double lo, double hi, int n, bool log_scale) {
        if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
            throw std::invalid_argument("grid: requires finite min <= max");
        if (lo == hi)
            return std::vector<double>{lo};
        if (n < 2)
            throw std::invalid_argument("grid: requires at least 2 points");
        if (log_scale && !(lo > 0.0))
            throw std::invalid_argument("grid: log scale requires min > 0");
        std::vector<double> xs(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double f = static_cast<double>(i) / (n - 1);
            xs[i] = log_scale ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo);
        }
        xs.front() = lo;
        xs.back() = hi;
        return xs;
    };
    return std::visit(overloaded{[&](const AmplitudeGrid& g) { return build(g.min, g.max, g.points, false); },
                                 [&](const MuA2Grid& g) { return build(g.min, g.max, g.points, g.log_scale); }},
                      axis);
}

// The (potential, amplitude) pair behind one abscissa value.
inline std::pair<PotentialSpec, double> point_query(const SweepSpec& spec, double x) {
    if (std::holds_alternative<MuA2Grid>(spec.axis))
        return {Duffing{x}, 1.0};
    return {spec.potential, x};
}

inline void validate_sweep_spec(const SweepSpec& spec, int max_order = kDefaultMaxLdeOrder) {
    if (!(spec.tol > 0.0))
        throw std::invalid_argument("sweep: tol must be > 0");
    if (std::holds_alternative<MuA2Grid>(spec.axis) && !std::holds_alternative<Duffing>(spec.potential))
        throw std::invalid_argument("sweep: mu A^2 grid requires the duffing potential");
    for (const auto& m : spec.methods)
        require_valid_method(m, max_order);
    for (double x : grid_points(spec.axis)) {
        const auto [p, A] = point_query(spec, x);
        require_valid_amplitude(p, A);
    }
}

namespace detail {

inline Cell evaluate_cell(const PotentialSpec& p, double A, const MethodId& m, double tol, int max_order) {
    Cell c;
    try {
        c.omega = evaluate(DispersionQuery{p, A, m, tol}, max_order).omega_cap;
    } catch (const std::domain_error&) {
        c.status = CellStatus::domain;
    } catch (const non_convergence&) {
        c.status = CellStatus::non_convergence;
    }
    return c;
}

inline Row evaluate_row(const SweepSpec& spec, double x, int max_order) {
    const auto [p, A] = point_query(spec, x);
    Row row;
    row.x = x;
    row.exact = evaluate_cell(p, A, Exact{}, spec.tol, max_order);
    row.cells.reserve(spec.methods.size());
    for (const auto& m : spec.methods) {
        Cell c = evaluate_cell(p, A, m, spec.tol, max_order);
        if (c.status == CellStatus::ok && row.exact.status == CellStatus::ok) {
            c.ratio = c.omega / row.exact.omega;
            c.delta = relative_error_log10(c.omega, row.exact.omega);
        }
        row.cells.push_back(c);
    }
    return row;
}

}  // namespace detail

// Evaluates every requested method plus the exact oracle at each grid point.
// Rows are computed concurrently but stored by grid index, so the table does
// not depend on the thread count.  threads == 0 picks hardware concurrency.
inline SweepTable run_sweep(const SweepSpec& spec, unsigned threads = 0, int max_order = kDefaultMaxLdeOrder) {
    validate_sweep_spec(spec, max_order);
    const std::vector<double> xs = grid_points(spec.axis);

    SweepTable table;
    table.abscissa = std::holds_alternative<MuA2Grid>(spec.axis) ? "muA2" : "A";
    table.methods = spec.methods;
    table.rows.resize(xs.size());

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(xs.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < xs.size(); i = next++)
            table.rows[i] = detail::evaluate_row(spec, xs[i], max_order);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    return table;
}

// ---------------------------------------------------------------------------
// Figures

struct FigureDataset {
    int id = 0;
    SweepSpec ratio_spec;
    SweepSpec delta_spec;
    SweepTable ratio_panel;
    SweepTable delta_panel;
    bool delta_log_x = false;
};

inline std::pair<SweepSpec, SweepSpec> figure_specs(int id, int points = 200, double tol = 1e-12) {
    switch (id) {
        case 1: {
            const std::vector<MethodId> methods{Lde{0}, Lde{2}, Lde{3}, Lim{2}};
            SweepSpec left{Duffing{1.0}, MuA2Grid{-0.995, -0.005, points, false}, methods, tol};
            SweepSpec right{Duffing{1.0}, MuA2Grid{1.0, 1e4, points, true}, methods, tol};
            return {left, right};
        }
        case 2: {
            SweepSpec s{SineGordon{}, AmplitudeGrid{0.01, 3.13, points}, {Lde{1}, Lde{2}, Lim{1}, Lim{2}}, tol};
            return {s, s};
        }
        case 3: {
            SweepSpec s{PureQuartic{1.0}, AmplitudeGrid{0.1, 10.0, points},
                        {Lde{1}, Lde{2}, Lde{3}, Lim{1}, Lim{2}}, tol};
            return {s, s};
        }
        default:
            throw std::out_of_range("figure id must be 1, 2 or 3");
    }
}

inline FigureDataset figure_dataset(int id, int points = 200, double tol = 1e-12, unsigned threads = 0) {
    auto [ratio_spec, delta_spec] = figure_specs(id, points, tol);
    FigureDataset fig;
    fig.id = id;
    fig.ratio_spec = ratio_spec;
    fig.delta_spec = delta_spec;
    fig.ratio_panel = run_sweep(ratio_spec, threads);
    fig.delta_panel = (id == 1) ? run_sweep(delta_spec, threads) : fig.ratio_panel;
    fig.delta_log_x = (id == 1);
    return fig;
}

}  // namespace nlkg::analysis
