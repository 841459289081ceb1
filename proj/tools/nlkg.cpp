// nlkg: dispersion relations of periodic nonlinear Klein-Gordon waves.
//
//   nlkg dispersion --potential duffing --mu 1 --amplitude 1 --method lde --order 2
//   nlkg sweep --potential sine-gordon --a-min 0.1 --a-max 3.1 --points 50 --methods lde2,lim2 --out sg.csv
//   nlkg figure --id 2 --out figures
//   nlkg validate
//
// Exit codes: 0 success, 1 validation failure, 2 usage or domain error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlkg/cli/config.hpp"
#include "nlkg/cli/csv.hpp"
#include "nlkg/cli/svg.hpp"
#include "nlkg/cli/validate.hpp"
#include "nlkg/nlkg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

// Raised for bad flag combinations discovered after parsing.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

nlkg::PotentialSpec make_potential(const std::string& name, std::optional<double> mu) {
    if (name == "duffing") {
        if (!mu)
            throw usage_error("duffing requires --mu");
        return nlkg::Duffing{*mu};
    }
    if (name == "sine-gordon") {
        if (mu)
            throw usage_error("sine-gordon takes no --mu");
        return nlkg::SineGordon{};
    }
    if (name == "pure-quartic")
        return nlkg::PureQuartic{mu.value_or(1.0)};
    throw usage_error("unknown potential '" + name + "' (duffing | sine-gordon | pure-quartic)");
}

std::vector<nlkg::MethodId> parse_methods(const std::string& list) {
    std::vector<nlkg::MethodId> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(nlkg::parse_method_label(item));
    if (out.empty())
        throw usage_error("--methods must list at least one method");
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw std::runtime_error("output directory not writable: " + dir.string());
}

}  // namespace

int main(int argc, char** argv) {
    nlkg::cli::CliConfig config;
    try {
        config = nlkg::cli::load_config_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App app{"Dispersion relations of periodic nonlinear Klein-Gordon waves"};
    app.require_subcommand(1);

    std::optional<int> precision_flag;
    std::optional<double> tol_flag;
    std::optional<int> points_flag;
    std::optional<std::string> out_flag;
    unsigned threads = 0;

    // dispersion
    auto* disp = app.add_subcommand("dispersion", "Evaluate Omega(A) for one method");
    std::string potential_name;
    std::optional<double> mu;
    double amplitude = 0.0;
    std::string method_name;
    std::optional<int> order;
    std::optional<double> wavenumber;
    disp->add_option("--potential", potential_name, "duffing | sine-gordon | pure-quartic")->required();
    disp->add_option("--mu", mu, "Nonlinearity parameter");
    disp->add_option("--amplitude", amplitude, "Amplitude A > 0")->required();
    disp->add_option("--method", method_name, "exact | lde | lim")->required();
    disp->add_option("--order", order, "LDE summation limit N, or Lim order 1|2");
    disp->add_option("--wavenumber", wavenumber, "Also print w = sqrt(Omega^2 + k^2)");
    disp->add_option("--tol", tol_flag, "Quadrature tolerance");
    disp->add_option("--precision", precision_flag, "Significant digits");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Tabulate methods against the exact relation on a grid");
    std::string sweep_potential;
    std::optional<double> sweep_mu;
    std::optional<double> a_min, a_max, mua2_min, mua2_max;
    bool log_scale = false;
    std::string methods_list;
    sweep->add_option("--potential", sweep_potential, "duffing | sine-gordon | pure-quartic")->required();
    sweep->add_option("--mu", sweep_mu, "Nonlinearity parameter (amplitude grids)");
    sweep->add_option("--a-min", a_min, "Amplitude grid start");
    sweep->add_option("--a-max", a_max, "Amplitude grid end");
    sweep->add_option("--mua2-min", mua2_min, "mu A^2 grid start (duffing)");
    sweep->add_option("--mua2-max", mua2_max, "mu A^2 grid end (duffing)");
    sweep->add_flag("--log", log_scale, "Log-spaced mu A^2 grid");
    sweep->add_option("--points", points_flag, "Grid points");
    sweep->add_option("--methods", methods_list, "Comma list, e.g. lde2,lde3,lim2")->required();
    sweep->add_option("--out", out_flag, "Output CSV path");
    sweep->add_option("--tol", tol_flag, "Quadrature tolerance");
    sweep->add_option("--precision", precision_flag, "Significant digits");
    sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

    // figure
    auto* figure = app.add_subcommand("figure", "Write ratio and error panels (CSV + SVG) for figure 1, 2 or 3");
    int figure_id = 0;
    figure->add_option("--id", figure_id, "1 | 2 | 3")->required();
    figure->add_option("--out", out_flag, "Output directory");
    figure->add_option("--points", points_flag, "Grid points");
    figure->add_option("--tol", tol_flag, "Quadrature tolerance");
    figure->add_option("--precision", precision_flag, "Significant digits");
    figure->add_option("--threads", threads, "Worker threads (0 = all cores)");

    // validate
    auto* validate = app.add_subcommand("validate", "Run the cross-oracle and regression checks");
    validate->add_option("--tol", tol_flag, "Quadrature tolerance of the oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (precision_flag)
        config.csv_precision = *precision_flag;
    if (tol_flag)
        config.default_tol = *tol_flag;
    if (points_flag)
        config.grid_points = *points_flag;
    if (out_flag && figure->parsed())
        config.output_dir = *out_flag;

    try {
        nlkg::cli::validate_config(config);

        if (disp->parsed()) {
            const auto p = make_potential(potential_name, mu);
            nlkg::MethodId method;
            if (method_name == "exact") {
                method = nlkg::Exact{};
            } else if (method_name == "lde" || method_name == "lim") {
                if (!order)
                    throw usage_error("--method " + method_name + " requires --order");
                method = method_name == "lde" ? nlkg::MethodId{nlkg::Lde{*order}} : nlkg::MethodId{nlkg::Lim{*order}};
            } else {
                throw usage_error("unknown method '" + method_name + "' (exact | lde | lim)");
            }
            const auto r = nlkg::evaluate({p, amplitude, method, config.default_tol});
            std::cout << nlkg::cli::format_double(r.omega_cap, config.csv_precision) << "\n";
            if (wavenumber)
                std::cout << nlkg::cli::format_double(nlkg::omega_from_wavenumber(r.omega_cap, *wavenumber),
                                                      config.csv_precision)
                          << "\n";
            return kExitOk;
        }

        if (sweep->parsed()) {
            nlkg::analysis::SweepSpec spec;
            const bool amp = a_min || a_max;
            const bool mua2 = mua2_min || mua2_max;
            if (amp == mua2)
                throw usage_error("give exactly one of --a-min/--a-max or --mua2-min/--mua2-max");
            if (amp) {
                if (!a_min || !a_max)
                    throw usage_error("--a-min and --a-max go together");
                spec.potential = make_potential(sweep_potential, sweep_mu);
                spec.axis = nlkg::analysis::AmplitudeGrid{*a_min, *a_max, config.grid_points};
            } else {
                if (!mua2_min || !mua2_max)
                    throw usage_error("--mua2-min and --mua2-max go together");
                if (sweep_potential != "duffing")
                    throw usage_error("mu A^2 grids require --potential duffing");
                spec.potential = nlkg::Duffing{1.0};
                spec.axis = nlkg::analysis::MuA2Grid{*mua2_min, *mua2_max, config.grid_points, log_scale};
            }
            spec.methods = parse_methods(methods_list);
            spec.tol = config.default_tol;

            const auto table = nlkg::analysis::run_sweep(spec, threads);
            const std::filesystem::path out =
                out_flag ? std::filesystem::path(*out_flag) : std::filesystem::path(config.output_dir) / "sweep.csv";
            if (out.has_parent_path())
                ensure_directory(out.parent_path());
            write_file(out, nlkg::cli::write_csv(nlkg::cli::to_csv_document(table, spec), config.csv_precision));
            std::cout << out.string() << "\n";
            return kExitOk;
        }

        if (figure->parsed()) {
            const std::filesystem::path dir(config.output_dir);
            ensure_directory(dir);
            const auto fig =
                nlkg::analysis::figure_dataset(figure_id, config.grid_points, config.default_tol, threads);
            const std::string stem = "fig" + std::to_string(figure_id);
            const auto ratio_csv = dir / (stem + "_ratio.csv");
            const auto delta_csv = dir / (stem + "_delta.csv");
            const auto ratio_svg = dir / (stem + "_ratio.svg");
            const auto delta_svg = dir / (stem + "_delta.svg");
            write_file(ratio_csv, nlkg::cli::write_csv(nlkg::cli::to_csv_document(fig.ratio_panel, fig.ratio_spec),
                                                       config.csv_precision));
            write_file(delta_csv, nlkg::cli::write_csv(nlkg::cli::to_csv_document(fig.delta_panel, fig.delta_spec),
                                                       config.csv_precision));
            write_file(ratio_svg,
                       nlkg::cli::render_svg(fig.ratio_panel, nlkg::cli::Panel::ratio, false,
                                             "Figure " + std::to_string(figure_id) + ": Omega / Omega_exact",
                                             nlkg::cli::canonical_spec(fig.ratio_spec)));
            write_file(delta_svg,
                       nlkg::cli::render_svg(fig.delta_panel, nlkg::cli::Panel::delta, fig.delta_log_x,
                                             "Figure " + std::to_string(figure_id) + ": relative error",
                                             nlkg::cli::canonical_spec(fig.delta_spec)));
            for (const auto& p : {ratio_csv, delta_csv, ratio_svg, delta_svg})
                std::cout << p.string() << "\n";
            return kExitOk;
        }

        if (validate->parsed()) {
            const auto start = std::chrono::steady_clock::now();
            const auto groups = nlkg::cli::run_validation(config.default_tol);
            bool all = true;
            for (const auto& g : groups) {
                all = all && g.passed;
                std::cout << (g.passed ? "PASS " : "FAIL ") << g.name;
                if (!g.passed)
                    std::cout << ": " << g.detail;
                std::cout << "\n";
            }
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::printf("%s in %.2f s\n", all ? "all groups passed" : "validation FAILED", secs);
            return all ? kExitOk : kExitValidation;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
