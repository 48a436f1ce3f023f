/*
* Copyright (C) 2026 The fracepi authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "fracepi/cli.h"
#include "fracepi/analysis.h"
#include "fracepi/abc_ivp.h"
#include "fracepi/calibrate.h"
#include "fracepi/config.h"
#include "fracepi/csv_io.h"
#include "fracepi/errors.h"
#include "fracepi/ladm.h"
#include "fracepi/special_functions.h"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace fracepi
{

namespace
{

/// Writes to the named file, or to `fallback` when no path was given.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& writer)
{
    if (path.empty()) {
        writer(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot write '" + path + "'");
    }
    writer(file);
    if (!file) {
        throw IoError("failed writing '" + path + "'");
    }
}

std::vector<std::string> split_list(const std::string& list)
{
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

struct Overrides {
    std::optional<double> theta;
    std::optional<double> b_norm;
};

void add_overrides(CLI::App* cmd, Overrides& o)
{
    cmd->add_option("--theta", o.theta, "Fractional order in (0, 1], overrides the config");
    cmd->add_option("--b-norm", o.b_norm, "Normalization ABC(theta), overrides the config");
}

void apply(ScenarioConfig& config, const Overrides& o)
{
    if (o.theta) {
        config.theta = *o.theta;
    }
    if (o.b_norm) {
        config.b_norm = *o.b_norm;
    }
    if (!(config.b_norm > 0.0)) {
        throw RangeError("b_norm must be positive");
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fractional-order P-I-Q epidemic model with ABC derivatives", "fracepi"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides overrides;

    auto* r0_cmd = app.add_subcommand("r0", "Print the basic reproduction number");
    r0_cmd->add_option("--config", config_path, "Scenario file")->required();

    std::string sens_mode = "analytic";
    auto* sens_cmd        = app.add_subcommand("sensitivity", "Normalized sensitivity indices of R0 (CSV)");
    sens_cmd->add_option("--config", config_path, "Scenario file")->required();
    sens_cmd->add_option("--mode", sens_mode, "analytic or fd")->check(CLI::IsMember({"analytic", "fd"}));

    std::optional<std::size_t> order;
    double t_max        = 1.0;
    std::size_t samples = 10;
    bool print_iterates = false;
    bool every_term     = false;
    std::string out_path;
    auto* series_cmd = app.add_subcommand("series", "Laplace-Adomian series solution (CSV t,P,I,Q)");
    series_cmd->add_option("--config", config_path, "Scenario file")->required();
    add_overrides(series_cmd, overrides);
    series_cmd->add_option("--order", order, "Number of iterates beyond the initial values");
    series_cmd->add_option("--t-max", t_max, "Last sample time")->check(CLI::PositiveNumber);
    series_cmd->add_option("--samples", samples, "Number of sample intervals")->check(CLI::PositiveNumber);
    series_cmd->add_flag("--print", print_iterates, "Print the iterates instead of the CSV table");
    series_cmd->add_flag("--source-every-term", every_term, "Inject lambda into every iterate");
    series_cmd->add_option("--out", out_path, "CSV output file");

    std::optional<double> t_end;
    std::optional<std::size_t> steps;
    std::string diag_path;
    auto* sim_cmd = app.add_subcommand("simulate", "Numerical solution of the Volterra form (CSV t,P,I,Q)");
    sim_cmd->add_option("--config", config_path, "Scenario file")->required();
    add_overrides(sim_cmd, overrides);
    sim_cmd->add_option("--t-end", t_end, "Horizon in days");
    sim_cmd->add_option("--steps", steps, "Number of grid steps");
    sim_cmd->add_option("--out", out_path, "CSV output file");
    sim_cmd->add_option("--diagnostics", diag_path, "Per-step diagnostics CSV file");

    double tau = 0.0;
    std::vector<double> box;
    auto* check_cmd = app.add_subcommand("check", "Contraction and Ulam-Hyers stability constants");
    check_cmd->add_option("--config", config_path, "Scenario file")->required();
    add_overrides(check_cmd, overrides);
    check_cmd->add_option("--tau", tau, "Horizon tau")->required()->check(CLI::PositiveNumber);
    check_cmd->add_option("--box", box, "State bounds P,I,Q")->required()->delimiter(',')->expected(3);

    std::string data_path;
    std::string free_list = "gamma,mu,sigma,eta";
    std::string residual_path;
    std::size_t starts        = 1;
    std::uint64_t seed        = 0;
    std::size_t steps_per_gap = 20;
    auto* fit_cmd = app.add_subcommand("fit", "Least-squares calibration against a t,cases CSV");
    fit_cmd->add_option("--data", data_path, "Case counts CSV (header t,cases)")->required();
    fit_cmd->add_option("--config", config_path, "Scenario file with starting values")->required();
    add_overrides(fit_cmd, overrides);
    fit_cmd->add_option("--free", free_list, "Comma-separated rates to fit");
    fit_cmd->add_option("--out", out_path, "Fitted scenario file");
    fit_cmd->add_option("--residuals", residual_path, "Residual table CSV file");
    fit_cmd->add_option("--starts", starts, "Number of starts")->check(CLI::PositiveNumber);
    fit_cmd->add_option("--seed", seed, "Seed for the random starts");
    fit_cmd->add_option("--steps-per-gap", steps_per_gap, "Solver steps between adjacent observations")
        ->check(CLI::PositiveNumber);

    double alpha = 1.0, beta = 1.0, z = 0.0;
    auto* ml_cmd = app.add_subcommand("ml", "Evaluate the Mittag-Leffler function E_{alpha,beta}(z)");
    ml_cmd->add_option("--alpha", alpha)->required();
    ml_cmd->add_option("--beta", beta)->required();
    ml_cmd->add_option("--z", z)->required();

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    try {
        if (*ml_cmd) {
            out << format_number(mittag_leffler(MLParams(alpha, beta), z), 15) << '\n';
            return exit_ok;
        }

        ScenarioConfig config = load_config(config_path);
        apply(config, overrides);
        const FractionalOrder theta(config.theta);

        if (*r0_cmd) {
            out << format_number(r0(config.params), 7) << '\n';
        }
        else if (*sens_cmd) {
            const auto mode   = sens_mode == "fd" ? SensitivityMode::finite_difference : SensitivityMode::analytic;
            const auto report = sensitivity_indices(config.params, mode);
            out << "parameter,index\n";
            char buf[64];
            for (const auto& e : report.entries) {
                std::snprintf(buf, sizeof(buf), "%.8f", e.index);
                out << e.name << ',' << buf << '\n';
            }
        }
        else if (*series_cmd) {
            const auto placement = every_term || config.source_every_term ? SourcePlacement::every_term
                                                                          : SourcePlacement::first_term;
            const auto series =
                ladm_expand(config.params, config.init, theta, config.b_norm, order.value_or(config.order), placement);
            if (print_iterates) {
                for (std::size_t n = 0; n <= series.order(); ++n) {
                    out << "P_" << n << "(t) = " << series.p_terms[n].to_string() << '\n';
                    out << "I_" << n << "(t) = " << series.i_terms[n].to_string() << '\n';
                    out << "Q_" << n << "(t) = " << series.q_terms[n].to_string() << '\n';
                }
                if (!out_path.empty()) {
                    emit(out_path, out, [&](std::ostream& os) {
                        write_series_csv(os, series, t_max, samples);
                    });
                }
            }
            else {
                emit(out_path, out, [&](std::ostream& os) {
                    write_series_csv(os, series, t_max, samples);
                });
            }
        }
        else if (*sim_cmd) {
            const Grid grid(t_end.value_or(config.t_end), steps.value_or(config.steps));
            const auto traj = solve_abc(config.params, config.init, theta, config.b_norm, grid);
            emit(out_path, out, [&](std::ostream& os) {
                write_trajectory_csv(os, traj);
            });
            if (!diag_path.empty()) {
                emit(diag_path, out, [&](std::ostream& os) {
                    write_diagnostics_csv(os, traj);
                });
            }
        }
        else if (*check_cmd) {
            const StateBox state_box{box[0], box[1], box[2]};
            const auto report = stability_report(config.params, state_box, theta, tau, config.b_norm);
            out << "L_phi = " << format_number(report.l_phi, 10) << '\n';
            out << "Xi = " << format_number(report.xi, 10) << '\n';
            out << "Xi < 1: " << (report.xi_ok ? "yes (unique solution, Ulam-Hyers stable)" : "no") << '\n';
            out << "Omega per unit epsilon = " << format_number(report.omega_bound, 10) << '\n';
        }
        else if (*fit_cmd) {
            const CaseSeries data = parse_case_series(read_file(data_path), data_path);
            CalibrationSpec spec;
            spec.free          = split_list(free_list);
            spec.params        = config.params;
            spec.init          = config.init;
            spec.theta         = theta;
            spec.b_norm        = config.b_norm;
            spec.steps_per_gap = steps_per_gap;
            const auto result  = fit_multistart(spec, data, starts, seed);

            ScenarioConfig fitted = config;
            fitted.params         = result.params;
            const std::string rendered = render_config(fitted);
            if (out_path.empty()) {
                out << rendered;
            }
            else {
                emit(out_path, out, [&](std::ostream& os) {
                    os << rendered;
                });
                out << "loss = " << format_number(result.loss, 17) << '\n';
                out << "iterations = " << result.iterations << '\n';
                out << "converged = " << (result.converged ? "true" : "false") << '\n';
            }
            if (!residual_path.empty()) {
                const auto rows = residual_report(result.params, data, theta, config.init, config.b_norm, steps_per_gap);
                emit(residual_path, out, [&](std::ostream& os) {
                    write_residuals_csv(os, rows);
                });
            }
        }
        return exit_ok;
    }
    catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    }
    catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    }
    catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    }
    catch (const Error& e) {
        err << "numeric error: " << e.what() << '\n';
        return exit_numeric_error;
    }
}

} // namespace fracepi
