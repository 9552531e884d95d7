#pragma once

#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiment.hpp"

namespace knotfit {

// Exit codes: 0 success, 2 usage error, 3 input format error, 4 infeasible fit
// on every attempted seed, 1 anything else (I/O and unexpected failures).
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
    kExitFormat = 3,
    kExitInfeasible = 4,
};

namespace detail {

inline void add_curve_options(CLI::App& cmd, CurveSpec& spec, bool& curve_set, bool& a_set,
                              bool& b_set, bool& h_set, bool& t_min_set, bool& t_max_set,
                              bool& samples_set, std::string& angles) {
    static const std::map<std::string, CurveKind> kinds{
        {"epitrochoid", CurveKind::epitrochoid},
        {"spiral", CurveKind::archimedean_spiral},
        {"vivaldi", CurveKind::vivaldi},
        {"csv", CurveKind::csv}};
    cmd.add_option("--curve", spec.kind, "benchmark curve or csv input")
        ->required()
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case))
        ->each([&](const std::string&) { curve_set = true; });
    cmd.add_option("--csv", spec.csv_path, "input CSV path (with --curve csv)");
    cmd.add_option("--a", spec.a, "curve parameter a")->each([&](const std::string&) { a_set = true; });
    cmd.add_option("--b", spec.b, "curve parameter b")->each([&](const std::string&) { b_set = true; });
    cmd.add_option("--h", spec.h, "curve parameter h")->each([&](const std::string&) { h_set = true; });
    cmd.add_option("--t-min", spec.t_min, "parameter range start")
        ->each([&](const std::string&) { t_min_set = true; });
    cmd.add_option("--t-max", spec.t_max, "parameter range end")
        ->each([&](const std::string&) { t_max_set = true; });
    cmd.add_option("--samples", spec.sample_count, "number of generated points")
        ->each([&](const std::string&) { samples_set = true; });
    cmd.add_option("--angles", angles, "t-range unit: degrees|radians (default per curve)")
        ->check(CLI::IsMember({"degrees", "radians"}, CLI::ignore_case));
}

// Flags the user did not pass fall back to the curve's own defaults.
inline CurveSpec resolve_curve_spec(const CurveSpec& parsed, bool a_set, bool b_set, bool h_set,
                                    bool t_min_set, bool t_max_set, bool samples_set,
                                    const std::string& angles) {
    CurveSpec spec = CurveSpec::defaults(parsed.kind);
    spec.csv_path = parsed.csv_path;
    if (a_set) spec.a = parsed.a;
    if (b_set) spec.b = parsed.b;
    if (h_set) spec.h = parsed.h;
    if (t_min_set) spec.t_min = parsed.t_min;
    if (t_max_set) spec.t_max = parsed.t_max;
    if (samples_set) spec.sample_count = parsed.sample_count;
    if (angles == "degrees") spec.angle_unit = AngleUnit::degrees;
    if (angles == "radians") spec.angle_unit = AngleUnit::radians;
    if (spec.kind == CurveKind::csv && spec.csv_path.empty())
        throw CLI::ValidationError("--csv", "required when --curve csv");
    return spec;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv) {
    CLI::App app{"B-spline curve fitting with dolphin-echolocation knot selection"};
    app.require_subcommand(1);
    // long-form help only: -h would collide with the curve parameter --h
    app.set_help_flag("--help", "print help and exit");

    // shared curve flags
    CurveSpec parsed_spec;
    bool curve_set = false, a_set = false, b_set = false, h_set = false;
    bool t_min_set = false, t_max_set = false, samples_set = false;
    std::string angles;

    // --- generate ---
    auto* generate = app.add_subcommand("generate", "emit a benchmark curve as CSV");
    generate->set_help_flag("--help", "print help and exit");
    std::string generate_out;
    detail::add_curve_options(*generate, parsed_spec, curve_set, a_set, b_set, h_set, t_min_set,
                              t_max_set, samples_set, angles);
    generate->add_option("--out", generate_out, "output CSV path")->required();

    // --- fit ---
    auto* fit = app.add_subcommand("fit", "fit a B-spline by optimized knot selection");
    fit->set_help_flag("--help", "print help and exit");
    detail::add_curve_options(*fit, parsed_spec, curve_set, a_set, b_set, h_set, t_min_set,
                              t_max_set, samples_set, angles);
    std::string method = "dea";
    fit->add_option("--method", method, "optimizer: dea|ga|both")
        ->check(CLI::IsMember({"dea", "ga", "both"}, CLI::ignore_case));
    ExperimentConfig config;
    fit->add_option("--iterations", config.iteration_sweep,
                    "iteration counts to sweep (comma separated, ascending)")
        ->required()
        ->delimiter(',');
    fit->add_option("--locations", config.dea.locations_count,
                    "DEA locations / GA population (same search budget)");
    fit->add_option("--seed", config.master_seed, "master seed; row seeds derive from it");
    fit->add_option("--pp1", config.dea.pp_first, "DEA convergence probability at loop 1");
    fit->add_option("--power", config.dea.power, "DEA convergence curve exponent");
    fit->add_option("--re", config.dea.effective_radius, "DEA effective radius");
    static const std::map<std::string, ParamMethod> param_methods{
        {"uniform", ParamMethod::uniform},
        {"chord", ParamMethod::chord_length},
        {"centripetal", ParamMethod::centripetal}};
    fit->add_option("--param", config.param_method, "parameterization method")
        ->transform(CLI::CheckedTransformer(param_methods, CLI::ignore_case));
    fit->add_option("--degree", config.degree, "B-spline degree");
    fit->add_option("--repeats", config.repeats, "independent repeats per sweep entry");
    OutputPaths paths;
    fit->add_option("--out-table", paths.table, "results CSV path (JSON twin alongside)")
        ->required();
    fit->add_option("--out-svg", paths.svg, "overlay SVG path")->required();
    fit->add_option("--out-curve", paths.curve, "fitted-curve JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help and friends
            return app.exit(e);
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        const CurveSpec spec = detail::resolve_curve_spec(
            parsed_spec, a_set, b_set, h_set, t_min_set, t_max_set, samples_set, angles);
        if (generate->parsed()) {
            save_points_csv(generate_out, materialize(spec));
            return kExitOk;
        }
        config.curve = spec;
        config.methods.clear();
        if (method == "dea" || method == "both") config.methods.push_back(Method::dea);
        if (method == "ga" || method == "both") config.methods.push_back(Method::ga);
        const ExperimentOutcome outcome = run_experiment(config);
        emit_outputs(outcome, paths);
        if (!outcome.any_feasible()) {
            std::cerr << "fit: no feasible fit on any attempted seed\n";
            return kExitInfeasible;
        }
        return kExitOk;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        std::cerr << e.what() << '\n';
        return kExitFormat;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitFailure;
    }
}

// Convenience for tests: argv from strings.
inline int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("knotfit");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace knotfit
