#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"
#include "fractalts/errors.hpp"
#include "fractalts/version.hpp"

namespace {

void add_grid_flags(CLI::App* cmd, fractalts::cli::GridOptions& grid) {
    cmd->add_option("--q-min", grid.q_min, "Smallest moment order q")->capture_default_str();
    cmd->add_option("--q-max", grid.q_max, "Largest moment order q")->capture_default_str();
    cmd->add_option("--q-step", grid.q_step, "Spacing of the q grid")->capture_default_str();
    cmd->add_option("--order", grid.detrend_order, "Detrending polynomial order")
        ->capture_default_str();
    cmd->add_option("--tau-min", grid.tau_min, "Smallest segment length (default max(order+2, 10))");
    cmd->add_option("--tau-max", grid.tau_max, "Largest segment length (default n/4)");
    cmd->add_option("--tau-count", grid.tau_count, "Number of log-spaced segment lengths")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multifractal detrended fluctuation analysis of time series"};
    app.set_help_flag("--help", "Print help and exit");
    app.set_version_flag("--version", fractalts::kVersion);
    app.require_subcommand(1);

    fractalts::cli::AnalyzeOptions analyze_opts;
    auto* analyze =
        app.add_subcommand("analyze", "Estimate h(q), the Hurst exponent and delta_h from a CSV");
    analyze->add_option("--input", analyze_opts.input, "Input CSV file")->required();
    analyze->add_option("--column", analyze_opts.column, "Value column name or 0-based index")
        ->capture_default_str();
    analyze->add_option("--date-column", analyze_opts.date_column,
                        "Date column (ISO-8601, strictly increasing)");
    add_grid_flags(analyze, analyze_opts.grid);
    analyze->add_option("--fit-min", analyze_opts.fit_min,
                        "Smallest tau used by the scaling regression");
    analyze->add_option("--fit-max", analyze_opts.fit_max,
                        "Largest tau used by the scaling regression");
    analyze->add_option("--out", analyze_opts.out_dir, "Output directory")->capture_default_str();
    analyze->add_option("--format", analyze_opts.format, "Table format for <name>.hq.*")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    analyze->callback([&analyze_opts] { fractalts::cli::run_analyze(analyze_opts); });

    fractalts::cli::FluctOptions fluct_opts;
    auto* fluct =
        app.add_subcommand("fluct", "Emit the fluctuation function F_q(tau) for plotting");
    fluct->add_option("--input", fluct_opts.input, "Input CSV file")->required();
    fluct->add_option("--column", fluct_opts.column, "Value column name or 0-based index")
        ->capture_default_str();
    fluct->add_option("--date-column", fluct_opts.date_column,
                      "Date column (ISO-8601, strictly increasing)");
    add_grid_flags(fluct, fluct_opts.grid);
    fluct->add_option("--out", fluct_opts.out_dir, "Output directory")->capture_default_str();
    fluct->add_option("--format", fluct_opts.format, "Table format for <name>.fluct.*")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    fluct->callback([&fluct_opts] { fractalts::cli::run_fluct(fluct_opts); });

    fractalts::cli::XcorrOptions xcorr_opts;
    auto* xcorr = app.add_subcommand(
        "xcorr", "Lagged cross-correlation of two date-aligned CSV series");
    xcorr->add_option("--input", xcorr_opts.inputs, "Input CSV files (exactly two)")->required();
    xcorr->add_option("--column", xcorr_opts.columns,
                      "Value column per file (one shared or one per file; default value)");
    xcorr->add_option("--date-column", xcorr_opts.date_columns,
                      "Date column per file (one shared or one per file; default date)");
    xcorr->add_option("--max-lag", xcorr_opts.max_lag, "Largest lag in days")
        ->capture_default_str();
    xcorr->add_option("--out", xcorr_opts.out_dir, "Output directory")->capture_default_str();
    xcorr->add_option("--format", xcorr_opts.format, "Table format for xcorr.*")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    xcorr->callback([&xcorr_opts] { fractalts::cli::run_xcorr(xcorr_opts); });

    fractalts::cli::GenerateOptions generate_opts;
    auto* generate = app.add_subcommand(
        "generate", "Write a synthetic series (white noise, fGn or binomial cascade)");
    generate->set_help_flag("--help", "Print help and exit");
    generate->add_option("--kind", generate_opts.kind, "white_noise, fgn or cascade")->required();
    generate->add_option("--h", generate_opts.hurst, "Hurst exponent for fgn, 0 < H < 1");
    generate->add_option("--p", generate_opts.p, "Cascade weight, 0 < p <= 0.5");
    generate->add_option("--levels", generate_opts.levels, "Cascade depth (length 2^levels)");
    generate->add_option("--length", generate_opts.length, "Series length");
    generate->add_option("--seed", generate_opts.seed, "Random seed")->capture_default_str();
    generate->add_option("--out", generate_opts.out_file, "Output CSV file")->required();
    generate->callback([&generate_opts] { fractalts::cli::run_generate(generate_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const fractalts::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
