#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fractalts::cli {

/// Shared MFDFA flags for `analyze` and `fluct`. Unset tau bounds fall back
/// to the length-derived defaults; the effective grids land in the manifest.
struct GridOptions {
    double q_min = -5.0;
    double q_max = 5.0;
    double q_step = 1.0;
    int detrend_order = 1;
    std::optional<int> tau_min;
    std::optional<int> tau_max;
    int tau_count = 20;
};

struct AnalyzeOptions {
    std::string input;
    std::string column = "value";
    std::optional<std::string> date_column;
    GridOptions grid;
    std::optional<int> fit_min;
    std::optional<int> fit_max;
    std::string out_dir = ".";
    std::string format = "csv";
};

struct FluctOptions {
    std::string input;
    std::string column = "value";
    std::optional<std::string> date_column;
    GridOptions grid;
    std::string out_dir = ".";
    std::string format = "csv";
};

struct XcorrOptions {
    std::vector<std::string> inputs;        // exactly two files
    std::vector<std::string> columns;       // one shared or one per file
    std::vector<std::string> date_columns;  // one shared or one per file
    int max_lag = 30;
    std::string out_dir = ".";
    std::string format = "csv";
};

struct GenerateOptions {
    std::string kind;  // white_noise | fgn | cascade
    std::optional<double> hurst;
    std::optional<double> p;
    std::optional<int> levels;
    std::optional<std::int64_t> length;
    std::uint64_t seed = 0;
    std::string out_file;
};

/// Each command stages every output in memory and commits them atomically
/// (temp file + rename); on failure nothing is left behind. All throw
/// fractalts::Error subclasses; main() turns those into one-line stderr
/// diagnostics and a nonzero exit.
void run_analyze(const AnalyzeOptions& options);
void run_fluct(const FluctOptions& options);
void run_xcorr(const XcorrOptions& options);
void run_generate(const GenerateOptions& options);

/// q_min, q_min + step, ... snapped to exact integers where closer than 1e-9
/// so q = 0 and q = 2 keep their special handling under fractional steps.
std::vector<double> build_q_grid(double q_min, double q_max, double q_step);

}  // namespace fractalts::cli
