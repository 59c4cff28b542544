#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>
#include <utility>

#include "json.hpp"

#include "fractalts/csv.hpp"
#include "fractalts/errors.hpp"
#include "fractalts/mfdfa.hpp"
#include "fractalts/serialize.hpp"
#include "fractalts/synth.hpp"
#include "fractalts/timeseries.hpp"
#include "fractalts/version.hpp"
#include "fractalts/xcorr.hpp"

namespace fractalts::cli {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string dump_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string resolved(const std::string& path) {
    std::error_code ec;
    const fs::path abs = fs::absolute(path, ec);
    if (ec) {
        return path;
    }
    return abs.lexically_normal().string();
}

/// Stages outputs in memory, then writes each next to its destination and
/// renames into place. A failure mid-commit removes both the temp files and
/// any outputs already renamed, so a command never leaves partial results.
class OutputSet {
public:
    explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}

    void stage(const std::string& filename, std::string content) {
        staged_.emplace_back(filename, std::move(content));
    }

    std::vector<fs::path> commit() {
        if (!dir_.empty()) {
            std::error_code ec;
            fs::create_directories(dir_, ec);
        }
        std::vector<fs::path> temps;
        std::vector<fs::path> done;
        try {
            for (const auto& [name, content] : staged_) {
                fs::path tmp = target(name);
                tmp += ".tmp";
                std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
                if (!out) {
                    throw Error("cannot open for writing: " + tmp.string());
                }
                temps.push_back(tmp);
                out << content;
                out.flush();
                if (!out.good()) {
                    throw Error("write failed: " + tmp.string());
                }
            }
            for (std::size_t i = 0; i < staged_.size(); ++i) {
                const fs::path final_path = target(staged_[i].first);
                fs::rename(temps[i], final_path);
                done.push_back(final_path);
            }
        } catch (...) {
            std::error_code ec;
            for (const auto& p : temps) {
                fs::remove(p, ec);
            }
            for (const auto& p : done) {
                fs::remove(p, ec);
            }
            throw;
        }
        return done;
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(staged_.size());
        for (const auto& [name, content] : staged_) {
            out.push_back(name);
        }
        return out;
    }

private:
    fs::path target(const std::string& name) const {
        return dir_.empty() ? fs::path(name) : dir_ / name;
    }

    fs::path dir_;
    std::vector<std::pair<std::string, std::string>> staged_;
};

void report(const std::vector<fs::path>& written) {
    for (const auto& p : written) {
        std::cout << "wrote " << p.string() << "\n";
    }
}

AnalysisConfig config_from_grid(const GridOptions& grid, std::size_t series_length) {
    AnalysisConfig cfg;
    cfg.q_grid = build_q_grid(grid.q_min, grid.q_max, grid.q_step);
    cfg.detrend_order = grid.detrend_order;
    if (grid.tau_min || grid.tau_max) {
        const int lo = grid.tau_min.value_or(std::max(grid.detrend_order + 2, 10));
        const int hi = grid.tau_max.value_or(static_cast<int>(series_length / 4));
        cfg.tau_grid = log_spaced_taus(lo, hi, grid.tau_count);
    } else {
        cfg.tau_grid =
            AnalysisConfig::default_tau_grid(series_length, grid.detrend_order, grid.tau_count);
    }
    return cfg;
}

ordered_json grid_config_json(const AnalysisConfig& cfg, const std::string& column,
                              const std::optional<std::string>& date_column,
                              const std::string& format) {
    ordered_json config;
    config["column"] = column;
    if (date_column) {
        config["date_column"] = *date_column;
    } else {
        config["date_column"] = nullptr;
    }
    config["q_grid"] = cfg.q_grid;
    config["tau_grid"] = cfg.tau_grid;
    config["detrend_order"] = cfg.detrend_order;
    if (cfg.fit_range) {
        config["fit_range"] = ordered_json::array({cfg.fit_range->first, cfg.fit_range->second});
    } else {
        config["fit_range"] = nullptr;
    }
    config["format"] = format;
    return config;
}

ordered_json manifest_json(const std::string& command, const std::vector<std::string>& inputs,
                           ordered_json config, const std::optional<std::uint64_t>& seed,
                           const std::vector<std::string>& outputs) {
    ordered_json manifest;
    manifest["command"] = command;
    ordered_json resolved_inputs = ordered_json::array();
    for (const auto& in : inputs) {
        resolved_inputs.push_back(resolved(in));
    }
    manifest["inputs"] = resolved_inputs;
    manifest["config"] = std::move(config);
    manifest["tool_version"] = kVersion;
    if (seed) {
        manifest["seed"] = *seed;
    } else {
        manifest["seed"] = nullptr;
    }
    manifest["outputs"] = outputs;
    return manifest;
}

std::string summary_json(const TimeSeries& series, const HurstSpectrum& spectrum) {
    ordered_json doc;
    doc["name"] = series.name();
    doc["n"] = series.size();
    doc["q_min"] = spectrum.q_grid.front();
    doc["q_max"] = spectrum.q_grid.back();
    doc["h_q_min"] = spectrum.h.front();
    doc["h_q_max"] = spectrum.h.back();
    if (spectrum.hurst) {
        doc["hurst"] = *spectrum.hurst;
    }
    doc["delta_h"] = spectrum.delta_h;
    return dump_json(doc);
}

std::string fluct_csv(const FluctuationTable& table) {
    std::ostringstream out;
    out << "q,tau,log_tau,log_F\n";
    for (std::size_t qi = 0; qi < table.q_grid.size(); ++qi) {
        for (std::size_t ti = 0; ti < table.tau_grid.size(); ++ti) {
            const int tau = table.tau_grid[ti];
            const double value = table.values[qi][ti];
            out << format_double(table.q_grid[qi]) << ',' << tau << ','
                << format_double(std::log(static_cast<double>(tau))) << ','
                << format_double(std::log(value)) << '\n';
        }
    }
    return out.str();
}

int levels_from_length(std::int64_t length) {
    if (length < 2 || (length & (length - 1)) != 0) {
        throw InvalidArgument("cascade length must be a power of two >= 2, got " +
                              std::to_string(length));
    }
    int levels = 0;
    while ((std::int64_t{1} << levels) < length) {
        ++levels;
    }
    return levels;
}

void require(bool condition, const char* message) {
    if (!condition) {
        throw InvalidArgument(message);
    }
}

TimeSeries make_series(const GenerateOptions& options) {
    if (options.kind == "white_noise") {
        require(options.length.has_value(), "--length is required for kind white_noise");
        require(!options.hurst && !options.p && !options.levels,
                "--h, --p and --levels do not apply to kind white_noise");
        require(*options.length >= 1, "--length must be positive");
        return white_noise(static_cast<std::size_t>(*options.length), options.seed);
    }
    if (options.kind == "fgn") {
        require(options.hurst.has_value(), "--h is required for kind fgn");
        require(options.length.has_value(), "--length is required for kind fgn");
        require(!options.p && !options.levels, "--p and --levels do not apply to kind fgn");
        require(*options.length >= 1, "--length must be positive");
        return fgn(*options.hurst, static_cast<std::size_t>(*options.length), options.seed);
    }
    if (options.kind == "cascade") {
        require(options.p.has_value(), "--p is required for kind cascade");
        require(!options.hurst, "--h does not apply to kind cascade");
        require(options.levels.has_value() || options.length.has_value(),
                "--levels or --length is required for kind cascade");
        const int levels =
            options.levels ? *options.levels : levels_from_length(*options.length);
        if (options.levels && options.length) {
            require(levels < 63 && *options.length == (std::int64_t{1} << levels),
                    "--length does not equal 2^levels");
        }
        return cascade(*options.p, levels, options.seed);
    }
    throw InvalidArgument("unknown kind '" + options.kind +
                          "' (expected white_noise, fgn or cascade)");
}

}  // namespace

std::vector<double> build_q_grid(double q_min, double q_max, double q_step) {
    if (!std::isfinite(q_min) || !std::isfinite(q_max) || !std::isfinite(q_step)) {
        throw ConfigInvalid("q range must be finite");
    }
    if (q_step <= 0.0) {
        throw ConfigInvalid("--q-step must be positive");
    }
    if (q_max < q_min) {
        throw ConfigInvalid("--q-max must not be below --q-min");
    }
    const auto count = static_cast<std::size_t>(std::floor((q_max - q_min) / q_step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double q = q_min + static_cast<double>(i) * q_step;
        const double rounded = std::round(q);
        if (std::abs(q - rounded) < 1e-9) {
            q = rounded;
        }
        grid.push_back(q);
    }
    return grid;
}

void run_analyze(const AnalyzeOptions& options) {
    const TimeSeries series = load_csv(options.input, options.column, options.date_column);
    AnalysisConfig cfg = config_from_grid(options.grid, series.size());
    if (options.fit_min || options.fit_max) {
        cfg.fit_range = std::pair<int, int>(options.fit_min.value_or(cfg.tau_grid.front()),
                                            options.fit_max.value_or(cfg.tau_grid.back()));
    }
    cfg.validate(series.size());
    const HurstSpectrum spectrum = analyze(series, cfg);
    if (!spectrum.hurst) {
        std::cerr << "warning: q grid does not contain q = 2; summary omits the Hurst exponent\n";
    }

    const std::string& name = series.name();
    OutputSet out{fs::path(options.out_dir)};
    if (options.format == "json") {
        out.stage(name + ".hq.json", spectrum_to_json(spectrum));
    } else {
        out.stage(name + ".hq.csv", spectrum_to_csv(spectrum));
    }
    out.stage(name + ".summary.json", summary_json(series, spectrum));
    const auto manifest =
        manifest_json("analyze", {options.input},
                      grid_config_json(cfg, options.column, options.date_column, options.format),
                      std::nullopt, out.names());
    out.stage(name + ".analyze.manifest.json", dump_json(manifest));
    report(out.commit());
}

void run_fluct(const FluctOptions& options) {
    const TimeSeries series = load_csv(options.input, options.column, options.date_column);
    AnalysisConfig cfg = config_from_grid(options.grid, series.size());
    cfg.validate(series.size());
    const FluctuationTable table = fluctuation_function(build_profile(series), cfg);

    const std::string& name = series.name();
    OutputSet out{fs::path(options.out_dir)};
    if (options.format == "json") {
        out.stage(name + ".fluct.json", fluctuation_to_json(table));
    } else {
        out.stage(name + ".fluct.csv", fluct_csv(table));
    }
    const auto manifest =
        manifest_json("fluct", {options.input},
                      grid_config_json(cfg, options.column, options.date_column, options.format),
                      std::nullopt, out.names());
    out.stage(name + ".fluct.manifest.json", dump_json(manifest));
    report(out.commit());
}

void run_xcorr(const XcorrOptions& options) {
    if (options.inputs.size() != 2) {
        throw InvalidArgument("xcorr needs exactly two --input files");
    }
    if (options.columns.size() > 2) {
        throw InvalidArgument("--column accepts at most two values");
    }
    if (options.date_columns.size() > 2) {
        throw InvalidArgument("--date-column accepts at most two values");
    }
    const auto pick = [](const std::vector<std::string>& given, std::size_t i,
                         const char* fallback) -> std::string {
        if (given.empty()) {
            return fallback;
        }
        return given.size() == 1 ? given[0] : given[i];
    };
    const std::string col_a = pick(options.columns, 0, "value");
    const std::string col_b = pick(options.columns, 1, "value");
    const std::string date_a = pick(options.date_columns, 0, "date");
    const std::string date_b = pick(options.date_columns, 1, "date");

    const TimeSeries a = load_csv(options.inputs[0], col_a, date_a);
    const TimeSeries b = load_csv(options.inputs[1], col_b, date_b);
    const auto [aligned_a, aligned_b] = align_by_date(a, b);
    const CcfResult result = cross_correlation(aligned_a, aligned_b, options.max_lag);

    OutputSet out{fs::path(options.out_dir)};
    if (options.format == "json") {
        out.stage("xcorr.json", ccf_to_json(result));
    } else {
        out.stage("xcorr.csv", ccf_to_csv(result));
    }
    ordered_json summary;
    summary["series_a"] = a.name();
    summary["series_b"] = b.name();
    summary["n_overlap"] = aligned_a.size();
    summary["max_lag"] = options.max_lag;
    summary["peak_lag"] = result.peak_lag;
    summary["peak_value"] = result.peak_value;
    out.stage("xcorr.summary.json", dump_json(summary));

    ordered_json config;
    config["column_a"] = col_a;
    config["column_b"] = col_b;
    config["date_column_a"] = date_a;
    config["date_column_b"] = date_b;
    config["max_lag"] = options.max_lag;
    config["format"] = options.format;
    const auto manifest = manifest_json("xcorr", options.inputs, std::move(config), std::nullopt,
                                        out.names());
    out.stage("xcorr.manifest.json", dump_json(manifest));
    report(out.commit());
}

void run_generate(const GenerateOptions& options) {
    require(!options.out_file.empty(), "--out is required");
    const TimeSeries raw = make_series(options);

    std::vector<Date> dates;
    dates.reserve(raw.size());
    Date day(2000, 1, 1);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        dates.push_back(day);
        day = day.next_day();
    }
    const TimeSeries series(raw.values(), std::move(dates), "value");

    const fs::path out_path(options.out_file);
    OutputSet out{out_path.parent_path()};
    out.stage(out_path.filename().string(), series_to_csv(series));

    ordered_json config;
    config["kind"] = options.kind;
    if (options.hurst) {
        config["h"] = *options.hurst;
    } else {
        config["h"] = nullptr;
    }
    if (options.p) {
        config["p"] = *options.p;
    } else {
        config["p"] = nullptr;
    }
    if (options.levels) {
        config["levels"] = *options.levels;
    } else if (options.kind == "cascade") {
        config["levels"] = levels_from_length(*options.length);
    } else {
        config["levels"] = nullptr;
    }
    config["length"] = series.size();
    const auto manifest = manifest_json("generate", {}, std::move(config), options.seed,
                                        out.names());
    out.stage(out_path.stem().string() + ".manifest.json", dump_json(manifest));
    report(out.commit());
}

}  // namespace fractalts::cli
