#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fractalts/csv.hpp"
#include "fractalts/errors.hpp"
#include "fractalts/mfdfa.hpp"
#include "fractalts/synth.hpp"
#include "fractalts/timeseries.hpp"
#include "fractalts/version.hpp"
#include "fractalts/xcorr.hpp"

namespace py = pybind11;

namespace {

fractalts::TimeSeries make_series(std::vector<double> values, std::string name,
                                  const std::optional<std::vector<std::string>>& dates) {
    if (!dates) {
        return fractalts::TimeSeries(std::move(values), std::move(name));
    }
    std::vector<fractalts::Date> labels;
    labels.reserve(dates->size());
    for (const auto& text : *dates) {
        labels.push_back(fractalts::Date::parse(text));
    }
    return fractalts::TimeSeries(std::move(values), std::move(labels), std::move(name));
}

std::optional<std::vector<std::string>> series_dates(const fractalts::TimeSeries& series) {
    if (!series.has_labels()) {
        return std::nullopt;
    }
    std::vector<std::string> out;
    out.reserve(series.size());
    for (const auto& day : series.labels()) {
        out.push_back(day.to_string());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_fractalts, m) {
    m.doc() = "Multifractal detrended fluctuation analysis of time series";
    m.attr("__version__") = fractalts::kVersion;

    py::register_exception<fractalts::Error>(m, "Error");

    py::class_<fractalts::TimeSeries>(m, "TimeSeries")
        .def(py::init(&make_series), py::arg("values"), py::arg("name") = "",
             py::arg("dates") = std::nullopt)
        .def_property_readonly("values",
                               [](const fractalts::TimeSeries& s) { return s.values(); })
        .def_property_readonly("name", [](const fractalts::TimeSeries& s) { return s.name(); })
        .def_property_readonly("dates", &series_dates)
        .def("__len__", &fractalts::TimeSeries::size);

    py::class_<fractalts::Profile>(m, "Profile")
        .def_property_readonly("values", [](const fractalts::Profile& p) { return p.values(); })
        .def("__len__", &fractalts::Profile::size);

    py::class_<fractalts::AnalysisConfig>(m, "AnalysisConfig")
        .def(py::init<>())
        .def_readwrite("q_grid", &fractalts::AnalysisConfig::q_grid)
        .def_readwrite("tau_grid", &fractalts::AnalysisConfig::tau_grid)
        .def_readwrite("detrend_order", &fractalts::AnalysisConfig::detrend_order)
        .def_readwrite("fit_range", &fractalts::AnalysisConfig::fit_range)
        .def_static("default_q_grid", &fractalts::AnalysisConfig::default_q_grid)
        .def_static("default_tau_grid", &fractalts::AnalysisConfig::default_tau_grid,
                    py::arg("series_length"), py::arg("detrend_order") = 1, py::arg("count") = 20)
        .def_static("defaults", &fractalts::AnalysisConfig::defaults, py::arg("series_length"))
        .def("validate", &fractalts::AnalysisConfig::validate, py::arg("series_length"));

    py::class_<fractalts::FluctuationTable>(m, "FluctuationTable")
        .def_readonly("q_grid", &fractalts::FluctuationTable::q_grid)
        .def_readonly("tau_grid", &fractalts::FluctuationTable::tau_grid)
        .def_readonly("values", &fractalts::FluctuationTable::values)
        .def_readonly("detrend_order", &fractalts::FluctuationTable::detrend_order);

    py::class_<fractalts::HurstSpectrum>(m, "HurstSpectrum")
        .def_readonly("q_grid", &fractalts::HurstSpectrum::q_grid)
        .def_readonly("h", &fractalts::HurstSpectrum::h)
        .def_readonly("r_squared", &fractalts::HurstSpectrum::r_squared)
        .def_readonly("hurst", &fractalts::HurstSpectrum::hurst)
        .def_readonly("delta_h", &fractalts::HurstSpectrum::delta_h);

    py::class_<fractalts::CcfResult>(m, "CcfResult")
        .def_readonly("lags", &fractalts::CcfResult::lags)
        .def_readonly("coefficients", &fractalts::CcfResult::coefficients)
        .def_readonly("band", &fractalts::CcfResult::band)
        .def_readonly("peak_lag", &fractalts::CcfResult::peak_lag)
        .def_readonly("peak_value", &fractalts::CcfResult::peak_value);

    m.def(
        "load_csv",
        [](const std::string& path, const std::string& column,
           const std::optional<std::string>& date_column, std::string name) {
            return fractalts::load_csv(path, column, date_column, std::move(name));
        },
        py::arg("path"), py::arg("column"), py::arg("date_column") = std::nullopt,
        py::arg("name") = "");
    m.def(
        "save_csv",
        [](const fractalts::TimeSeries& series, const std::string& path) {
            fractalts::save_csv(series, path);
        },
        py::arg("series"), py::arg("path"));
    m.def("align_by_date", &fractalts::align_by_date, py::arg("a"), py::arg("b"));
    m.def("build_profile", &fractalts::build_profile, py::arg("series"));
    m.def(
        "detrend_fluctuation",
        [](const std::vector<double>& segment, int order) {
            return fractalts::detrend_fluctuation(
                std::span<const double>(segment.data(), segment.size()), order);
        },
        py::arg("segment"), py::arg("order") = 1);
    m.def("fluctuation_function", &fractalts::fluctuation_function, py::arg("profile"),
          py::arg("config"));
    m.def("fit_scaling", &fractalts::fit_scaling, py::arg("table"),
          py::arg("fit_range") = std::nullopt);
    m.def("analyze", &fractalts::analyze, py::arg("series"), py::arg("config"));
    m.def(
        "analyze",
        [](const fractalts::TimeSeries& series) {
            return fractalts::analyze(series, fractalts::AnalysisConfig::defaults(series.size()));
        },
        py::arg("series"));
    m.def("white_noise", &fractalts::white_noise, py::arg("length"), py::arg("seed"));
    m.def("fgn_autocovariance", &fractalts::fgn_autocovariance, py::arg("hurst"), py::arg("lag"));
    m.def("fgn", &fractalts::fgn, py::arg("hurst"), py::arg("length"), py::arg("seed"));
    m.def("cascade", &fractalts::cascade, py::arg("p"), py::arg("levels"), py::arg("seed"));
    m.def("cascade_exact_hq", &fractalts::cascade_exact_hq, py::arg("p"), py::arg("q"));
    m.def("cross_correlation", &fractalts::cross_correlation, py::arg("a"), py::arg("b"),
          py::arg("max_lag"));
    m.def("pearson", &fractalts::pearson, py::arg("a"), py::arg("b"));
}
