#include "fractalts/serialize.hpp"

#include <sstream>

#include "json.hpp"

#include "fractalts/csv.hpp"

namespace fractalts {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string fluctuation_to_csv(const FluctuationTable& table) {
    std::ostringstream out;
    out << "q,tau,F\n";
    for (std::size_t qi = 0; qi < table.q_grid.size(); ++qi) {
        for (std::size_t ti = 0; ti < table.tau_grid.size(); ++ti) {
            out << format_double(table.q_grid[qi]) << ',' << table.tau_grid[ti] << ','
                << format_double(table.values[qi][ti]) << '\n';
        }
    }
    return out.str();
}

std::string spectrum_to_csv(const HurstSpectrum& spectrum) {
    std::ostringstream out;
    out << "q,h,r2\n";
    for (std::size_t qi = 0; qi < spectrum.q_grid.size(); ++qi) {
        out << format_double(spectrum.q_grid[qi]) << ',' << format_double(spectrum.h[qi]) << ','
            << format_double(spectrum.r_squared[qi]) << '\n';
    }
    return out.str();
}

std::string ccf_to_csv(const CcfResult& result) {
    std::ostringstream out;
    out << "lag,ccf,band\n";
    for (std::size_t i = 0; i < result.lags.size(); ++i) {
        out << result.lags[i] << ',' << format_double(result.coefficients[i]) << ','
            << format_double(result.band[i]) << '\n';
    }
    return out.str();
}

std::string fluctuation_to_json(const FluctuationTable& table) {
    ordered_json doc;
    doc["q_grid"] = table.q_grid;
    doc["tau_grid"] = table.tau_grid;
    doc["values"] = table.values;
    doc["detrend_order"] = table.detrend_order;
    return dump(doc);
}

std::string spectrum_to_json(const HurstSpectrum& spectrum) {
    ordered_json doc;
    doc["q_grid"] = spectrum.q_grid;
    doc["h"] = spectrum.h;
    doc["r_squared"] = spectrum.r_squared;
    if (spectrum.hurst)
        doc["hurst"] = *spectrum.hurst;
    else
        doc["hurst"] = nullptr;
    doc["delta_h"] = spectrum.delta_h;
    return dump(doc);
}

std::string ccf_to_json(const CcfResult& result) {
    ordered_json doc;
    doc["lags"] = result.lags;
    doc["coefficients"] = result.coefficients;
    doc["band"] = result.band;
    doc["peak_lag"] = result.peak_lag;
    doc["peak_value"] = result.peak_value;
    return dump(doc);
}

}  // namespace fractalts
