#include "fractalts/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace fractalts {

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::optional<double> parse_double(const std::string& token) {
    if (token.empty()) {
        return std::nullopt;
    }
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return value;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.pop_back();
    }
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
        ++i;
    }
    return s.substr(i);
}

std::size_t resolve_column(const std::vector<std::string>& header, const std::string& column) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == column) {
            return i;
        }
    }
    const bool numeric =
        !column.empty() && std::all_of(column.begin(), column.end(),
                                       [](unsigned char c) { return std::isdigit(c); });
    if (numeric) {
        const std::size_t index = std::stoul(column);
        if (index < header.size()) {
            return index;
        }
    }
    throw ParseError(0, column, "column '" + column + "' not found in header");
}

}  // namespace

TimeSeries load_csv(const std::filesystem::path& path, const std::string& column,
                    const std::optional<std::string>& date_column, std::string name) {
    std::ifstream in(path);
    if (!in) {
        throw FileNotFound("no such file: " + path.string());
    }
    if (name.empty()) {
        name = path.stem().string();
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(0, column, "empty CSV: " + path.string());
    }
    std::vector<std::string> header = split_row(line);
    for (auto& h : header) {
        h = strip(h);
    }
    const std::size_t value_idx = resolve_column(header, column);
    const std::string value_name = header[value_idx];
    std::size_t date_idx = 0;
    std::string date_name;
    if (date_column) {
        date_idx = resolve_column(header, *date_column);
        date_name = header[date_idx];
    }

    std::vector<double> values;
    std::vector<Date> dates;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (strip(line).empty()) {
            continue;
        }
        ++row;
        const auto cells = split_row(line);
        if (value_idx >= cells.size()) {
            throw ParseError(row, value_name, "row has too few cells");
        }
        const std::string token = strip(cells[value_idx]);
        const auto parsed = parse_double(token);
        if (!parsed || !std::isfinite(*parsed)) {
            throw ParseError(row, value_name, "cannot parse '" + token + "' as a number (row " +
                                                  std::to_string(row) + ", column '" + value_name +
                                                  "')");
        }
        values.push_back(*parsed);
        if (date_column) {
            if (date_idx >= cells.size()) {
                throw ParseError(row, date_name, "row has too few cells");
            }
            const std::string dtoken = strip(cells[date_idx]);
            try {
                dates.push_back(Date::parse(dtoken));
            } catch (const InvalidArgument& e) {
                throw ParseError(row, date_name, e.what());
            }
        }
    }
    if (values.empty()) {
        throw ParseError(0, value_name, "CSV has no data rows: " + path.string());
    }
    if (date_column) {
        return TimeSeries(std::move(values), std::move(dates), std::move(name));
    }
    return TimeSeries(std::move(values), std::move(name));
}

std::string series_to_csv(const TimeSeries& series) {
    std::ostringstream out;
    const std::string value_name = series.name().empty() ? "value" : series.name();
    if (series.has_labels()) {
        out << "date," << value_name << "\n";
        for (std::size_t i = 0; i < series.size(); ++i) {
            out << series.labels()[i].to_string() << ',' << format_double(series.values()[i])
                << "\n";
        }
    } else {
        out << "t," << value_name << "\n";
        for (std::size_t i = 0; i < series.size(); ++i) {
            out << i << ',' << format_double(series.values()[i]) << "\n";
        }
    }
    return out.str();
}

void save_csv(const TimeSeries& series, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open for writing: " + path.string());
    }
    out << series_to_csv(series);
    if (!out.good()) {
        throw Error("write failed: " + path.string());
    }
}

}  // namespace fractalts
