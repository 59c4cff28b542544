#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fractalts/timeseries.hpp"

namespace fractalts {

/// Reads one column of a headered CSV file as a TimeSeries. `column` selects
/// by header name, or by 0-based index when it is all digits. An optional
/// `date_column` is parsed as ISO-8601 dates and must be strictly increasing.
/// The series name defaults to the file stem.
///
/// Throws FileNotFound, ParseError (row is 1-based over data rows),
/// NonMonotonicDates.
TimeSeries load_csv(const std::filesystem::path& path, const std::string& column,
                    const std::optional<std::string>& date_column = std::nullopt,
                    std::string name = "");

/// "date,<name>" (labeled) or "t,<name>" (unlabeled) with values at 17
/// significant digits, which round-trips doubles exactly.
std::string series_to_csv(const TimeSeries& series);

/// series_to_csv written to a file.
void save_csv(const TimeSeries& series, const std::filesystem::path& path);

/// "%.17g"
std::string format_double(double value);

/// Strict double parse of a whole token; nullopt on failure or trailing junk.
std::optional<double> parse_double(const std::string& token);

}  // namespace fractalts
