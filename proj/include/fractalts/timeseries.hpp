#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fractalts/errors.hpp"

namespace fractalts {

/// Calendar date (day resolution), serialized as ISO-8601 "YYYY-MM-DD".
class Date {
public:
    Date() = default;
    explicit Date(std::chrono::sys_days day) : day_(day) {}
    Date(int year, unsigned month, unsigned dom);

    /// Parses strict "YYYY-MM-DD"; throws InvalidArgument on malformed input
    /// or a non-existent calendar day.
    static Date parse(const std::string& text);

    std::string to_string() const;
    std::chrono::sys_days day() const { return day_; }
    Date next_day() const { return Date(day_ + std::chrono::days(1)); }

    auto operator<=>(const Date&) const = default;

private:
    std::chrono::sys_days day_{};
};

/// Uniformly sampled scalar series with optional calendar-date labels.
/// Construction validates the invariants: at least one value, every value
/// finite, and labels (when present) strictly increasing with one per value.
class TimeSeries {
public:
    TimeSeries(std::vector<double> values, std::string name);
    TimeSeries(std::vector<double> values, std::vector<Date> labels, std::string name);

    const std::vector<double>& values() const { return values_; }
    bool has_labels() const { return labels_.has_value(); }
    const std::vector<Date>& labels() const;
    const std::string& name() const { return name_; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<double> values_;
    std::optional<std::vector<Date>> labels_;
    std::string name_;
};

/// Cumulative sums of the mean-centered source series. By construction the
/// last element is ~0.
class Profile {
public:
    explicit Profile(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    std::size_t source_len() const { return values_.size(); }

private:
    std::vector<double> values_;
};

/// profile[t] = sum_{i<=t} (x[i] - mean(x)). Throws TooShort for length < 2.
Profile build_profile(const TimeSeries& x);

/// Restricts both series to the intersection of their date sets, preserving
/// order. Throws MissingLabels / NoOverlap.
std::pair<TimeSeries, TimeSeries> align_by_date(const TimeSeries& a, const TimeSeries& b);

}  // namespace fractalts
