#include "fractalts/timeseries.hpp"

#include <cmath>
#include <cstdio>

namespace fractalts {

Date::Date(int year, unsigned month, unsigned dom) {
    const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                          std::chrono::day{dom}};
    if (!ymd.ok()) {
        throw InvalidArgument("invalid calendar date");
    }
    day_ = std::chrono::sys_days{ymd};
}

Date Date::parse(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        throw InvalidArgument("expected ISO-8601 date YYYY-MM-DD, got '" + text + "'");
    }
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (text[i] < '0' || text[i] > '9') {
            throw InvalidArgument("expected ISO-8601 date YYYY-MM-DD, got '" + text + "'");
        }
    }
    const int year = std::stoi(text.substr(0, 4));
    const unsigned month = static_cast<unsigned>(std::stoi(text.substr(5, 2)));
    const unsigned dom = static_cast<unsigned>(std::stoi(text.substr(8, 2)));
    const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                          std::chrono::day{dom}};
    if (!ymd.ok()) {
        throw InvalidArgument("non-existent calendar date '" + text + "'");
    }
    return Date(std::chrono::sys_days{ymd});
}

std::string Date::to_string() const {
    const std::chrono::year_month_day ymd{day_};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

namespace {

void check_values(const std::vector<double>& values) {
    if (values.empty()) {
        throw InvalidArgument("a time series needs at least one value");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw InvalidArgument("time series values must be finite");
        }
    }
}

}  // namespace

TimeSeries::TimeSeries(std::vector<double> values, std::string name)
    : values_(std::move(values)), name_(std::move(name)) {
    check_values(values_);
}

TimeSeries::TimeSeries(std::vector<double> values, std::vector<Date> labels, std::string name)
    : values_(std::move(values)), labels_(std::move(labels)), name_(std::move(name)) {
    check_values(values_);
    if (labels_->size() != values_.size()) {
        throw InvalidArgument("label count must match value count");
    }
    for (std::size_t i = 1; i < labels_->size(); ++i) {
        if (!((*labels_)[i - 1] < (*labels_)[i])) {
            throw NonMonotonicDates("dates must be strictly increasing");
        }
    }
}

const std::vector<Date>& TimeSeries::labels() const {
    if (!labels_) {
        throw MissingLabels("series '" + name_ + "' has no date labels");
    }
    return *labels_;
}

Profile::Profile(std::vector<double> values) : values_(std::move(values)) {}

Profile build_profile(const TimeSeries& x) {
    const auto& v = x.values();
    if (v.size() < 2) {
        throw TooShort("profile needs at least 2 samples");
    }
    double sum = 0.0;
    for (double value : v) {
        sum += value;
    }
    const double mean = sum / static_cast<double>(v.size());

    std::vector<double> out(v.size());
    double acc = 0.0;
    double abs_centered = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double centered = v[i] - mean;
        acc += centered;
        abs_centered += std::abs(centered);
        out[i] = acc;
    }
    // Mean-centering forces the profile back to ~0 at the end.
    if (std::abs(out.back()) > 1e-9 * abs_centered) {
        throw Error("profile did not return to zero; input may be pathological");
    }
    return Profile(std::move(out));
}

std::pair<TimeSeries, TimeSeries> align_by_date(const TimeSeries& a, const TimeSeries& b) {
    const auto& la = a.labels();  // throws MissingLabels
    const auto& lb = b.labels();

    std::vector<double> va;
    std::vector<double> vb;
    std::vector<Date> dates;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < la.size() && j < lb.size()) {
        if (la[i] < lb[j]) {
            ++i;
        } else if (lb[j] < la[i]) {
            ++j;
        } else {
            va.push_back(a.values()[i]);
            vb.push_back(b.values()[j]);
            dates.push_back(la[i]);
            ++i;
            ++j;
        }
    }
    if (dates.empty()) {
        throw NoOverlap("no overlapping dates between '" + a.name() + "' and '" + b.name() + "'");
    }
    return {TimeSeries(std::move(va), dates, a.name()),
            TimeSeries(std::move(vb), std::move(dates), b.name())};
}

}  // namespace fractalts
