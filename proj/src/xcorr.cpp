#include "fractalts/xcorr.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace fractalts {

namespace {

// Pearson coefficient of {a[t], b[t+k]} over the overlap window, with the
// moments computed on the window itself.
double pearson_at_lag(const std::vector<double>& a, const std::vector<double>& b, int lag) {
    const std::size_t n = a.size();
    const std::size_t len = n - static_cast<std::size_t>(std::abs(lag));
    const std::size_t a0 = lag >= 0 ? 0 : static_cast<std::size_t>(-lag);
    const std::size_t b0 = lag >= 0 ? static_cast<std::size_t>(lag) : 0;

    double ma = 0.0;
    double mb = 0.0;
    for (std::size_t t = 0; t < len; ++t) {
        ma += a[a0 + t];
        mb += b[b0 + t];
    }
    ma /= static_cast<double>(len);
    mb /= static_cast<double>(len);

    double saa = 0.0;
    double sbb = 0.0;
    double sab = 0.0;
    for (std::size_t t = 0; t < len; ++t) {
        const double da = a[a0 + t] - ma;
        const double db = b[b0 + t] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa == 0.0 || sbb == 0.0) {
        throw ZeroVariance(lag, "constant overlap window at lag " + std::to_string(lag));
    }
    return sab / std::sqrt(saa * sbb);
}

}  // namespace

CcfResult cross_correlation(const TimeSeries& a, const TimeSeries& b, int max_lag) {
    if (a.size() != b.size()) {
        throw LengthMismatch("series lengths differ: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()) + " (align_by_date first)");
    }
    const std::size_t n = a.size();
    if (max_lag < 0) {
        throw InvalidArgument("max_lag must be non-negative");
    }
    if (n < static_cast<std::size_t>(max_lag) + 3) {
        throw LagTooLarge("need n - max_lag >= 3, got n = " + std::to_string(n) +
                          ", max_lag = " + std::to_string(max_lag));
    }

    CcfResult result;
    result.lags.reserve(2 * max_lag + 1);
    result.coefficients.reserve(2 * max_lag + 1);
    result.band.reserve(2 * max_lag + 1);
    for (int k = -max_lag; k <= max_lag; ++k) {
        result.lags.push_back(k);
        result.coefficients.push_back(pearson_at_lag(a.values(), b.values(), k));
        result.band.push_back(3.0 / std::sqrt(static_cast<double>(n) - std::abs(k)));
    }

    // Peak by |coefficient|; ties prefer the smaller |lag|, then the negative.
    std::size_t best = 0;
    for (std::size_t i = 1; i < result.lags.size(); ++i) {
        const double ci = std::abs(result.coefficients[i]);
        const double cb = std::abs(result.coefficients[best]);
        if (ci > cb) {
            best = i;
        } else if (ci == cb) {
            const int li = result.lags[i];
            const int lb = result.lags[best];
            if (std::abs(li) < std::abs(lb) || (std::abs(li) == std::abs(lb) && li < lb)) {
                best = i;
            }
        }
    }
    result.peak_lag = result.lags[best];
    result.peak_value = std::abs(result.coefficients[best]);
    return result;
}

double pearson(const TimeSeries& a, const TimeSeries& b) {
    if (a.size() != b.size()) {
        throw LengthMismatch("series lengths differ: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
    if (a.size() < 3) {
        throw TooShort("pearson needs at least 3 samples");
    }
    return pearson_at_lag(a.values(), b.values(), 0);
}

}  // namespace fractalts
