#pragma once

#include <vector>

#include "fractalts/timeseries.hpp"

namespace fractalts {

/// Lagged cross-correlation estimates. Every coefficient is a true Pearson
/// coefficient over the overlap window at its lag.
struct CcfResult {
    std::vector<int> lags;
    std::vector<double> coefficients;
    /// White-noise significance band 3/sqrt(n - |lag|), reported per lag.
    std::vector<double> band;
    /// Lag maximizing |coefficient|; ties go to the smallest |lag|, then to
    /// the negative one.
    int peak_lag = 0;
    /// max over lags of |coefficient|
    double peak_value = 0.0;
};

/// Coefficient at lag k = Pearson correlation of {a[t], b[t+k]} over the
/// overlap of length n - |k|, with mean and variance computed on the overlap
/// itself; positive k means b lags a. Throws LengthMismatch, LagTooLarge
/// (n - max_lag < 3), ZeroVariance (constant overlap window).
CcfResult cross_correlation(const TimeSeries& a, const TimeSeries& b, int max_lag);

/// Pearson coefficient of two equal-length series; identical, bit for bit, to
/// the lag-0 entry of cross_correlation.
double pearson(const TimeSeries& a, const TimeSeries& b);

}  // namespace fractalts
