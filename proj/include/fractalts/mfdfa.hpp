#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fractalts/timeseries.hpp"

namespace fractalts {

/// Moment orders, segment lengths and detrending order for one analysis run.
///
/// Valid against a series of length n when: q_grid is strictly increasing and
/// finite (q = 0 permitted), tau_grid is strictly increasing with at least 4
/// entries, and every tau satisfies detrend_order + 2 <= tau <= n / 4.
struct AnalysisConfig {
    std::vector<double> q_grid;
    std::vector<int> tau_grid;
    int detrend_order = 1;
    /// Inclusive [tau_lo, tau_hi] sub-interval used by the scaling regression.
    std::optional<std::pair<int, int>> fit_range;

    /// {-5, -4, ..., 5}
    static std::vector<double> default_q_grid();
    /// `count` log-spaced integers (duplicates removed) covering
    /// [max(order + 2, 10), n / 4].
    static std::vector<int> default_tau_grid(std::size_t series_length, int detrend_order,
                                             int count = 20);
    /// Defaults for both grids at the given length, detrend order 1.
    static AnalysisConfig defaults(std::size_t series_length);

    /// Throws ConfigInvalid when invalid against the given series length.
    void validate(std::size_t series_length) const;
};

/// `count` log-spaced integers covering [lo, hi], duplicates removed. Throws
/// ConfigInvalid when hi < lo or count < 2.
std::vector<int> log_spaced_taus(int lo, int hi, int count);

/// Tiling of a profile into 2*floor(n/tau) segments of length tau: forward
/// segments from the start, backward segments from the end.
struct SegmentLayout {
    int tau = 0;
    std::size_t n_segments = 0;
    /// (start index, direction): +1 for the forward pass, -1 for backward.
    std::vector<std::pair<std::size_t, int>> starts;
};

/// Throws TauTooLarge when tau exceeds the profile length; requires tau >= 2.
SegmentLayout segment(const Profile& profile, int tau);

/// Mean squared residual of an OLS polynomial fit of degree `order` over
/// abscissae 1..tau (internally centered and scaled to [-1, 1] before the
/// normal equations are solved). Throws DegenerateFit when the segment is
/// shorter than order + 2.
double detrend_fluctuation(std::span<const double> segment_values, int order);

/// F_q(tau) over the (q, tau) grid.
struct FluctuationTable {
    std::vector<double> q_grid;
    std::vector<int> tau_grid;
    /// values[qi][ti] = F_{q_grid[qi]}(tau_grid[ti])
    std::vector<std::vector<double>> values;
    int detrend_order = 1;
};

/// F_q(tau) = [ (1/N) sum_s (F2_s)^(q/2) ]^(1/q) over the 2*floor(n/tau)
/// segments; for q = 0 the log-average exp{ (1/2N) sum_s ln F2_s } is used.
///
/// Throws ZeroVarianceSegment when some segment fluctuates below machine
/// precision and the q grid contains q <= 0; ConfigInvalid for grid
/// violations.
FluctuationTable fluctuation_function(const Profile& profile, const AnalysisConfig& config);

/// Generalized Hurst exponents with fit diagnostics.
struct HurstSpectrum {
    std::vector<double> q_grid;
    std::vector<double> h;
    std::vector<double> r_squared;
    /// h at q = 2; absent when 2 is not in the q grid.
    std::optional<double> hurst;
    /// h(q_min) - h(q_max)
    double delta_h = 0.0;
};

/// Per q, the OLS slope of ln F_q(tau) against ln tau over the columns inside
/// fit_range (whole grid when absent). Throws InsufficientPoints (< 4 columns
/// in range) and NonFiniteLog (non-positive table entry).
HurstSpectrum fit_scaling(const FluctuationTable& table,
                          std::optional<std::pair<int, int>> fit_range = std::nullopt);

/// fit_scaling(fluctuation_function(build_profile(x), config), config.fit_range)
HurstSpectrum analyze(const TimeSeries& x, const AnalysisConfig& config);

}  // namespace fractalts
