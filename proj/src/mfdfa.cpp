#include "fractalts/mfdfa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fractalts {

std::vector<double> AnalysisConfig::default_q_grid() {
    std::vector<double> q;
    for (int i = -5; i <= 5; ++i) {
        q.push_back(static_cast<double>(i));
    }
    return q;
}

std::vector<int> log_spaced_taus(int lo, int hi, int count) {
    if (lo < 2 || hi < lo || count < 2) {
        throw ConfigInvalid("tau range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] with " + std::to_string(count) + " points is not usable");
    }
    const double llo = std::log(static_cast<double>(lo));
    const double lhi = std::log(static_cast<double>(hi));
    std::vector<int> taus;
    for (int k = 0; k < count; ++k) {
        const double t = llo + (lhi - llo) * static_cast<double>(k) / (count - 1);
        const int tau = static_cast<int>(std::llround(std::exp(t)));
        if (taus.empty() || tau > taus.back()) {
            taus.push_back(tau);
        }
    }
    return taus;
}

std::vector<int> AnalysisConfig::default_tau_grid(std::size_t series_length, int detrend_order,
                                                  int count) {
    const int lo = std::max(detrend_order + 2, 10);
    const int hi = static_cast<int>(series_length / 4);
    if (hi < lo) {
        throw ConfigInvalid("series too short for a default tau grid (need length >= " +
                            std::to_string(4 * lo) + ")");
    }
    return log_spaced_taus(lo, hi, count);
}

AnalysisConfig AnalysisConfig::defaults(std::size_t series_length) {
    AnalysisConfig config;
    config.q_grid = default_q_grid();
    config.detrend_order = 1;
    config.tau_grid = default_tau_grid(series_length, config.detrend_order);
    return config;
}

void AnalysisConfig::validate(std::size_t series_length) const {
    if (detrend_order < 0) {
        throw ConfigInvalid("detrend order must be non-negative");
    }
    if (q_grid.empty()) {
        throw ConfigInvalid("q grid is empty");
    }
    for (double q : q_grid) {
        if (!std::isfinite(q)) {
            throw ConfigInvalid("q grid contains a non-finite value");
        }
    }
    for (std::size_t i = 1; i < q_grid.size(); ++i) {
        if (!(q_grid[i - 1] < q_grid[i])) {
            throw ConfigInvalid("q grid must be strictly increasing");
        }
    }
    if (tau_grid.size() < 4) {
        throw ConfigInvalid("tau grid needs at least 4 entries");
    }
    for (std::size_t i = 1; i < tau_grid.size(); ++i) {
        if (!(tau_grid[i - 1] < tau_grid[i])) {
            throw ConfigInvalid("tau grid must be strictly increasing");
        }
    }
    const int tau_cap = static_cast<int>(series_length / 4);
    for (int tau : tau_grid) {
        if (tau < detrend_order + 2) {
            throw ConfigInvalid("tau = " + std::to_string(tau) +
                                " is below detrend order + 2 = " +
                                std::to_string(detrend_order + 2));
        }
        if (tau > tau_cap) {
            throw ConfigInvalid("tau = " + std::to_string(tau) + " exceeds length/4 = " +
                                std::to_string(tau_cap));
        }
    }
    if (fit_range) {
        if (fit_range->first > fit_range->second) {
            throw ConfigInvalid("empty fit range");
        }
    }
}

SegmentLayout segment(const Profile& profile, int tau) {
    const std::size_t n = profile.size();
    if (tau < 2) {
        throw InvalidArgument("tau must be at least 2");
    }
    if (static_cast<std::size_t>(tau) > n) {
        throw TauTooLarge("tau = " + std::to_string(tau) + " exceeds profile length " +
                          std::to_string(n));
    }
    const std::size_t k = n / static_cast<std::size_t>(tau);
    SegmentLayout layout;
    layout.tau = tau;
    layout.n_segments = 2 * k;
    layout.starts.reserve(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        layout.starts.emplace_back(i * tau, +1);
    }
    for (std::size_t i = 0; i < k; ++i) {
        layout.starts.emplace_back(n - (i + 1) * tau, -1);
    }
    return layout;
}

namespace {

// Solves the (order+1)-dimensional normal equations by Gaussian elimination
// with partial pivoting. Abscissae are centered and scaled to [-1, 1], which
// keeps the system well conditioned for order >= 2.
double fit_mean_squared_residual(std::span<const double> y, int order) {
    const std::size_t tau = y.size();
    const int k = order + 1;
    const double half = (static_cast<double>(tau) - 1.0) / 2.0;
    const double scale = (tau > 1) ? 1.0 / half : 1.0;

    // Power sums S_p = sum x^p and moment vector b_i = sum x^i y.
    std::vector<double> s(2 * order + 1, 0.0);
    std::vector<double> b(k, 0.0);
    for (std::size_t t = 0; t < tau; ++t) {
        const double x = (static_cast<double>(t) - half) * scale;
        double xp = 1.0;
        for (int p = 0; p <= 2 * order; ++p) {
            s[p] += xp;
            if (p < k) {
                b[p] += xp * y[t];
            }
            xp *= x;
        }
    }

    std::vector<double> a(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            a[static_cast<std::size_t>(i) * k + j] = s[i + j];
        }
    }

    std::vector<double> coef = b;
    for (int col = 0; col < k; ++col) {
        int pivot = col;
        for (int r = col + 1; r < k; ++r) {
            if (std::abs(a[static_cast<std::size_t>(r) * k + col]) >
                std::abs(a[static_cast<std::size_t>(pivot) * k + col])) {
                pivot = r;
            }
        }
        if (a[static_cast<std::size_t>(pivot) * k + col] == 0.0) {
            throw DegenerateFit("singular normal equations");
        }
        if (pivot != col) {
            for (int c = 0; c < k; ++c) {
                std::swap(a[static_cast<std::size_t>(pivot) * k + c],
                          a[static_cast<std::size_t>(col) * k + c]);
            }
            std::swap(coef[pivot], coef[col]);
        }
        const double inv = 1.0 / a[static_cast<std::size_t>(col) * k + col];
        for (int r = col + 1; r < k; ++r) {
            const double f = a[static_cast<std::size_t>(r) * k + col] * inv;
            if (f == 0.0) {
                continue;
            }
            for (int c = col; c < k; ++c) {
                a[static_cast<std::size_t>(r) * k + c] -=
                    f * a[static_cast<std::size_t>(col) * k + c];
            }
            coef[r] -= f * coef[col];
        }
    }
    for (int i = k - 1; i >= 0; --i) {
        double acc = coef[i];
        for (int j = i + 1; j < k; ++j) {
            acc -= a[static_cast<std::size_t>(i) * k + j] * coef[j];
        }
        coef[i] = acc / a[static_cast<std::size_t>(i) * k + i];
    }

    double ss = 0.0;
    for (std::size_t t = 0; t < tau; ++t) {
        const double x = (static_cast<double>(t) - half) * scale;
        // Horner evaluation of the fitted trend.
        double trend = coef[k - 1];
        for (int p = k - 2; p >= 0; --p) {
            trend = trend * x + coef[p];
        }
        const double r = y[t] - trend;
        ss += r * r;
    }
    return ss / static_cast<double>(tau);
}

// Fluctuations at or below this level are indistinguishable from an exact
// polynomial fit in double precision.
double zero_threshold(std::span<const double> y) {
    double max_abs = 0.0;
    for (double v : y) {
        max_abs = std::max(max_abs, std::abs(v));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double r = 32.0 * eps * (1.0 + max_abs);
    return r * r;
}

}  // namespace

double detrend_fluctuation(std::span<const double> segment_values, int order) {
    if (order < 0) {
        throw InvalidArgument("detrend order must be non-negative");
    }
    if (segment_values.size() < static_cast<std::size_t>(order) + 2) {
        throw DegenerateFit("segment of length " + std::to_string(segment_values.size()) +
                            " cannot support a degree-" + std::to_string(order) + " fit");
    }
    return fit_mean_squared_residual(segment_values, order);
}

FluctuationTable fluctuation_function(const Profile& profile, const AnalysisConfig& config) {
    config.validate(profile.size());

    const bool has_nonpositive_q =
        std::any_of(config.q_grid.begin(), config.q_grid.end(), [](double q) { return q <= 0.0; });

    FluctuationTable table;
    table.q_grid = config.q_grid;
    table.tau_grid = config.tau_grid;
    table.detrend_order = config.detrend_order;
    table.values.assign(config.q_grid.size(), std::vector<double>(config.tau_grid.size(), 0.0));

    const auto& y = profile.values();
    std::vector<double> log_f2;
    for (std::size_t ti = 0; ti < config.tau_grid.size(); ++ti) {
        const int tau = config.tau_grid[ti];
        const SegmentLayout layout = segment(profile, tau);
        const std::size_t n_seg = layout.n_segments;

        log_f2.clear();
        log_f2.reserve(n_seg);
        std::size_t n_zero = 0;
        for (std::size_t si = 0; si < n_seg; ++si) {
            const auto [start, dir] = layout.starts[si];
            const std::span<const double> seg(y.data() + start, static_cast<std::size_t>(tau));
            const double f2 = detrend_fluctuation(seg, config.detrend_order);
            if (f2 <= zero_threshold(seg)) {
                if (has_nonpositive_q) {
                    throw ZeroVarianceSegment(
                        tau, si,
                        "segment " + std::to_string(si) + " at tau = " + std::to_string(tau) +
                            " has zero detrended variance; F_q is undefined for q <= 0");
                }
                ++n_zero;
                log_f2.push_back(-std::numeric_limits<double>::infinity());
            } else {
                log_f2.push_back(std::log(f2));
            }
        }

        for (std::size_t qi = 0; qi < config.q_grid.size(); ++qi) {
            const double q = config.q_grid[qi];
            double value = 0.0;
            if (q == 0.0) {
                double acc = 0.0;
                for (double lf : log_f2) {
                    acc += lf;
                }
                value = std::exp(acc / (2.0 * static_cast<double>(n_seg)));
            } else if (n_zero == n_seg) {
                value = 0.0;  // every segment is an exact polynomial
            } else {
                // Power mean via log-sum-exp; large |q| on a wide dynamic
                // range of F^2 overflows the direct form.
                double max_l = -std::numeric_limits<double>::infinity();
                for (double lf : log_f2) {
                    if (std::isfinite(lf)) {
                        max_l = std::max(max_l, (q / 2.0) * lf);
                    }
                }
                double acc = 0.0;
                for (double lf : log_f2) {
                    if (std::isfinite(lf)) {
                        acc += std::exp((q / 2.0) * lf - max_l);
                    }
                }
                const double log_mean = std::log(acc / static_cast<double>(n_seg)) + max_l;
                value = std::exp(log_mean / q);
            }
            table.values[qi][ti] = value;
        }
    }
    return table;
}

namespace {

struct LineFit {
    double slope;
    double r_squared;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    const double slope = sxy / sxx;
    double r2 = 1.0;
    if (syy > 0.0) {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = (y[i] - my) - slope * (x[i] - mx);
            ss_res += r * r;
        }
        r2 = 1.0 - ss_res / syy;
    }
    return {slope, r2};
}

}  // namespace

HurstSpectrum fit_scaling(const FluctuationTable& table,
                          std::optional<std::pair<int, int>> fit_range) {
    std::vector<std::size_t> cols;
    for (std::size_t ti = 0; ti < table.tau_grid.size(); ++ti) {
        const int tau = table.tau_grid[ti];
        if (!fit_range || (tau >= fit_range->first && tau <= fit_range->second)) {
            cols.push_back(ti);
        }
    }
    if (cols.size() < 4) {
        throw InsufficientPoints("scaling regression needs at least 4 tau points, got " +
                                 std::to_string(cols.size()));
    }

    std::vector<double> log_tau(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        log_tau[i] = std::log(static_cast<double>(table.tau_grid[cols[i]]));
    }

    HurstSpectrum spectrum;
    spectrum.q_grid = table.q_grid;
    spectrum.h.resize(table.q_grid.size());
    spectrum.r_squared.resize(table.q_grid.size());

    std::vector<double> log_f(cols.size());
    for (std::size_t qi = 0; qi < table.q_grid.size(); ++qi) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const double f = table.values[qi][cols[i]];
            if (!(f > 0.0) || !std::isfinite(f)) {
                throw NonFiniteLog("F_q(tau) must be positive and finite for the log-log fit");
            }
            log_f[i] = std::log(f);
        }
        const LineFit fit = fit_line(log_tau, log_f);
        spectrum.h[qi] = fit.slope;
        spectrum.r_squared[qi] = fit.r_squared;
    }

    std::size_t qi_min = 0;
    std::size_t qi_max = 0;
    for (std::size_t qi = 0; qi < table.q_grid.size(); ++qi) {
        if (table.q_grid[qi] == 2.0) {
            spectrum.hurst = spectrum.h[qi];
        }
        if (table.q_grid[qi] < table.q_grid[qi_min]) {
            qi_min = qi;
        }
        if (table.q_grid[qi] > table.q_grid[qi_max]) {
            qi_max = qi;
        }
    }
    spectrum.delta_h = spectrum.h[qi_min] - spectrum.h[qi_max];
    return spectrum;
}

HurstSpectrum analyze(const TimeSeries& x, const AnalysisConfig& config) {
    const Profile profile = build_profile(x);
    const FluctuationTable table = fluctuation_function(profile, config);
    return fit_scaling(table, config.fit_range);
}

}  // namespace fractalts
