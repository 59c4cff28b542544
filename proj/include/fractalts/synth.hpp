#pragma once

#include <cstdint>
#include <random>

#include "fractalts/timeseries.hpp"

namespace fractalts {

/// Reproducible random stream: MT19937-64 (bit-exact across platforms per the
/// C++ standard) with uniforms built from the top 53 bits and Gaussians via
/// Box-Muller. std::normal_distribution is implementation-defined, so the
/// transform is spelled out here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on the open interval (0, 1).
    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
    }

    /// Standard normal deviate.
    double gaussian();

    /// Fair coin.
    bool coin() { return uniform01() < 0.5; }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// i.i.d. standard Gaussian samples; deterministic per seed.
TimeSeries white_noise(std::size_t length, std::uint64_t seed);

/// Population autocovariance of fractional Gaussian noise,
/// gamma(k) = 0.5 (|k+1|^2H - 2|k|^2H + |k-1|^2H).
double fgn_autocovariance(double hurst, std::int64_t lag);

/// Stationary Gaussian series with the exact fGn autocovariance, generated by
/// circulant embedding (eigenvalues of the embedded covariance via FFT, so the
/// law is exact rather than approximate). Requires 0 < hurst < 1. Throws
/// EmbeddingFailure if a circulant eigenvalue drops below -1e-10; eigenvalues
/// in [-1e-10, 0) are clamped to zero.
TimeSeries fgn(double hurst, std::size_t length, std::uint64_t seed);

/// Binomial multiplicative cascade: mass 1 split recursively, each split
/// assigning p to one half and 1-p to the other, side chosen by the seeded
/// stream. Returns 2^levels strictly positive values summing to 1. Requires
/// 0 < p <= 0.5 and levels >= 1.
TimeSeries cascade(double p, int levels, std::uint64_t seed);

/// h(q) of the binomial cascade in closed form:
/// h(q) = 1/q - ln(p^q + (1-p)^q) / (q ln 2), for q != 0.
double cascade_exact_hq(double p, double q);

}  // namespace fractalts
