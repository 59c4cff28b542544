#include "fractalts/synth.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace fractalts {

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

namespace {

// In-place iterative radix-2 FFT (size must be a power of two). Hand-rolled
// rather than linked so generated series are bit-identical across builds.
void fft_pow2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wn(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wn;
            }
        }
    }
}

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) {
        m <<= 1;
    }
    return m;
}

}  // namespace

TimeSeries white_noise(std::size_t length, std::uint64_t seed) {
    if (length < 1) {
        throw InvalidArgument("length must be at least 1");
    }
    Rng rng(seed);
    std::vector<double> values(length);
    for (double& v : values) {
        v = rng.gaussian();
    }
    return TimeSeries(std::move(values), "white_noise");
}

double fgn_autocovariance(double hurst, std::int64_t lag) {
    const double k = std::abs(static_cast<double>(lag));
    const double e = 2.0 * hurst;
    return 0.5 * (std::pow(k + 1.0, e) - 2.0 * std::pow(k, e) +
                  std::pow(std::abs(k - 1.0), e));
}

TimeSeries fgn(double hurst, std::size_t length, std::uint64_t seed) {
    if (!(hurst > 0.0 && hurst < 1.0)) {
        throw InvalidArgument("fgn requires 0 < H < 1, got " + std::to_string(hurst));
    }
    if (length < 1) {
        throw InvalidArgument("length must be at least 1");
    }
    Rng rng(seed);
    if (length == 1) {
        return TimeSeries({rng.gaussian()}, "fgn");
    }

    const std::size_t m = next_pow2(2 * length);
    const std::size_t half = m / 2;

    // Eigenvalues of the circulant embedding of the covariance.
    std::vector<std::complex<double>> buf(m);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t k = std::min(j, m - j);
        buf[j] = fgn_autocovariance(hurst, static_cast<std::int64_t>(k));
    }
    fft_pow2(buf);

    std::vector<double> lambda(m);
    for (std::size_t j = 0; j < m; ++j) {
        double ev = buf[j].real();
        if (ev < -1e-10) {
            throw EmbeddingFailure("circulant eigenvalue " + std::to_string(ev) +
                                   " below tolerance at index " + std::to_string(j));
        }
        lambda[j] = std::max(ev, 0.0);
    }

    // Hermitian-symmetric Gaussian spectrum; the forward transform of it is
    // real with the exact target covariance.
    const double inv_m = 1.0 / static_cast<double>(m);
    buf[0] = std::sqrt(lambda[0] * inv_m) * rng.gaussian();
    for (std::size_t j = 1; j < half; ++j) {
        const double w = std::sqrt(0.5 * lambda[j] * inv_m);
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        buf[j] = std::complex<double>(w * re, w * im);
        buf[m - j] = std::conj(buf[j]);
    }
    buf[half] = std::sqrt(lambda[half] * inv_m) * rng.gaussian();

    fft_pow2(buf);
    std::vector<double> values(length);
    for (std::size_t t = 0; t < length; ++t) {
        values[t] = buf[t].real();
    }
    return TimeSeries(std::move(values), "fgn");
}

TimeSeries cascade(double p, int levels, std::uint64_t seed) {
    if (!(p > 0.0 && p <= 0.5)) {
        throw InvalidArgument("cascade requires 0 < p <= 0.5, got " + std::to_string(p));
    }
    if (levels < 1 || levels > 62) {
        throw InvalidArgument("cascade requires 1 <= levels <= 62");
    }
    Rng rng(seed);
    std::vector<double> values{1.0};
    for (int level = 0; level < levels; ++level) {
        std::vector<double> next(values.size() * 2);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const bool p_left = rng.coin();
            next[2 * i] = values[i] * (p_left ? p : 1.0 - p);
            next[2 * i + 1] = values[i] * (p_left ? 1.0 - p : p);
        }
        values = std::move(next);
    }
    return TimeSeries(std::move(values), "cascade");
}

double cascade_exact_hq(double p, double q) {
    if (!(p > 0.0 && p <= 0.5)) {
        throw InvalidArgument("cascade requires 0 < p <= 0.5, got " + std::to_string(p));
    }
    if (q == 0.0) {
        throw InvalidArgument("closed form is defined for q != 0");
    }
    return 1.0 / q - std::log(std::pow(p, q) + std::pow(1.0 - p, q)) / (q * std::numbers::ln2);
}

}  // namespace fractalts
