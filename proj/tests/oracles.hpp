#pragma once

// Brute-force reference implementations, kept deliberately separate from the
// library code paths: raw-abscissa polynomial fits in long double, direct
// power means instead of log-sum-exp, double-loop correlation.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace oracle {

/// Mean squared residual of a least-squares polynomial of degree `order`
/// fitted against raw abscissae t = 1..n.
inline long double poly_msr_raw(std::span<const double> y, int order) {
    const int n = static_cast<int>(y.size());
    const int dim = order + 1;
    std::vector<long double> moments(static_cast<std::size_t>(2 * order + 1), 0.0L);
    std::vector<long double> rhs(static_cast<std::size_t>(dim), 0.0L);
    for (int t = 1; t <= n; ++t) {
        long double tk = 1.0L;
        for (int k = 0; k <= 2 * order; ++k) {
            moments[static_cast<std::size_t>(k)] += tk;
            if (k <= order) {
                rhs[static_cast<std::size_t>(k)] += tk * y[static_cast<std::size_t>(t - 1)];
            }
            tk *= static_cast<long double>(t);
        }
    }
    std::vector<std::vector<long double>> a(static_cast<std::size_t>(dim),
                                            std::vector<long double>(static_cast<std::size_t>(dim)));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                moments[static_cast<std::size_t>(i + j)];
        }
    }
    std::vector<long double> c = rhs;
    for (int col = 0; col < dim; ++col) {
        int pivot = col;
        for (int row = col + 1; row < dim; ++row) {
            if (std::abs(a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) >
                std::abs(a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)])) {
                pivot = row;
            }
        }
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
        std::swap(c[static_cast<std::size_t>(col)], c[static_cast<std::size_t>(pivot)]);
        for (int row = col + 1; row < dim; ++row) {
            const long double f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
                                  a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int k = col; k < dim; ++k) {
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
            }
            c[static_cast<std::size_t>(row)] -= f * c[static_cast<std::size_t>(col)];
        }
    }
    for (int row = dim - 1; row >= 0; --row) {
        for (int k = row + 1; k < dim; ++k) {
            c[static_cast<std::size_t>(row)] -=
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] *
                c[static_cast<std::size_t>(k)];
        }
        c[static_cast<std::size_t>(row)] /= a[static_cast<std::size_t>(row)][static_cast<std::size_t>(row)];
    }
    long double ss = 0.0L;
    for (int t = 1; t <= n; ++t) {
        long double fit = 0.0L;
        long double tk = 1.0L;
        for (int k = 0; k <= order; ++k) {
            fit += c[static_cast<std::size_t>(k)] * tk;
            tk *= static_cast<long double>(t);
        }
        const long double r = static_cast<long double>(y[static_cast<std::size_t>(t - 1)]) - fit;
        ss += r * r;
    }
    return ss / static_cast<long double>(n);
}

/// Profile of x: cumulative sum of deviations from the mean.
inline std::vector<double> profile_of(const std::vector<double>& x) {
    long double mean = 0.0L;
    for (double v : x) {
        mean += v;
    }
    mean /= static_cast<long double>(x.size());
    std::vector<double> y(x.size());
    long double acc = 0.0L;
    for (std::size_t t = 0; t < x.size(); ++t) {
        acc += static_cast<long double>(x[t]) - mean;
        y[t] = static_cast<double>(acc);
    }
    return y;
}

/// Per-segment squared fluctuations over the bidirectional tiling: floor(n/tau)
/// segments from the start, floor(n/tau) more ending flush with the end.
inline std::vector<long double> segment_fluctuations(const std::vector<double>& y, int tau,
                                                     int order) {
    const std::size_t n = y.size();
    const std::size_t k = n / static_cast<std::size_t>(tau);
    std::vector<long double> f2;
    f2.reserve(2 * k);
    for (std::size_t s = 0; s < k; ++s) {
        f2.push_back(poly_msr_raw(
            std::span<const double>(y.data() + s * static_cast<std::size_t>(tau),
                                    static_cast<std::size_t>(tau)),
            order));
    }
    for (std::size_t s = 0; s < k; ++s) {
        const std::size_t start = n - (s + 1) * static_cast<std::size_t>(tau);
        f2.push_back(poly_msr_raw(
            std::span<const double>(y.data() + start, static_cast<std::size_t>(tau)), order));
    }
    return f2;
}

/// F_q(tau) by the direct formula: ((1/N) sum (F2)^(q/2))^(1/q), geometric
/// mean at q = 0.
inline double naive_fq(const std::vector<double>& y, double q, int tau, int order) {
    const std::vector<long double> f2 = segment_fluctuations(y, tau, order);
    const long double count = static_cast<long double>(f2.size());
    if (q == 0.0) {
        long double acc = 0.0L;
        for (long double v : f2) {
            acc += std::log(v);
        }
        return static_cast<double>(std::exp(acc / (2.0L * count)));
    }
    long double acc = 0.0L;
    for (long double v : f2) {
        acc += std::pow(v, static_cast<long double>(q) / 2.0L);
    }
    return static_cast<double>(std::pow(acc / count, 1.0L / static_cast<long double>(q)));
}

/// Classical DFA fluctuation: sqrt of the mean squared fluctuation, which is
/// F_q at q = 2.
inline double classical_dfa(const std::vector<double>& x, int tau, int order) {
    const std::vector<double> y = profile_of(x);
    const std::vector<long double> f2 = segment_fluctuations(y, tau, order);
    long double acc = 0.0L;
    for (long double v : f2) {
        acc += v;
    }
    return static_cast<double>(std::sqrt(acc / static_cast<long double>(f2.size())));
}

/// Pearson coefficient of {a[t], b[t+k]} over the overlap, two-pass in long
/// double.
inline double naive_ccf_at(const std::vector<double>& a, const std::vector<double>& b, int lag) {
    const int n = static_cast<int>(a.size());
    long double sa = 0.0L;
    long double sb = 0.0L;
    int count = 0;
    for (int i = 0; i < n; ++i) {
        const int j = i + lag;
        if (j < 0 || j >= n) {
            continue;
        }
        sa += a[static_cast<std::size_t>(i)];
        sb += b[static_cast<std::size_t>(j)];
        ++count;
    }
    if (count == 0) {
        throw std::runtime_error("empty overlap");
    }
    const long double ma = sa / count;
    const long double mb = sb / count;
    long double saa = 0.0L;
    long double sbb = 0.0L;
    long double sab = 0.0L;
    for (int i = 0; i < n; ++i) {
        const int j = i + lag;
        if (j < 0 || j >= n) {
            continue;
        }
        const long double da = a[static_cast<std::size_t>(i)] - ma;
        const long double db = b[static_cast<std::size_t>(j)] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    return static_cast<double>(sab / std::sqrt(saa * sbb));
}

}  // namespace oracle
