#include "complab/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace complab {

ExactCountTable count_exact(const PartSet& ps, std::int64_t n_max) {
    if (n_max < 0) throw std::invalid_argument("count_exact: n_max must be >= 0");
    std::vector<BigInt> a(static_cast<std::size_t>(n_max) + 1);
    std::vector<BigInt> prefix(static_cast<std::size_t>(n_max) + 1);  // prefix[j] = A_0+..+A_j
    a[0] = 1;
    prefix[0] = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        BigInt v = prefix[static_cast<std::size_t>(n - 1)];
        for (auto k : ps.excluded()) {
            if (k > n) break;
            v -= a[static_cast<std::size_t>(n - k)];
        }
        a[static_cast<std::size_t>(n)] = v;
        prefix[static_cast<std::size_t>(n)] = prefix[static_cast<std::size_t>(n - 1)] + v;
    }
    return ExactCountTable{std::move(a)};
}

ExactCountTable count_truncated(const TruncatedPartSet& tps, std::int64_t n_max) {
    if (n_max < 0) throw std::invalid_argument("count_truncated: n_max must be >= 0");
    const auto beta = tps.beta;
    std::vector<BigInt> a(static_cast<std::size_t>(n_max) + 1);
    std::vector<BigInt> prefix(static_cast<std::size_t>(n_max) + 1);
    a[0] = 1;
    prefix[0] = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        // sum_{k=1..min(beta,n)} A_{n-k} = prefix[n-1] - prefix[n-beta-1]
        BigInt v = prefix[static_cast<std::size_t>(n - 1)];
        if (n - beta - 1 >= 0) v -= prefix[static_cast<std::size_t>(n - beta - 1)];
        for (auto k : tps.base.excluded()) {
            if (k > std::min(beta, n)) break;
            v -= a[static_cast<std::size_t>(n - k)];
        }
        a[static_cast<std::size_t>(n)] = v;
        prefix[static_cast<std::size_t>(n)] = prefix[static_cast<std::size_t>(n - 1)] + v;
    }
    return ExactCountTable{std::move(a)};
}

ScaledCountTable::ScaledCountTable(const PartSet& ps, double p, std::int64_t n_max) : p_(p) {
    build(ps, std::numeric_limits<std::int64_t>::max(), n_max);
}

ScaledCountTable::ScaledCountTable(const TruncatedPartSet& tps, double p, std::int64_t n_max)
    : p_(p) {
    build(tps.base, tps.beta, n_max);
}

void ScaledCountTable::build(const PartSet& ps, std::int64_t part_cap, std::int64_t n_max) {
    // p^k < 1e-19 is below double resolution against the O(1) ratios
    scan_cutoff_ = static_cast<std::int64_t>(std::ceil(std::log(1e-19) / std::log(p_))) + 1;
    if (part_cap < scan_cutoff_) scan_cutoff_ = part_cap;

    std::vector<double> pw(static_cast<std::size_t>(scan_cutoff_) + 1);
    pw[0] = 1.0;
    for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * p_;

    ratios_.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    ratios_[0] = 1.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        double c = 0.0;
        const std::int64_t kmax = std::min(n, scan_cutoff_);
        for (std::int64_t k = 1; k <= kmax; ++k) {
            if (!ps.contains(k)) continue;
            c += pw[static_cast<std::size_t>(k)] * ratios_[static_cast<std::size_t>(n - k)];
        }
        ratios_[static_cast<std::size_t>(n)] = c;
    }
}

std::vector<BigInt> power_moment_sum(const PartSet& ps, std::int64_t n_max, int t) {
    if (t < 0 || t > 3) throw std::invalid_argument("power_moment_sum: t must be in [0,3]");
    std::vector<BigInt> w(static_cast<std::size_t>(n_max) + 1);
    w[0] = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        BigInt v = 0;
        for (std::int64_t k = 1; k <= n; ++k) {
            if (!ps.contains(k)) continue;
            BigInt kt = 1;
            for (int j = 0; j < t; ++j) kt *= k;
            v += kt * w[static_cast<std::size_t>(n - k)];
        }
        w[static_cast<std::size_t>(n)] = v;
    }
    return w;
}

AsymptoticCount count_asymptotic(double p, std::int64_t n, double kpk_sum) {
    const double log_value = -static_cast<double>(n) * std::log(p) - std::log(kpk_sum);
    AsymptoticCount out{};
    out.log_value = log_value;
    if (log_value < std::log(std::numeric_limits<double>::max())) {
        out.value = std::exp(log_value);
        out.representable = true;
    } else {
        out.value = std::numeric_limits<double>::infinity();
        out.representable = false;
    }
    return out;
}

LogMomentTable::LogMomentTable(const PartSet& ps, const ScaledCountTable& scaled,
                               std::int64_t n_max, int t_max)
    : t_max_(t_max) {
    if (t_max < 0 || t_max > 4) throw std::invalid_argument("log_moment_table: t_max must be in [0,4]");
    if (n_max > scaled.n_max()) throw std::invalid_argument("log_moment_table: scaled table too short");

    static const int binom[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};

    const std::int64_t kcut = scaled.scan_cutoff();
    std::vector<double> pw(static_cast<std::size_t>(kcut) + 1), lg(static_cast<std::size_t>(kcut) + 1);
    pw[0] = 1.0;
    for (std::int64_t k = 1; k <= kcut; ++k) {
        pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * scaled.p();
        lg[static_cast<std::size_t>(k)] = std::log(static_cast<double>(k));
    }

    present_.assign(static_cast<std::size_t>(n_max) + 1, false);
    e_.assign(static_cast<std::size_t>(t_max) + 1,
              std::vector<double>(static_cast<std::size_t>(n_max) + 1, 0.0));
    present_[0] = true;
    e_[0][0] = 1.0;  // empty composition: B = 1, log B = 0

    for (std::int64_t n = 1; n <= n_max; ++n) {
        const double cn = scaled.ratio(n);
        if (cn <= 0.0) continue;  // A_n = 0, moments undefined
        present_[static_cast<std::size_t>(n)] = true;
        const std::int64_t kmax = std::min(n, kcut);
        for (int t = 0; t <= t_max; ++t) {
            double acc = 0.0;
            for (std::int64_t k = 1; k <= kmax; ++k) {
                if (!ps.contains(k)) continue;
                const double cprev = scaled.ratio(n - k);
                if (cprev <= 0.0) continue;
                const double w = cprev * pw[static_cast<std::size_t>(k)] / cn;
                const double logk = lg[static_cast<std::size_t>(k)];
                double inner = 0.0, lpow = 1.0;
                for (int j = 0; j <= t; ++j) {
                    inner += binom[t][j] * lpow * e_[static_cast<std::size_t>(t - j)][static_cast<std::size_t>(n - k)];
                    lpow *= logk;
                }
                acc += w * inner;
            }
            e_[static_cast<std::size_t>(t)][static_cast<std::size_t>(n)] = acc;
        }
    }
}

double LogMomentTable::raw(std::int64_t n, int t) const {
    if (!present_[static_cast<std::size_t>(n)])
        throw std::domain_error("log_moment_table: no compositions of this n");
    if (t < 0 || t > t_max_) throw std::invalid_argument("log_moment_table: t out of range");
    return e_[static_cast<std::size_t>(t)][static_cast<std::size_t>(n)];
}

double LogMomentTable::variance(std::int64_t n) const {
    const double m1 = raw(n, 1);
    return raw(n, 2) - m1 * m1;
}

double LogMomentTable::fourth_central(std::int64_t n) const {
    const double m1 = raw(n, 1), m2 = raw(n, 2), m3 = raw(n, 3), m4 = raw(n, 4);
    return m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 * m1 - 3.0 * m1 * m1 * m1 * m1;
}

}  // namespace complab
