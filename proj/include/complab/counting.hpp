#ifndef COMPLAB_COUNTING_HPP
#define COMPLAB_COUNTING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "complab/part_set.hpp"

namespace complab {

using BigInt = boost::multiprecision::cpp_int;

// Exact counts A_0..A_N of S-restricted compositions, A_0 = 1 by convention.
struct ExactCountTable {
    std::vector<BigInt> counts;

    const BigInt& at(std::int64_t n) const { return counts[static_cast<std::size_t>(n)]; }
    std::int64_t n_max() const { return static_cast<std::int64_t>(counts.size()) - 1; }
};

// A_n = sum_{k in S, k <= n} A_{n-k}, via prefix sums over [1..n] minus the
// excluded terms: O(n_max * (1 + |excluded|)) big-integer additions.
ExactCountTable count_exact(const PartSet& ps, std::int64_t n_max);

// Same recurrence restricted to parts k <= beta.
ExactCountTable count_truncated(const TruncatedPartSet& tps, std::int64_t n_max);

// Scaled ratios c_n = A_n * p^n, computed by the recurrence
// c_n = sum_{k in S, k <= n} p^k c_{n-k}. The ratios converge to
// 1 / sum_{k in S} k p^k, so floating evaluation is stable at any n.
class ScaledCountTable {
public:
    ScaledCountTable(const PartSet& ps, double p, std::int64_t n_max);
    ScaledCountTable(const TruncatedPartSet& tps, double p, std::int64_t n_max);

    double ratio(std::int64_t n) const { return ratios_[static_cast<std::size_t>(n)]; }
    double p() const { return p_; }
    std::int64_t n_max() const { return static_cast<std::int64_t>(ratios_.size()) - 1; }

    // Longest part worth scanning: p^k below ~1e-19 contributes nothing
    // representable relative to the bounded ratios.
    std::int64_t scan_cutoff() const { return scan_cutoff_; }

private:
    void build(const PartSet& ps, std::int64_t part_cap, std::int64_t n_max);

    double p_;
    std::int64_t scan_cutoff_;
    std::vector<double> ratios_;
};

// Exact raw moment sums W^{(t)}_n = sum over compositions of n of B^t,
// W^{(t)}_0 = 1. Dividing by A_n gives E_n(B^t).
std::vector<BigInt> power_moment_sum(const PartSet& ps, std::int64_t n_max, int t);

// Asymptotic count 1 / (p^n * sum_{k in S} k p^k). Values overflow double
// near n ~ 1500, so the log-domain value is always carried.
struct AsymptoticCount {
    double log_value;
    double value;  // exp(log_value), or +inf when not representable
    bool representable;
};

AsymptoticCount count_asymptotic(double p, std::int64_t n, double kpk_sum);

// Normalized log-product moments e^{(t)}_n = E_n((log B)^t) for t = 0..t_max,
// computed by a DP on the scaled ratios (raw sums would overflow).
class LogMomentTable {
public:
    // t_max <= 4. Entries at n with A_n = 0 are absent.
    LogMomentTable(const PartSet& ps, const ScaledCountTable& scaled, std::int64_t n_max,
                   int t_max = 4);

    bool has(std::int64_t n) const { return present_[static_cast<std::size_t>(n)]; }
    // E_n((log B)^t); throws std::domain_error if absent.
    double raw(std::int64_t n, int t) const;

    double mean(std::int64_t n) const { return raw(n, 1); }
    double variance(std::int64_t n) const;
    // Fourth central moment R_n.
    double fourth_central(std::int64_t n) const;

    std::int64_t n_max() const { return static_cast<std::int64_t>(present_.size()) - 1; }

private:
    int t_max_;
    std::vector<bool> present_;
    std::vector<std::vector<double>> e_;  // e_[t][n]
};

}  // namespace complab

#endif
