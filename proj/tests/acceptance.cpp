// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "complab/asymptotics.hpp"
#include "complab/blocking.hpp"
#include "complab/clt_bench.hpp"
#include "complab/counting.hpp"
#include "complab/enumeration.hpp"
#include "complab/roots.hpp"
#include "complab/sampler.hpp"
#include "stat_util.hpp"

using namespace complab;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const char* what, double elapsed_s) {
    std::printf("%s criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion, what, elapsed_s);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::vector<std::int64_t>> kFiveSets{{1}, {2}, {1, 2}, {1, 4}, {3}};

// 1. exact-count oracle against exhaustive enumeration, n <= 18
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& excluded : kFiveSets) {
        PartSet ps(excluded);
        const auto table = count_exact(ps, 18);
        for (std::int64_t n = 0; n <= 18; ++n) {
            BigInt cnt = (n == 0) ? 1 : 0;
            for_each_composition(ps, n, [&](const std::vector<std::int64_t>&) { cnt += 1; });
            if (cnt != table.at(n)) ok = false;
        }
    }
    const double dt = seconds_since(t0);
    report(1, ok && dt < 10.0, "exact counts equal enumeration, five part sets, n <= 18", dt);
}

// 2. asymptotic count accuracy
void criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    {
        PartSet ps({1});
        const double p = principal_root(ps);
        const auto est = count_asymptotic(p, 50, series_sum(ps, p, 0, 1));
        const double exact = count_exact(ps, 50).at(50).convert_to<double>();
        if (!(std::abs(est.value / exact - 1.0) < 1e-8)) ok = false;
    }
    {
        PartSet ps({2});
        const double p = principal_root(ps);
        const auto est = count_asymptotic(p, 40, series_sum(ps, p, 0, 1));
        const double exact = count_exact(ps, 40).at(40).convert_to<double>();
        if (!(std::abs(est.value / exact - 1.0) < 1e-6)) ok = false;
    }
    const double dt = seconds_since(t0);
    report(2, ok && dt < 1.0, "asymptotic count within 1e-8 (n=50) / 1e-6 (n=40)", dt);
}

// 3. power moments match enumeration exactly for t <= 2, n <= 15
void criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& excluded : {std::vector<std::int64_t>{1}, {2}, {1, 4}}) {
        PartSet ps(excluded);
        for (int t = 1; t <= 2; ++t) {
            const auto w = power_moment_sum(ps, 15, t);
            for (std::int64_t n = 1; n <= 15; ++n) {
                BigInt sum = 0;
                for_each_composition(ps, n, [&](const std::vector<std::int64_t>& parts) {
                    BigInt b = Composition{parts}.product();
                    BigInt bt = 1;
                    for (int j = 0; j < t; ++j) bt *= b;
                    sum += bt;
                });
                if (w[static_cast<std::size_t>(n)] != sum) ok = false;
            }
        }
    }
    report(3, ok, "E_n(B) and E_n(B^2) sums match enumeration exactly", seconds_since(t0));
}

// 4 & 5. mean and variance lines at n = 200
void criteria45() {
    const auto t0 = std::chrono::steady_clock::now();
    bool mean_ok = true, var_ok = true;
    for (const auto& excluded : {std::vector<std::int64_t>{1}, {2}}) {
        PartSet ps(excluded);
        const double p = principal_root(ps);
        const auto c = compute_constants(ps, p);
        const ScaledCountTable scaled(ps, p, 200);
        const LogMomentTable lmt(ps, scaled, 200, 2);
        if (!(std::abs(lmt.mean(200) - (c.a1 * 200.0 + c.a0)) < 1e-6)) mean_ok = false;
        if (!(std::abs(lmt.variance(200) - (c.b1 * 200.0 + c.b0)) < 1e-4)) var_ok = false;
    }
    const double dt = seconds_since(t0);
    report(4, mean_ok && dt < 1.0, "E_n(log B) within 1e-6 of a1*n + a0 at n=200", dt);
    report(5, var_ok, "V_n(log B) within 1e-4 of b1*n + b0 at n=200", dt);
}

// 6. fourth-central-moment ratio boundedness
void criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    PartSet ps({1});
    const double p = principal_root(ps);
    const ScaledCountTable scaled(ps, p, 400);
    const LogMomentTable lmt(ps, scaled, 400);
    const auto entries = fourth_moment_check(lmt, {100, 200, 400});
    double lo = 1e300, hi = 0.0;
    bool finite = true;
    for (const auto& e : entries) {
        if (!std::isfinite(e.ratio)) finite = false;
        lo = std::min(lo, e.ratio);
        hi = std::max(hi, e.ratio);
    }
    report(6, finite && hi / lo < 3.0, "R_n/n^2 finite with max/min < 3 over n in {100,200,400}",
           seconds_since(t0));
}

// 7. root structure on all five test part sets
void criterion7() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& excluded : kFiveSets) {
        PartSet ps(excluded);
        try {
            const auto prof = all_roots(ps);
            if (!(prof.r - prof.p > 1e-9)) ok = false;
            for (const auto& e : prof.roots) {
                if (!(e.residual < 1e-10)) ok = false;
                if (&e != &prof.roots.front() && !(std::abs(e.value) > prof.p)) ok = false;
                if (e.value.imag() != 0.0) {
                    bool paired = false;
                    for (const auto& other : prof.roots)
                        if (std::abs(other.value - std::conj(e.value)) < 1e-9) paired = true;
                    if (!paired) ok = false;
                }
            }
        } catch (const std::exception&) {
            ok = false;
        }
    }
    report(7, ok, "residuals < 1e-10, p strictly smallest with gap > 1e-9, conjugate pairing",
           seconds_since(t0));
}

// 8. chi-square uniformity over Lambda_12, N = 200000
void criterion8() {
    const auto t0 = std::chrono::steady_clock::now();
    PartSet ps({1});
    const double p = principal_root(ps);
    const std::int64_t n = 12, draws = 200000;

    std::map<std::vector<std::int64_t>, std::int64_t> cells;
    for_each_composition(ps, n, [&](const std::vector<std::int64_t>& parts) { cells[parts] = 0; });

    CompositionSampler sampler(ps, p, n);
    SeededGenerator gen(20240901);
    bool ok = true;
    for (std::int64_t i = 0; i < draws; ++i) {
        auto it = cells.find(sampler.sample(n, gen).parts);
        if (it == cells.end()) {
            ok = false;
            break;
        }
        it->second++;
    }
    if (ok) {
        const double expected = static_cast<double>(draws) / static_cast<double>(cells.size());
        double stat = 0.0;
        for (const auto& [comp, count] : cells) {
            const double d = static_cast<double>(count) - expected;
            stat += d * d / expected;
        }
        ok = stat < chi_square_critical(static_cast<double>(cells.size()) - 1.0, 1e-3);
    }
    report(8, ok, "sampler chi-square over Lambda_12 passes at significance 1e-3",
           seconds_since(t0));
}

// 9. reference decomposition example, bit-exact
void criterion9() {
    const auto t0 = std::chrono::steady_clock::now();
    const Composition c{{3, 2, 3, 1, 2, 2, 2, 3, 2, 2, 2, 1}};
    bool ok = true;
    try {
        const auto bd = decompose(c, 4, 3, /*strict=*/false);
        ok = bd.tau == std::vector<std::int64_t>({3, 6, 8, 11}) &&
             bd.pi0.parts == std::vector<std::int64_t>({3, 2, 3, 2}) && bd.blocks.size() == 5 &&
             bd.blocks[0].parts == std::vector<std::int64_t>({3, 2}) &&
             bd.blocks[1].parts == std::vector<std::int64_t>({1, 2}) &&
             bd.blocks[2].parts == std::vector<std::int64_t>({2}) &&
             bd.blocks[3].parts == std::vector<std::int64_t>({2, 2}) &&
             bd.blocks[4].parts == std::vector<std::int64_t>({1}) && reconstruct(bd) == c;
    } catch (const std::exception&) {
        ok = false;
    }
    report(9, ok, "n=25, m=4 worked example reproduced bit-exactly", seconds_since(t0));
}

// 10. product formula + factorization + marginal match, exhaustive
void criterion10() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    try {
        PartSet ps({2});
        const auto rep = conditional_independence_check(TruncatedPartSet(ps, 3), 30, 2);
        ok = rep.ok();
    } catch (const std::exception&) {
        ok = false;
    }
    const double dt = seconds_since(t0);
    report(10, ok && dt < 120.0, "class sizes, factorization, marginals exact on beta=3, n=30, m=2",
           dt);
}

// 11. tail probability bound at n in {50, 100, 200}
void criterion11() {
    const auto t0 = std::chrono::steady_clock::now();
    PartSet ps({1});
    const double p = principal_root(ps);
    bool ok = true;
    for (std::int64_t n : {50, 100, 200}) {
        const auto beta = static_cast<std::int64_t>(
            std::floor(5.0 * std::log(static_cast<double>(n)) / std::log(1.0 / p)));
        const double t = tail_probability(ps, n, beta).convert_to<double>();
        if (!(t <= 10.0 * static_cast<double>(n) * std::pow(p, static_cast<double>(beta))))
            ok = false;
    }
    report(11, ok, "exact P_n(part > beta) <= 10 n p^beta", seconds_since(t0));
}

// 12. KS at desk scale + exact CDF distance shrinking
void criterion12() {
    const auto t0 = std::chrono::steady_clock::now();
    PartSet ps({1});
    const double p = principal_root(ps);
    const auto c = compute_constants(ps, p);
    const std::int64_t N = 100000;
    const std::uint64_t seed = 20240901;

    auto ks_at = [&](std::int64_t n) {
        CompositionSampler sampler(ps, p, n);
        const double mu = c.a1 * static_cast<double>(n) + c.a0;
        const double sigma = std::sqrt(c.b1 * static_cast<double>(n) + c.b0);
        return ks_standardized(sampler, n, N, seed, mu, sigma).ks_distance;
    };
    const double ks2000 = ks_at(2000);
    const double ks100 = ks_at(100);

    auto exact_at = [&](std::int64_t n) {
        const auto d = exact_distribution(ps, n);
        const double mu = c.a1 * static_cast<double>(n) + c.a0;
        const double sigma = std::sqrt(c.b1 * static_cast<double>(n) + c.b0);
        return exact_cdf_distance(d, mu, sigma);
    };
    const bool shrink = exact_at(25) < exact_at(10);

    const double dt = seconds_since(t0);
    const bool ok = ks2000 < 0.05 && ks2000 / ks100 < 0.8 && shrink && dt < 120.0;
    report(12, ok, "KS(2000) < 0.05, KS(2000)/KS(100) < 0.8, exact distance shrinks 10 -> 25", dt);
}

// 13. blocking moment check at n = 1e5
void criterion13() {
    const auto t0 = std::chrono::steady_clock::now();
    PartSet ps({1});
    const double p = principal_root(ps);
    bool ok = true;
    try {
        const auto rep = blocking_moment_check(ps, p, 100000, 10000, 20240901);
        ok = rep.deviation_ok && rep.edges_ok;
    } catch (const std::exception&) {
        ok = false;
    }
    report(13, ok, "middle-block sum within 2 m beta of E_n(log B); edges below m log beta",
           seconds_since(t0));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criteria45();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    std::printf("%s (%d failure%s)\n", g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT",
                g_failures, g_failures == 1 ? "" : "s");
    return g_failures == 0 ? 0 : 1;
}
