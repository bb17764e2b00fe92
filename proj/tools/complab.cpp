// complab: S-restricted composition statistics workbench.
//
// Subcommands: roots, count, moments, constants, sample, decompose, verify,
// clt. JSON/CSV reports go to stdout, diagnostics to stderr. Exit codes:
// 0 success, 1 validation error, 2 verification failure.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "complab/asymptotics.hpp"
#include "complab/blocking.hpp"
#include "complab/clt_bench.hpp"
#include "complab/counting.hpp"
#include "complab/enumeration.hpp"
#include "complab/roots.hpp"
#include "complab/sampler.hpp"

using json = nlohmann::ordered_json;
using namespace complab;

namespace {

constexpr const char* kVersion = "0.1.0";

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list: '" + s + "'");
    return out;
}

std::string fmt17(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

int resolve_threads(int cli_threads) {
    if (const char* env = std::getenv("COMPLAB_THREADS")) return std::max(1, std::atoi(env));
    if (cli_threads > 0) return cli_threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

struct CommonOpts {
    std::string exclude;
    bool no_timestamp = false;
    int threads = 0;

    PartSet part_set() const { return PartSet(parse_int_list(exclude)); }
};

json base_report(const std::string& command, const CommonOpts& c, json config) {
    json rep;
    rep["command"] = command;
    rep["version"] = kVersion;
    config["excluded"] = parse_int_list(c.exclude);
    rep["config"] = std::move(config);
    if (!c.no_timestamp) {
        rep["timestamp"] =
            std::chrono::duration_cast<std::chrono::seconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count();
    }
    return rep;
}

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--exclude", c.exclude, "excluded part sizes, e.g. 1,4")->required();
    sub->add_flag("--no-timestamp", c.no_timestamp, "omit the timestamp field");
    sub->add_option("--threads", c.threads, "worker threads (COMPLAB_THREADS overrides)");
}

int cmd_roots(const CommonOpts& c, double tol) {
    const PartSet ps = c.part_set();
    const auto prof = all_roots(ps, tol);
    json rep = base_report("roots", c, {{"tol", tol}});
    rep["p"] = prof.p;
    rep["r"] = prof.r;
    json roots = json::array();
    for (const auto& e : prof.roots)
        roots.push_back({{"re", e.value.real()},
                         {"im", e.value.imag()},
                         {"multiplicity", e.multiplicity},
                         {"residual", e.residual}});
    rep["roots"] = std::move(roots);
    std::cout << rep.dump(2) << "\n";
    return 0;
}

int cmd_count(const CommonOpts& c, std::int64_t n) {
    const PartSet ps = c.part_set();
    const double p = principal_root(ps);
    const double s01 = series_sum(ps, p, 0, 1);
    const auto table = count_exact(ps, n);
    const auto est = count_asymptotic(p, n, s01);
    json rep = base_report("count", c, {{"n", n}});
    rep["n"] = n;
    rep["exact"] = table.at(n).str();
    rep["asymptotic"] = est.value;
    rep["log_asymptotic"] = est.log_value;
    if (table.at(n) > 0 && est.representable) {
        const double exact_d = table.at(n).convert_to<double>();
        rep["relative_gap"] = est.value / exact_d - 1.0;
    } else {
        rep["relative_gap"] = nullptr;
    }
    std::cout << rep.dump(2) << "\n";
    return 0;
}

int cmd_moments(const CommonOpts& c, const std::string& n_spec, int t_max) {
    const PartSet ps = c.part_set();
    const auto ns = parse_int_list(n_spec);
    std::int64_t n_top = 0;
    for (auto n : ns) n_top = std::max(n_top, n);
    const double p = principal_root(ps);
    const ScaledCountTable scaled(ps, p, n_top);
    const LogMomentTable lmt(ps, scaled, n_top, t_max);

    std::cout << "n,mean,variance,fourth_central\n";
    for (auto n : ns) {
        if (!lmt.has(n)) {
            std::cout << n << ",,,\n";
            continue;
        }
        std::cout << n << "," << (t_max >= 1 ? fmt17(lmt.mean(n)) : "") << ","
                  << (t_max >= 2 ? fmt17(lmt.variance(n)) : "") << ","
                  << (t_max >= 4 ? fmt17(lmt.fourth_central(n)) : "") << "\n";
    }
    return 0;
}

int cmd_constants(const CommonOpts& c, double tol) {
    const PartSet ps = c.part_set();
    const double p = principal_root(ps);
    const auto sums = compute_series_sums(ps, p, tol);
    const auto cc = compute_constants(ps, p, tol);
    json rep = base_report("constants", c, {{"tol", tol}});
    rep["p"] = p;
    rep["a1"] = cc.a1;
    rep["a0"] = cc.a0;
    rep["b1"] = cc.b1;
    rep["b0"] = cc.b0;
    rep["prefactor"] = cc.count_prefactor;
    json s;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 3; ++j)
            s["s" + std::to_string(i) + std::to_string(j)] = sums.at(i, j);
    rep["series_sums"] = std::move(s);
    std::cout << rep.dump(2) << "\n";
    return 0;
}

int cmd_sample(const CommonOpts& c, std::int64_t n, std::int64_t count, std::uint64_t seed,
               std::int64_t beta, const std::string& format) {
    const PartSet ps = c.part_set();
    const double p = principal_root(ps);
    std::unique_ptr<CompositionSampler> sampler;
    if (beta > 0)
        sampler = std::make_unique<CompositionSampler>(TruncatedPartSet(ps, beta), p, n);
    else
        sampler = std::make_unique<CompositionSampler>(ps, p, n);
    SeededGenerator gen(seed);

    if (format == "json") {
        json rep = base_report("sample", c,
                               {{"n", n}, {"count", count}, {"seed", seed}, {"beta", beta},
                                {"rng", SeededGenerator::name()}});
        json arr = json::array();
        for (std::int64_t i = 0; i < count; ++i) arr.push_back(sampler->sample(n, gen).parts);
        rep["samples"] = std::move(arr);
        std::cout << rep.dump(2) << "\n";
    } else {
        for (std::int64_t i = 0; i < count; ++i) {
            const auto comp = sampler->sample(n, gen);
            for (std::size_t j = 0; j < comp.parts.size(); ++j)
                std::cout << (j ? "," : "") << comp.parts[j];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_decompose(const CommonOpts& c, std::int64_t m, std::int64_t beta, bool strict,
                  const std::string& parts_spec, std::int64_t n, std::uint64_t seed) {
    const PartSet ps = c.part_set();
    Composition comp;
    if (!parts_spec.empty()) {
        comp.parts = parse_int_list(parts_spec);
    } else if (n > 0) {
        const double p = principal_root(ps);
        CompositionSampler sampler(TruncatedPartSet(ps, beta), p, n);
        SeededGenerator gen(seed);
        comp = sampler.sample(n, gen);
    } else {
        std::string line;
        if (!std::getline(std::cin, line))
            throw std::invalid_argument("decompose: no composition on stdin and no --parts/--n");
        comp.parts = parse_int_list(line);
    }

    const auto bd = decompose(comp, m, beta, strict);
    json rep = base_report("decompose", c,
                           {{"m", m}, {"beta", beta}, {"strict", strict}});
    rep["n"] = bd.n;
    rep["tau"] = bd.tau;
    rep["pi0"] = bd.pi0.parts;
    json blocks = json::array();
    for (const auto& b : bd.blocks) blocks.push_back(b.parts);
    rep["blocks"] = std::move(blocks);
    json w = json::array();
    for (const auto& [pi, pos] : bd.w) w.push_back({{"pi", pi}, {"pos", pos}});
    rep["W"] = std::move(w);
    rep["valid"] = (bd.n / m) > 2 * beta;
    const bool roundtrip = reconstruct(bd) == comp;
    rep["roundtrip"] = roundtrip;
    std::cout << rep.dump(2) << "\n";
    return roundtrip ? 0 : 2;
}

int verify_independence(const CommonOpts& c, std::int64_t n, std::int64_t m, std::int64_t beta,
                        std::int64_t cap) {
    const PartSet ps = c.part_set();
    const auto rep = conditional_independence_check(TruncatedPartSet(ps, beta), n, m, cap);
    auto line = [](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
    };
    line(rep.class_sizes_ok, "class sizes equal product of truncated counts");
    line(rep.factorization_ok, "conditional joint law factorizes");
    line(rep.marginals_ok, "block marginals match unconditioned block laws");
    line(rep.partition_ok, "classes partition the sample space");
    if (!rep.ok()) std::cerr << "counterexample: " << rep.failure << "\n";
    return rep.ok() ? 0 : 2;
}

int verify_all(const CommonOpts& c, bool quick) {
    const PartSet ps = c.part_set();
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
        if (!ok) ++failures;
    };

    // exact counts vs enumeration
    {
        const std::int64_t n_hi = quick ? 12 : 16;
        const auto table = count_exact(ps, n_hi);
        bool ok = true;
        for (std::int64_t n = 1; n <= n_hi; ++n) {
            BigInt cnt = 0;
            for_each_composition(ps, n, [&](const std::vector<std::int64_t>&) { cnt += 1; });
            if (cnt != table.at(n)) ok = false;
        }
        check(ok, "exact counts match enumeration");
    }

    const double p = principal_root(ps);

    // root structure
    {
        bool ok = true;
        try {
            const auto prof = all_roots(ps);
            int mult = 0;
            for (const auto& e : prof.roots) {
                mult += e.multiplicity;
                if (e.residual > 1e-10) ok = false;
            }
            if (mult != ps.max_excluded() + 1) ok = false;
            if (prof.r - prof.p < 1e-9) ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
        check(ok, "root profile structure");
    }

    // moment lines vs DP
    {
        const auto cc = compute_constants(ps, p);
        const std::int64_t n = quick ? 120 : 200;
        const ScaledCountTable scaled(ps, p, n);
        const LogMomentTable lmt(ps, scaled, n, 2);
        check(std::abs(lmt.mean(n) - (cc.a1 * static_cast<double>(n) + cc.a0)) < 1e-6,
              "mean line matches DP oracle");
        check(std::abs(lmt.variance(n) - (cc.b1 * static_cast<double>(n) + cc.b0)) < 1e-4,
              "variance line matches DP oracle");
    }

    // sampler validity
    {
        const std::int64_t n = 40;
        CompositionSampler sampler(ps, p, n);
        SeededGenerator gen(20240901);
        bool ok = true;
        const std::int64_t draws = quick ? 2000 : 20000;
        for (std::int64_t i = 0; i < draws; ++i) {
            const auto comp = sampler.sample(n, gen);
            if (comp.sum() != n) ok = false;
            for (auto k : comp.parts)
                if (!ps.contains(k)) ok = false;
        }
        check(ok, "sampled compositions are valid");
    }

    // blocking round-trip on sampled beta-bounded compositions
    {
        const std::int64_t n = quick ? 20000 : 50000;
        const auto params = default_parameters(n, p);
        bool ok = params.valid;
        if (ok) {
            CompositionSampler sampler(TruncatedPartSet(ps, params.beta), p, n);
            SeededGenerator gen(7);
            for (std::int64_t i = 0; i < (quick ? 100 : 500) && ok; ++i) {
                const auto comp = sampler.sample(n, gen);
                const auto bd = decompose(comp, params.m, params.beta, true);
                if (!(reconstruct(bd) == comp)) ok = false;
                if (static_cast<std::int64_t>(bd.pi0.parts.size()) != params.m) ok = false;
            }
        }
        check(ok, "decompose/reconstruct round-trip");
    }

    // KS at moderate n
    if (!quick) {
        const auto cc = compute_constants(ps, p);
        const std::int64_t n = 500;
        CompositionSampler sampler(ps, p, n);
        const double mu = cc.a1 * static_cast<double>(n) + cc.a0;
        const double sigma = std::sqrt(cc.b1 * static_cast<double>(n) + cc.b0);
        const auto rep =
            ks_standardized(sampler, n, 20000, 20240901, mu, sigma, 16, resolve_threads(c.threads));
        check(rep.ks_distance < 0.1, "KS distance at n=500 below 0.1");
    }

    return failures == 0 ? 0 : 2;
}

int cmd_clt(const CommonOpts& c, const std::string& n_spec, std::int64_t samples,
            std::uint64_t seed, bool exact_moments, bool sweep, int shards) {
    const PartSet ps = c.part_set();
    const auto ns = parse_int_list(n_spec);
    const double p = principal_root(ps);
    const auto cc = compute_constants(ps, p);
    const int threads = resolve_threads(c.threads);

    std::int64_t n_top = 0;
    for (auto n : ns) n_top = std::max(n_top, n);

    std::unique_ptr<LogMomentTable> lmt;
    std::unique_ptr<ScaledCountTable> scaled;
    if (exact_moments) {
        scaled = std::make_unique<ScaledCountTable>(ps, p, n_top);
        lmt = std::make_unique<LogMomentTable>(ps, *scaled, n_top, 2);
    }

    auto run_one = [&](std::int64_t n) {
        CompositionSampler sampler(ps, p, n);
        const double mu =
            exact_moments ? lmt->mean(n) : cc.a1 * static_cast<double>(n) + cc.a0;
        const double sigma = exact_moments
                                 ? std::sqrt(lmt->variance(n))
                                 : std::sqrt(cc.b1 * static_cast<double>(n) + cc.b0);
        return ks_standardized(sampler, n, samples, seed, mu, sigma, shards, threads);
    };

    if (sweep || ns.size() > 1) {
        std::cout << "n,ks,mu,sigma,N,seed\n";
        for (auto n : ns) {
            const auto rep = run_one(n);
            std::cout << n << "," << fmt17(rep.ks_distance) << "," << fmt17(rep.mu_used) << ","
                      << fmt17(rep.sigma_used) << "," << samples << "," << seed << "\n";
        }
        return 0;
    }

    const auto rep = run_one(ns[0]);
    json out = base_report("clt", c,
                           {{"n", ns[0]},
                            {"samples", samples},
                            {"seed", seed},
                            {"exact_moments", exact_moments},
                            {"shards", shards},
                            {"rng", SeededGenerator::name()}});
    out["n"] = rep.n;
    out["N"] = rep.samples;
    out["seed"] = rep.seed;
    out["mu_used"] = rep.mu_used;
    out["sigma_used"] = rep.sigma_used;
    out["ks_distance"] = rep.ks_distance;
    out["empirical_mean"] = rep.empirical_mean;
    out["empirical_variance"] = rep.empirical_variance;
    out["max_part_seen"] = rep.max_part_seen;
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S-restricted composition statistics workbench"};
    app.require_subcommand(1);

    CommonOpts c_roots, c_count, c_moments, c_constants, c_sample, c_decomp, c_verify, c_clt;

    auto* sub_roots = app.add_subcommand("roots", "roots of (1-x) f(x)");
    double roots_tol = 1e-12;
    add_common(sub_roots, c_roots);
    sub_roots->add_option("--tol", roots_tol);

    auto* sub_count = app.add_subcommand("count", "exact and asymptotic |Lambda_n|");
    std::int64_t count_n = 0;
    add_common(sub_count, c_count);
    sub_count->add_option("--n", count_n)->required();

    auto* sub_moments = app.add_subcommand("moments", "DP moments of log B (CSV)");
    std::string moments_n;
    int moments_tmax = 4;
    add_common(sub_moments, c_moments);
    sub_moments->add_option("--n", moments_n)->required();
    sub_moments->add_option("--tmax", moments_tmax);

    auto* sub_constants = app.add_subcommand("constants", "asymptotic constants a1,a0,b1,b0");
    double constants_tol = 1e-14;
    add_common(sub_constants, c_constants);
    sub_constants->add_option("--tol", constants_tol);

    auto* sub_sample = app.add_subcommand("sample", "uniform random compositions");
    std::int64_t sample_n = 0, sample_count = 1, sample_beta = 0;
    std::uint64_t sample_seed = 0;
    std::string sample_format = "lines";
    add_common(sub_sample, c_sample);
    sub_sample->add_option("--n", sample_n)->required();
    sub_sample->add_option("--count", sample_count);
    sub_sample->add_option("--seed", sample_seed);
    sub_sample->add_option("--beta", sample_beta, "restrict parts to [1,beta]");
    sub_sample->add_option("--format", sample_format)->check(CLI::IsMember({"lines", "json"}));

    auto* sub_decomp = app.add_subcommand("decompose", "blocking decomposition");
    std::int64_t dec_m = 0, dec_beta = 0, dec_n = 0;
    std::uint64_t dec_seed = 0;
    bool dec_strict = false;
    std::string dec_parts;
    add_common(sub_decomp, c_decomp);
    sub_decomp->add_option("--m", dec_m)->required();
    sub_decomp->add_option("--beta", dec_beta)->required();
    sub_decomp->add_flag("--strict", dec_strict);
    sub_decomp->add_option("--parts", dec_parts, "composition (default: read stdin)");
    sub_decomp->add_option("--n", dec_n, "sample a composition of n instead");
    sub_decomp->add_option("--seed", dec_seed);

    auto* sub_verify = app.add_subcommand("verify", "invariant suites");
    std::string verify_what = "all";
    bool verify_quick = false;
    std::int64_t ver_n = 30, ver_m = 2, ver_beta = 3, ver_cap = 10000000;
    add_common(sub_verify, c_verify);
    sub_verify->add_option("what", verify_what)->check(CLI::IsMember({"all", "independence"}));
    sub_verify->add_flag("--quick", verify_quick);
    sub_verify->add_option("--n", ver_n);
    sub_verify->add_option("--m", ver_m);
    sub_verify->add_option("--beta", ver_beta);
    sub_verify->add_option("--cap", ver_cap);

    auto* sub_clt = app.add_subcommand("clt", "KS bench against the standard normal");
    std::string clt_n, clt_mode;
    std::int64_t clt_samples = 100000;
    std::uint64_t clt_seed = 0;
    bool clt_exact = false;
    int clt_shards = 16;
    add_common(sub_clt, c_clt);
    sub_clt->add_option("mode", clt_mode)->check(CLI::IsMember({"sweep"}));
    sub_clt->add_option("--n", clt_n)->required();
    sub_clt->add_option("--samples", clt_samples);
    sub_clt->add_option("--seed", clt_seed);
    sub_clt->add_flag("--exact-moments", clt_exact);
    sub_clt->add_option("--shards", clt_shards);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sub_roots->parsed()) return cmd_roots(c_roots, roots_tol);
        if (sub_count->parsed()) return cmd_count(c_count, count_n);
        if (sub_moments->parsed()) return cmd_moments(c_moments, moments_n, moments_tmax);
        if (sub_constants->parsed()) return cmd_constants(c_constants, constants_tol);
        if (sub_sample->parsed())
            return cmd_sample(c_sample, sample_n, sample_count, sample_seed, sample_beta,
                              sample_format);
        if (sub_decomp->parsed())
            return cmd_decompose(c_decomp, dec_m, dec_beta, dec_strict, dec_parts, dec_n, dec_seed);
        if (sub_verify->parsed()) {
            if (verify_what == "independence")
                return verify_independence(c_verify, ver_n, ver_m, ver_beta, ver_cap);
            return verify_all(c_verify, verify_quick);
        }
        if (sub_clt->parsed())
            return cmd_clt(c_clt, clt_n, clt_samples, clt_seed, clt_exact, clt_mode == "sweep",
                           clt_shards);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
