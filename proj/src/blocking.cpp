#include "complab/blocking.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "complab/enumeration.hpp"

namespace complab {

namespace {

BigInt value_or_zero(const std::map<BigInt, BigInt>& m, const BigInt& k) {
    const auto it = m.find(k);
    return it == m.end() ? BigInt(0) : it->second;
}

}  // namespace

BlockingParameters default_parameters(std::int64_t n, double p, double beta_multiplier) {
    if (n < 2) throw std::invalid_argument("default_parameters: n must be >= 2");
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("default_parameters: p must be in (0,1)");
    const double logn = beta_multiplier * std::log(static_cast<double>(n)) / std::log(1.0 / p);
    const auto beta = static_cast<std::int64_t>(std::floor(logn));
    const auto m = static_cast<std::int64_t>(
        std::floor(std::cbrt(static_cast<double>(n)) / std::pow(logn, 2.0 / 3.0)));
    if (m < 1) throw std::invalid_argument("default_parameters: n below blocking regime (m = 0)");
    BlockingParameters out{};
    out.m = m;
    out.beta = beta;
    out.chunk = n / m;
    out.valid = out.chunk > 2 * beta;
    return out;
}

BlockDecomposition decompose(const Composition& c, std::int64_t m, std::int64_t beta,
                             bool strict) {
    if (m < 1) throw std::invalid_argument("decompose: m must be >= 1");
    const std::int64_t n = c.sum();
    for (auto k : c.parts)
        if (k > beta) throw std::invalid_argument("decompose: composition has a part larger than beta");
    const std::int64_t chunk = n / m;
    if (strict && chunk <= 2 * beta)
        throw std::invalid_argument("decompose: strict mode requires floor(n/m) > 2*beta");

    const auto tau_count = static_cast<std::size_t>(m);
    std::vector<std::int64_t> tau(tau_count, 0);  // 1-based part indices
    {
        std::int64_t running = 0, t = 0;
        std::size_t i = 0;
        for (std::size_t j = 0; j < c.parts.size() && i < tau_count; ++j) {
            running += c.parts[j];
            t = static_cast<std::int64_t>(j) + 1;
            while (i < tau_count && running >= static_cast<std::int64_t>(i + 1) * chunk) {
                tau[i++] = t;
            }
        }
        if (i < tau_count) throw std::invalid_argument("decompose: composition too short for m dividers");
    }
    for (std::size_t i = 1; i < tau_count; ++i)
        if (tau[i] == tau[i - 1])
            throw std::invalid_argument("decompose: degenerate divider collision (tau_i = tau_{i-1})");

    BlockDecomposition bd{};
    bd.m = m;
    bd.beta = beta;
    bd.n = n;
    bd.tau = tau;

    for (auto t : tau) bd.pi0.parts.push_back(c.parts[static_cast<std::size_t>(t - 1)]);

    // Blocks are the runs between dividers; the last one may be empty.
    std::vector<std::int64_t> prefix(c.parts.size() + 1, 0);
    for (std::size_t j = 0; j < c.parts.size(); ++j) prefix[j + 1] = prefix[j] + c.parts[j];

    for (std::size_t i = 0; i <= tau_count; ++i) {
        const std::int64_t lo = (i == 0) ? 1 : tau[i - 1] + 1;  // 1-based, inclusive
        const std::int64_t hi = (i == tau_count) ? static_cast<std::int64_t>(c.parts.size())
                                                 : tau[i] - 1;
        Composition block;
        for (std::int64_t j = lo; j <= hi; ++j)
            block.parts.push_back(c.parts[static_cast<std::size_t>(j - 1)]);
        const std::int64_t start = (i == 0) ? 1 : prefix[static_cast<std::size_t>(tau[i - 1])] + 1;
        bd.w.emplace_back(block.sum(), start);
        bd.blocks.push_back(std::move(block));
    }
    return bd;
}

Composition reconstruct(const BlockDecomposition& bd) {
    if (bd.blocks.size() != bd.pi0.parts.size() + 1)
        throw std::invalid_argument("reconstruct: block/divider count mismatch");
    Composition out;
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        for (auto k : bd.blocks[i].parts) out.parts.push_back(k);
        if (i < bd.pi0.parts.size()) out.parts.push_back(bd.pi0.parts[i]);
    }
    if (out.sum() != bd.n) throw std::invalid_argument("reconstruct: inconsistent sums");
    return out;
}

BigInt class_size(const WVector& w, const ExactCountTable& truncated_counts) {
    BigInt prod = 1;
    for (const auto& [pi, pos] : w) prod *= truncated_counts.at(pi);
    return prod;
}

IndependenceReport conditional_independence_check(const TruncatedPartSet& tps, std::int64_t n,
                                                  std::int64_t m, std::int64_t cap) {
    const auto counts = count_truncated(tps, n);
    if (counts.at(n) > cap)
        throw std::runtime_error("conditional_independence_check: |Lambda_n^beta| exceeds the enumeration cap");

    IndependenceReport rep{};
    rep.n = n;
    rep.m = m;
    rep.beta = tps.beta;
    rep.total = counts.at(n);
    rep.class_sizes_ok = rep.factorization_ok = rep.marginals_ok = rep.partition_ok = true;

    struct ClassData {
        BigInt members = 0;
        std::map<std::vector<BigInt>, BigInt> joint;          // (y_1..y_{m+1}) -> count
        std::vector<std::map<BigInt, BigInt>> marginals;      // per block: y -> count
    };
    std::map<WVector, ClassData> classes;

    for_each_composition(tps, n, [&](const std::vector<std::int64_t>& parts) {
        const auto bd = decompose(Composition{parts}, m, tps.beta, /*strict=*/false);
        auto& cd = classes[bd.w];
        if (cd.marginals.empty()) cd.marginals.resize(bd.blocks.size());
        cd.members += 1;
        std::vector<BigInt> tuple;
        tuple.reserve(bd.blocks.size());
        for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
            BigInt b = bd.blocks[i].product();
            cd.marginals[i][b] += 1;
            tuple.push_back(std::move(b));
        }
        cd.joint[tuple] += 1;
    });

    rep.num_classes = classes.size();

    // Exact log-B distribution on Lambda^beta_s, keyed by the integer product.
    std::map<std::int64_t, std::map<BigInt, BigInt>> block_law_cache;
    auto block_law = [&](std::int64_t s) -> const std::map<BigInt, BigInt>& {
        auto it = block_law_cache.find(s);
        if (it != block_law_cache.end()) return it->second;
        std::map<BigInt, BigInt> law;
        if (s == 0)
            law[BigInt(1)] = 1;  // the empty composition
        else
            for_each_composition(tps, s, [&](const std::vector<std::int64_t>& parts) {
                law[Composition{parts}.product()] += 1;
            });
        return block_law_cache.emplace(s, std::move(law)).first->second;
    };

    BigInt covered = 0;
    for (const auto& [w, cd] : classes) {
        covered += cd.members;

        if (cd.members != class_size(w, counts)) {
            rep.class_sizes_ok = false;
            rep.failure = "class size != product of truncated counts";
        }

        // Factorization: joint(t) * |class|^m == prod_i marginal_i(y_i).
        // Equality on every observed tuple, together with the mass identity
        // sum_t prod_i marginal_i = |class|^{m+1}, covers unobserved tuples too.
        BigInt class_pow_m = 1;
        for (std::int64_t i = 0; i < m; ++i) class_pow_m *= cd.members;
        for (const auto& [tuple, cnt] : cd.joint) {
            BigInt rhs = 1;
            for (std::size_t i = 0; i < tuple.size(); ++i) rhs *= cd.marginals[i].at(tuple[i]);
            if (cnt * class_pow_m != rhs) {
                rep.factorization_ok = false;
                rep.failure = "conditional joint law does not factorize";
            }
        }

        // Marginal match: marginal_i(y)/|class| == law_{pi_i}(y)/|Lambda^beta_{pi_i}|.
        for (std::size_t i = 0; i < cd.marginals.size(); ++i) {
            const auto pi = w[i].first;
            const auto& law = block_law(pi);
            const BigInt denom = (pi == 0) ? BigInt(1) : counts.at(pi);
            for (const auto& [y, cnt] : law)
                if (cnt * cd.members != value_or_zero(cd.marginals[i], y) * denom) {
                    rep.marginals_ok = false;
                    rep.failure = "block marginal differs from the unconditioned block law";
                }
        }
    }
    if (covered != rep.total) {
        rep.partition_ok = false;
        rep.failure = "equivalence classes do not partition Lambda_n^beta";
    }
    return rep;
}

}  // namespace complab
