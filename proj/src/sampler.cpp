#include "complab/sampler.hpp"

#include <algorithm>
#include <stdexcept>

namespace complab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

SeededGenerator::SeededGenerator(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(splitmix64(seed ^ splitmix64(stream))) {}

double SeededGenerator::uniform() {
    // 53-bit mantissa, in [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

CompositionSampler::CompositionSampler(const PartSet& ps, double p, std::int64_t n_max)
    : ps_(ps), beta_(n_max), table_(ps, p, n_max) {
    powers_.resize(static_cast<std::size_t>(table_.scan_cutoff()) + 1);
    powers_[0] = 1.0;
    for (std::size_t k = 1; k < powers_.size(); ++k) powers_[k] = powers_[k - 1] * p;
}

CompositionSampler::CompositionSampler(const TruncatedPartSet& tps, double p, std::int64_t n_max)
    : ps_(tps.base), beta_(tps.beta), table_(tps, p, n_max) {
    powers_.resize(static_cast<std::size_t>(table_.scan_cutoff()) + 1);
    powers_[0] = 1.0;
    for (std::size_t k = 1; k < powers_.size(); ++k) powers_[k] = powers_[k - 1] * p;
}

Composition CompositionSampler::sample(std::int64_t n, SeededGenerator& gen) const {
    if (n < 1 || n > table_.n_max() || table_.ratio(n) <= 0.0)
        throw std::domain_error("sample: n is not representable with this part set");

    Composition out;
    std::int64_t rem = n;
    while (rem > 0) {
        const double cn = table_.ratio(rem);
        const double u = gen.uniform();
        const std::int64_t kmax = std::min({rem, beta_, table_.scan_cutoff()});
        double cum = 0.0;
        std::int64_t chosen = 0, last_valid = 0;
        for (std::int64_t k = 1; k <= kmax; ++k) {
            if (!ps_.contains(k)) continue;
            const double cprev = table_.ratio(rem - k);
            if (cprev <= 0.0) continue;
            last_valid = k;
            cum += cprev * powers_[static_cast<std::size_t>(k)] / cn;
            if (cum >= u) {
                chosen = k;
                break;
            }
        }
        // The weights sum to 1 by the count recurrence; a miss can only come
        // from rounding in the last ~1e-15 of mass.
        if (chosen == 0) chosen = last_valid;
        out.parts.push_back(chosen);
        rem -= chosen;
    }
    return out;
}

}  // namespace complab
