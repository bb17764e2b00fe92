#ifndef COMPLAB_SAMPLER_HPP
#define COMPLAB_SAMPLER_HPP

#include <cstdint>
#include <random>
#include <string>

#include "complab/composition.hpp"
#include "complab/counting.hpp"
#include "complab/part_set.hpp"

namespace complab {

// Seedable, stream-splittable generator. Identical (seed, stream, call
// sequence) gives identical output; parallel workers take distinct streams.
class SeededGenerator {
public:
    SeededGenerator(std::uint64_t seed, std::uint64_t stream = 0);

    double uniform();  // in [0, 1)

    static const char* name() { return "mt19937_64/splitmix64-streams"; }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::uint64_t seed_, stream_;
    std::mt19937_64 engine_;
};

// Exactly uniform sampling over Lambda_n (or Lambda_n^beta): the first part
// is k with probability A_{n-k}/A_n = c_{n-k} p^k / c_n, then recurse.
class CompositionSampler {
public:
    CompositionSampler(const PartSet& ps, double p, std::int64_t n_max);
    CompositionSampler(const TruncatedPartSet& tps, double p, std::int64_t n_max);

    // Throws std::domain_error when A_n = 0 (n unrepresentable).
    Composition sample(std::int64_t n, SeededGenerator& gen) const;

    const ScaledCountTable& table() const { return table_; }

private:
    PartSet ps_;
    std::int64_t beta_;  // part cap, or n_max when untruncated
    ScaledCountTable table_;
    std::vector<double> powers_;  // p^k for k up to the scan cutoff
};

}  // namespace complab

#endif
