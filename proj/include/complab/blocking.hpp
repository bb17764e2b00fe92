#ifndef COMPLAB_BLOCKING_HPP
#define COMPLAB_BLOCKING_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "complab/composition.hpp"
#include "complab/counting.hpp"
#include "complab/part_set.hpp"

namespace complab {

struct BlockingParameters {
    std::int64_t m;
    std::int64_t beta;
    std::int64_t chunk;  // floor(n/m)
    bool valid;          // chunk > 2*beta, the theorem-regime guard
};

// m = floor(n^{1/3} / (c*log_{1/p} n)^{2/3}), beta = floor(c*log_{1/p} n).
// The multiplier c defaults to 5; it only shifts the error bounds. Throws
// when m = 0 (n below the blocking regime).
BlockingParameters default_parameters(std::int64_t n, double p, double beta_multiplier = 5.0);

// W_i = (pi_i, p_i): block sum and 1-based start position of block i.
using WVector = std::vector<std::pair<std::int64_t, std::int64_t>>;

struct BlockDecomposition {
    Composition pi0;                 // the m divider parts
    std::vector<Composition> blocks; // Pi_1..Pi_{m+1}; the last may be empty
    WVector w;
    std::vector<std::int64_t> tau;   // 1-based divider part indices
    std::int64_t m, beta, n;
};

// Split c along the parts covering ball positions i*floor(n/m). Strict mode
// requires floor(n/m) > 2*beta; non-strict mode only requires the divider
// indices tau_1 < ... < tau_m to be distinct (enough for well-definedness,
// and what the reference worked example needs). Throws on a part > beta or a
// tau collision.
BlockDecomposition decompose(const Composition& c, std::int64_t m, std::int64_t beta,
                             bool strict = false);

// Interleave Pi_1, pi0[1], Pi_2, ..., pi0[m], Pi_{m+1}. Throws on
// inconsistent sums. Round-trip identity with decompose.
Composition reconstruct(const BlockDecomposition& bd);

// |Lambda_W| = product over blocks of |Lambda^beta_{pi_i}|, exact.
BigInt class_size(const WVector& w, const ExactCountTable& truncated_counts);

struct IndependenceReport {
    std::int64_t n, m, beta;
    BigInt total;            // |Lambda_n^beta|
    std::size_t num_classes;
    bool class_sizes_ok;     // |Lambda_W| = prod |Lambda^beta_{pi_i}| per class
    bool factorization_ok;   // joint law given W factorizes exactly
    bool marginals_ok;       // law of L_i given W = law of log B on Lambda^beta_{pi_i}
    bool partition_ok;       // classes partition Lambda_n^beta
    std::string failure;

    bool ok() const { return class_sizes_ok && factorization_ok && marginals_ok && partition_ok; }
};

// Exhaustive check of the product formula, the conditional-independence
// factorization, and the per-block marginal match, all in exact integer
// arithmetic. Throws when |Lambda_n^beta| exceeds the cap.
IndependenceReport conditional_independence_check(const TruncatedPartSet& tps, std::int64_t n,
                                                  std::int64_t m,
                                                  std::int64_t cap = 10000000);

}  // namespace complab

#endif
