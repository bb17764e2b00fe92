#include "complab/part_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace complab {

PartSet::PartSet(std::vector<std::int64_t> excluded) : excluded_(std::move(excluded)) {
    if (excluded_.empty())
        throw std::invalid_argument("part set: S must be a proper subset (excluded list is empty)");
    for (auto k : excluded_)
        if (k < 1) throw std::invalid_argument("part set: excluded entries must be positive");
    std::sort(excluded_.begin(), excluded_.end());
    excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
}

bool PartSet::contains(std::int64_t k) const {
    if (k < 1) return false;
    return !std::binary_search(excluded_.begin(), excluded_.end(), k);
}

std::int64_t PartSet::min_part() const {
    std::int64_t k = 1;
    while (!contains(k)) ++k;  // excluded is finite, so this terminates
    return k;
}

TruncatedPartSet::TruncatedPartSet(PartSet base_, std::int64_t beta_)
    : base(std::move(base_)), beta(beta_) {
    if (beta < base.min_part())
        throw std::invalid_argument("truncated part set: S ∩ [1,beta] is empty");
}

DenominatorPolynomial denominator_polynomial(const PartSet& ps) {
    const auto M = ps.max_excluded();
    std::vector<std::int64_t> c(static_cast<std::size_t>(M) + 2, 0);
    c[0] = 1;
    c[1] = -2;
    // (1-x) * sum_{k excluded} x^k contributes +x^k - x^{k+1}
    for (auto k : ps.excluded()) {
        c[static_cast<std::size_t>(k)] += 1;
        c[static_cast<std::size_t>(k) + 1] -= 1;
    }
    return DenominatorPolynomial{std::move(c)};
}

}  // namespace complab
