#ifndef COMPLAB_ENUMERATION_HPP
#define COMPLAB_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "complab/part_set.hpp"

namespace complab {

// Exhaustive enumeration of S-restricted compositions, the brute-force side
// of the oracle checks. The visitor receives each composition's parts in
// lexicographic-by-prefix order; the buffer is reused between calls.
template <typename Visitor>
void for_each_composition(const PartSet& ps, std::int64_t n, std::int64_t max_part,
                          Visitor&& visit) {
    std::vector<std::int64_t> parts;
    auto rec = [&](auto&& self, std::int64_t rem) -> void {
        if (rem == 0) {
            if (!parts.empty()) visit(const_cast<const std::vector<std::int64_t>&>(parts));
            return;
        }
        const std::int64_t hi = max_part < rem ? max_part : rem;
        for (std::int64_t k = 1; k <= hi; ++k) {
            if (!ps.contains(k)) continue;
            parts.push_back(k);
            self(self, rem - k);
            parts.pop_back();
        }
    };
    rec(rec, n);
}

template <typename Visitor>
void for_each_composition(const PartSet& ps, std::int64_t n, Visitor&& visit) {
    for_each_composition(ps, n, n, std::forward<Visitor>(visit));
}

template <typename Visitor>
void for_each_composition(const TruncatedPartSet& tps, std::int64_t n, Visitor&& visit) {
    for_each_composition(tps.base, n, tps.beta, std::forward<Visitor>(visit));
}

}  // namespace complab

#endif
