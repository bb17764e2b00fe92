#ifndef COMPLAB_PART_SET_HPP
#define COMPLAB_PART_SET_HPP

#include <cstdint>
#include <vector>

namespace complab {

// A cofinite set S of allowed part sizes, stored by its finite complement.
// Membership: k is in S iff k >= 1 and k is not excluded.
class PartSet {
public:
    // Normalizes (dedup + sort). Throws std::invalid_argument on an empty
    // list (S must be a proper subset) or non-positive entries.
    explicit PartSet(std::vector<std::int64_t> excluded);

    const std::vector<std::int64_t>& excluded() const { return excluded_; }
    std::int64_t max_excluded() const { return excluded_.back(); }

    bool contains(std::int64_t k) const;

    // Smallest element of S.
    std::int64_t min_part() const;

private:
    std::vector<std::int64_t> excluded_;  // strictly ascending, nonempty
};

// S restricted to parts in [1, beta].
struct TruncatedPartSet {
    // Throws if S ∩ [1,beta] is empty.
    TruncatedPartSet(PartSet base, std::int64_t beta);

    bool contains(std::int64_t k) const {
        return k <= beta && base.contains(k);
    }

    PartSet base;
    std::int64_t beta;
};

// Coefficients of (1-x) f(x) = 1 - 2x + (1-x) * sum_{k excluded} x^k,
// ascending degree, exact integers. Degree is max_excluded + 1 and the
// value at x = 1 is always -1.
struct DenominatorPolynomial {
    std::vector<std::int64_t> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

DenominatorPolynomial denominator_polynomial(const PartSet& ps);

}  // namespace complab

#endif
