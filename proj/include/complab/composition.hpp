#ifndef COMPLAB_COMPOSITION_HPP
#define COMPLAB_COMPOSITION_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace complab {

// A composition: parts summing to n. The empty composition (n = 0, no parts,
// B = 1) is allowed as the last block of a decomposition.
struct Composition {
    std::vector<std::int64_t> parts;

    std::int64_t sum() const {
        return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
    }

    // B = product of parts, exact.
    boost::multiprecision::cpp_int product() const {
        boost::multiprecision::cpp_int b = 1;
        for (auto k : parts) b *= k;
        return b;
    }

    double log_product() const {
        double s = 0.0;
        for (auto k : parts) s += std::log(static_cast<double>(k));
        return s;
    }

    bool operator==(const Composition&) const = default;
};

}  // namespace complab

#endif
