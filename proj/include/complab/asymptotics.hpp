#ifndef COMPLAB_ASYMPTOTICS_HPP
#define COMPLAB_ASYMPTOTICS_HPP

#include "complab/part_set.hpp"

namespace complab {

// Series sums s[i][j] = sum_{k in S} k^j (log k)^i p^k for the exponents the
// closed-form constants need. s[0][0] restates f(p) = 0 and must come out 1,
// a built-in self-check.
struct SeriesSums {
    double s[3][4];
    double tol;

    double at(int i, int j) const { return s[i][j]; }
};

// i = 0 uses the closed forms over all k >= 1 minus the excluded terms;
// i >= 1 sums directly until a geometric tail bound certifies the remainder
// below tol. Throws std::runtime_error if tol is unreachable within the term
// cap.
double series_sum(const PartSet& ps, double p, int i, int j, double tol = 1e-14);

SeriesSums compute_series_sums(const PartSet& ps, double p, double tol = 1e-14);

struct AsymptoticConstants {
    double a1, a0;  // mean line:     E_n(log B) ~ a1 n + a0
    double b1, b0;  // variance line: V_n(log B) ~ b1 n + b0
    double b0_lines[3];
    double count_prefactor;  // 1 / sum k p^k
};

// a1 = s10/s01, a0 = s10*s02/s01^2 - s11/s01.
void mean_constants(const SeriesSums& sums, double& a1, double& a0);

// b1 = s10^2*s02/s01^3 - 2*s10*s11/s01^2 + s20/s01; b0 assembled from its
// three lines, each exposed for debugging.
void variance_constants(const SeriesSums& sums, double& b1, double& b0, double lines[3]);

AsymptoticConstants compute_constants(const PartSet& ps, double p, double tol = 1e-14);

}  // namespace complab

#endif
