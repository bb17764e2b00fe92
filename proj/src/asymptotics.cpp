#include "complab/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace complab {

namespace {

// Closed forms for sum_{k>=1} k^j p^k.
double full_power_sum(double p, int j) {
    const double q = 1.0 - p;
    switch (j) {
        case 0: return p / q;
        case 1: return p / (q * q);
        case 2: return p * (1.0 + p) / (q * q * q);
        case 3: return p * (1.0 + 4.0 * p + p * p) / (q * q * q * q);
        default: throw std::invalid_argument("series_sum: j must be in [0,3]");
    }
}

double term(double p, int i, int j, std::int64_t k) {
    double v = std::pow(p, static_cast<double>(k));
    for (int a = 0; a < j; ++a) v *= static_cast<double>(k);
    if (i > 0) {
        const double lk = std::log(static_cast<double>(k));
        for (int a = 0; a < i; ++a) v *= lk;
    }
    return v;
}

}  // namespace

double series_sum(const PartSet& ps, double p, int i, int j, double tol) {
    if (i < 0 || i > 2 || j < 0 || j > 3) throw std::invalid_argument("series_sum: index out of range");
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("series_sum: p must be in (0,1)");

    if (i == 0) {
        double v = full_power_sum(p, j);
        for (auto k : ps.excluded()) v -= term(p, 0, j, k);
        return v;
    }

    // Direct summation. Terms a_k = k^j (log k)^i p^k are eventually dominated
    // by a geometric sequence: a_{k+1}/a_k <= p * ((k+1)/k)^j * (log(k+1)/log k)^i,
    // which drops below rho = (1+p)/2 once k is large enough. Tail bound:
    // a_k * rho / (1 - rho).
    const double rho = 0.5 * (1.0 + p);
    const std::int64_t cap = 1000000;
    double sum = 0.0;
    for (std::int64_t k = 1; k <= cap; ++k) {
        if (!ps.contains(k)) continue;
        const double a = term(p, i, j, k);
        sum += a;
        if (k >= 2) {
            const double ratio = p * std::pow((k + 1.0) / k, j) *
                                 std::pow(std::log(k + 1.0) / std::log(static_cast<double>(k)), i);
            if (ratio <= rho && a * rho / (1.0 - rho) < tol) return sum;
        }
    }
    throw std::runtime_error("series_sum: tail tolerance unreachable within term cap");
}

SeriesSums compute_series_sums(const PartSet& ps, double p, double tol) {
    SeriesSums out{};
    out.tol = tol;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 3; ++j) out.s[i][j] = series_sum(ps, p, i, j, tol);
    return out;
}

void mean_constants(const SeriesSums& s, double& a1, double& a0) {
    const double s01 = s.at(0, 1), s02 = s.at(0, 2);
    const double s10 = s.at(1, 0), s11 = s.at(1, 1);
    a1 = s10 / s01;
    a0 = s10 * s02 / (s01 * s01) - s11 / s01;
}

void variance_constants(const SeriesSums& s, double& b1, double& b0, double lines[3]) {
    const double s01 = s.at(0, 1), s02 = s.at(0, 2), s03 = s.at(0, 3);
    const double s10 = s.at(1, 0), s11 = s.at(1, 1), s12 = s.at(1, 2);
    const double s20 = s.at(2, 0), s21 = s.at(2, 1);

    b1 = s10 * s10 * s02 / (s01 * s01 * s01) - 2.0 * s10 * s11 / (s01 * s01) + s20 / s01;

    lines[0] = 2.0 * s10 * s10 * s02 * s02 / (s01 * s01 * s01 * s01);
    lines[1] = -(s10 * s10 * s03 + 4.0 * s10 * s11 * s02) / (s01 * s01 * s01);
    lines[2] = (s11 * s11 + s20 * s02 + 2.0 * s10 * s12) / (s01 * s01) - s21 / s01;
    b0 = lines[0] + lines[1] + lines[2];
}

AsymptoticConstants compute_constants(const PartSet& ps, double p, double tol) {
    const SeriesSums sums = compute_series_sums(ps, p, tol);
    AsymptoticConstants c{};
    mean_constants(sums, c.a1, c.a0);
    variance_constants(sums, c.b1, c.b0, c.b0_lines);
    c.count_prefactor = 1.0 / sums.at(0, 1);
    return c;
}

}  // namespace complab
