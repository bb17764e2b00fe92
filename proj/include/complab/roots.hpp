#ifndef COMPLAB_ROOTS_HPP
#define COMPLAB_ROOTS_HPP

#include <complex>
#include <vector>

#include "complab/part_set.hpp"

namespace complab {

struct RootEntry {
    std::complex<double> value;
    int multiplicity;
    double residual;  // |poly(root)| relative to coefficient scale
};

// All roots of (1-x) f(x), sorted ascending by magnitude (ties by phase
// angle). The first root is the principal root p; r is the magnitude of the
// second smallest.
struct RootProfile {
    double p;
    double r;
    std::vector<RootEntry> roots;
};

// The unique real root of f in (1/2, 1): sign-bracketed bisection on the
// denominator polynomial, finished with Newton steps. Bracket width <= tol.
double principal_root(const PartSet& ps, double tol = 1e-12);

// Aberth-Ehrlich on the polynomial with p deflated out first, each root
// Newton-polished against the undeflated polynomial. Throws
// std::runtime_error on non-convergence, and reports a diagnostic error when
// the gap r - p falls below 1e-9 (downstream asymptotics degrade as (p/r)^n).
RootProfile all_roots(const PartSet& ps, double tol = 1e-12);

}  // namespace complab

#endif
