#include "complab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace complab {

namespace {

using cplx = std::complex<double>;

double eval_real(const std::vector<std::int64_t>& c, double x) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + static_cast<double>(*it);
    return v;
}

cplx eval_cplx(const std::vector<double>& c, cplx x) {
    cplx v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

std::vector<double> derivative(const std::vector<double>& c) {
    std::vector<double> d(c.size() > 1 ? c.size() - 1 : 1, 0.0);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
    return d;
}

// Synthetic division by (x - root); remainder discarded.
std::vector<double> deflate(const std::vector<double>& c, double root) {
    const std::size_t d = c.size() - 1;
    std::vector<double> q(d, 0.0);
    double carry = c[d];
    for (std::size_t i = d; i-- > 0;) {
        q[i] = carry;
        carry = c[i] + carry * root;
    }
    return q;
}

}  // namespace

double principal_root(const PartSet& ps, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("principal_root: tol must be positive");
    const auto poly = denominator_polynomial(ps).coefficients;
    // g = (1-x) f: g(1/2) has the sign of f(1/2) > 0, g(1) = -1
    double lo = 0.5, hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (eval_real(poly, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    // Newton polish inside the bracket
    std::vector<double> cd(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) cd[i] = static_cast<double>(poly[i]);
    const auto der = derivative(cd);
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 50; ++it) {
        const double fx = eval_real(poly, x);
        const double dfx = eval_cplx(der, cplx(x, 0.0)).real();
        if (dfx == 0.0) break;
        const double step = fx / dfx;
        const double nx = x - step;
        if (nx <= lo - tol || nx >= hi + tol) break;
        x = nx;
        if (std::abs(step) < 1e-16) break;
    }
    return x;
}

RootProfile all_roots(const PartSet& ps, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("all_roots: tol must be positive");
    const auto ipoly = denominator_polynomial(ps).coefficients;
    std::vector<double> poly(ipoly.size());
    double coeff_scale = 0.0;
    for (std::size_t i = 0; i < ipoly.size(); ++i) {
        poly[i] = static_cast<double>(ipoly[i]);
        coeff_scale = std::max(coeff_scale, std::abs(poly[i]));
    }
    const int degree = static_cast<int>(poly.size()) - 1;

    const double p = principal_root(ps, tol);
    std::vector<cplx> zs;
    zs.emplace_back(p, 0.0);

    if (degree > 1) {
        const auto q = deflate(poly, p);
        const auto dq = derivative(q);
        const int dd = degree - 1;
        // Cauchy bound for the starting circle
        double radius = 0.0;
        for (int i = 0; i < dd; ++i) radius = std::max(radius, std::abs(q[static_cast<std::size_t>(i)] / q[static_cast<std::size_t>(dd)]));
        radius = 1.0 + radius;
        std::vector<cplx> z(static_cast<std::size_t>(dd));
        for (int i = 0; i < dd; ++i) {
            const double ang = 2.0 * std::numbers::pi * (i + 0.25) / dd + 0.3;
            z[static_cast<std::size_t>(i)] = radius * cplx(std::cos(ang), std::sin(ang));
        }
        bool converged = false;
        for (int it = 0; it < 500 && !converged; ++it) {
            converged = true;
            for (int i = 0; i < dd; ++i) {
                const cplx zi = z[static_cast<std::size_t>(i)];
                const cplx fz = eval_cplx(q, zi);
                const cplx dfz = eval_cplx(dq, zi);
                if (std::abs(fz) == 0.0) continue;
                const cplx newton = fz / dfz;
                cplx sum = 0.0;
                for (int j = 0; j < dd; ++j)
                    if (j != i) sum += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
                const cplx w = newton / (1.0 - newton * sum);
                z[static_cast<std::size_t>(i)] = zi - w;
                if (std::abs(w) > tol * (1.0 + std::abs(zi))) converged = false;
            }
        }
        if (!converged) throw std::runtime_error("all_roots: Aberth iteration did not converge");
        // Polish against the undeflated polynomial
        const auto dpoly = derivative(poly);
        for (auto& zi : z) {
            for (int it = 0; it < 20; ++it) {
                const cplx fz = eval_cplx(poly, zi);
                const cplx dfz = eval_cplx(dpoly, zi);
                if (std::abs(dfz) == 0.0) break;
                const cplx step = fz / dfz;
                zi -= step;
                if (std::abs(step) < 1e-16 * (1.0 + std::abs(zi))) break;
            }
            if (std::abs(zi.imag()) < 1e-9 * (1.0 + std::abs(zi))) zi = cplx(zi.real(), 0.0);
        }
        zs.insert(zs.end(), z.begin(), z.end());
    }

    std::sort(zs.begin(), zs.end(), [](const cplx& a, const cplx& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma < mb;
        return std::arg(a) < std::arg(b);
    });

    // Cluster near-equal roots into multiplicities
    RootProfile out{};
    out.p = p;
    for (std::size_t i = 0; i < zs.size();) {
        std::size_t j = i + 1;
        cplx sum = zs[i];
        while (j < zs.size() && std::abs(zs[j] - zs[i]) < 1e-7 * (1.0 + std::abs(zs[i]))) {
            sum += zs[j];
            ++j;
        }
        const cplx rep = sum / static_cast<double>(j - i);
        RootEntry e{};
        e.value = rep;
        e.multiplicity = static_cast<int>(j - i);
        e.residual = std::abs(eval_cplx(poly, rep)) / coeff_scale;
        out.roots.push_back(e);
        i = j;
    }

    if (out.roots.size() < 2)
        throw std::runtime_error("all_roots: expected at least two distinct roots");
    out.r = std::abs(out.roots[1].value);
    if (out.r - out.p < 1e-9)
        throw std::runtime_error("all_roots: degenerate gap r - p below 1e-9, asymptotics unreliable");
    return out;
}

}  // namespace complab
