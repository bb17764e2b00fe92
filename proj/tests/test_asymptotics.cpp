#include "complab/asymptotics.hpp"

#include <cmath>

#include "complab/counting.hpp"
#include "complab/roots.hpp"
#include "doctest.h"

using namespace complab;

TEST_CASE("s[0][0] restates f(p) = 0") {
    for (auto excluded : {std::vector<std::int64_t>{1}, {2}, {1, 2}, {1, 4}, {3}}) {
        PartSet ps(excluded);
        const double p = principal_root(ps);
        CHECK(series_sum(ps, p, 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("closed-form geometric sums against brute summation") {
    PartSet one({1});
    const double p = principal_root(one);

    SUBCASE("(0,1) closed form at the golden-ratio p") {
        const double want = p / ((1.0 - p) * (1.0 - p)) - p;  // minus the excluded k=1 term
        CHECK(series_sum(one, p, 0, 1) == doctest::Approx(want).epsilon(1e-14));
        CHECK(want == doctest::Approx(3.6180339887498949).epsilon(1e-12));
    }
    SUBCASE("all (i,j) against direct summation to k=500") {
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 3; ++j) {
                double direct = 0.0;
                for (std::int64_t k = 2; k <= 500; ++k)
                    direct += std::pow(static_cast<double>(k), j) *
                              std::pow(std::log(static_cast<double>(k)), i) *
                              std::pow(p, static_cast<double>(k));
                CHECK(series_sum(one, p, i, j) == doctest::Approx(direct).epsilon(1e-12));
            }
    }
}

TEST_CASE("series_sum input validation") {
    PartSet one({1});
    CHECK_THROWS(series_sum(one, 0.6, 3, 0));
    CHECK_THROWS(series_sum(one, 0.6, 0, 4));
    CHECK_THROWS(series_sum(one, 1.5, 0, 0));
}

TEST_CASE("constants are positive where the theorems require") {
    for (auto excluded : {std::vector<std::int64_t>{1}, {2}, {1, 2}, {1, 4}, {3}}) {
        PartSet ps(excluded);
        const double p = principal_root(ps);
        const auto c = compute_constants(ps, p);
        CHECK(c.a1 > 0.0);
        CHECK(c.b1 > 0.0);
        CHECK(c.count_prefactor > 0.0);
    }
}

TEST_CASE("b1 transcription identity") {
    PartSet two({2});
    const double p = principal_root(two);
    const auto s = compute_series_sums(two, p);
    double b1, b0, lines[3];
    variance_constants(s, b1, b0, lines);
    const double independent = s.at(1, 0) * s.at(1, 0) * s.at(0, 2) /
                                   (s.at(0, 1) * s.at(0, 1) * s.at(0, 1)) -
                               2.0 * s.at(1, 0) * s.at(1, 1) / (s.at(0, 1) * s.at(0, 1)) +
                               s.at(2, 0) / s.at(0, 1);
    CHECK(b1 == doctest::Approx(independent).epsilon(1e-15));
    CHECK(b0 == doctest::Approx(lines[0] + lines[1] + lines[2]).epsilon(1e-15));
}

TEST_CASE("mean and variance lines match the DP oracle") {
    for (auto excluded : {std::vector<std::int64_t>{1}, {2}}) {
        PartSet ps(excluded);
        const double p = principal_root(ps);
        const auto c = compute_constants(ps, p);
        const ScaledCountTable scaled(ps, p, 401);
        const LogMomentTable lmt(ps, scaled, 401, 2);

        CHECK(std::abs(lmt.mean(200) - (c.a1 * 200.0 + c.a0)) < 1e-6);
        CHECK(std::abs(lmt.variance(200) - (c.b1 * 200.0 + c.b0)) < 1e-4);

        // slope oracles at n = 400
        CHECK(std::abs((lmt.mean(401) - lmt.mean(400)) - c.a1) < 1e-8);
        CHECK(std::abs((lmt.variance(401) - lmt.variance(400)) - c.b1) < 1e-8);

        // intercept oracles at n = 400
        CHECK(std::abs((lmt.mean(400) - c.a1 * 400.0) - c.a0) < 1e-6);
        CHECK(std::abs((lmt.variance(400) - c.b1 * 400.0) - c.b0) < 1e-4);
    }
}
