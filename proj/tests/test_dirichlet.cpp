#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gp/dirichlet.hpp"
#include "gp/errors.hpp"
#include "gp/spectrum.hpp"

TEST_CASE("distance to the nearest integer") {
    CHECK(gp::nearest_int_dist(0.0) == 0.0);
    CHECK(gp::nearest_int_dist(7.0) == 0.0);
    CHECK(gp::nearest_int_dist(0.5) == 0.5);
    CHECK(gp::nearest_int_dist(1.25) == doctest::Approx(0.25));
    CHECK(gp::nearest_int_dist(-0.3) == doctest::Approx(0.3));
    CHECK(gp::nearest_int_dist(-7.8) == doctest::Approx(0.2));
}

TEST_CASE("rounding halves toward zero") {
    CHECK(gp::nearest_int_half_to_zero(2.5) == 2);
    CHECK(gp::nearest_int_half_to_zero(-2.5) == -2);
    CHECK(gp::nearest_int_half_to_zero(0.5) == 0);
    CHECK(gp::nearest_int_half_to_zero(-0.5) == 0);
    CHECK(gp::nearest_int_half_to_zero(2.51) == 3);
    CHECK(gp::nearest_int_half_to_zero(-2.51) == -3);
    CHECK(gp::nearest_int_half_to_zero(1.49) == 1);
    CHECK(gp::nearest_int_half_to_zero(-1.49) == -1);
    CHECK(gp::nearest_int_half_to_zero(3.0) == 3);
}

TEST_CASE("single witness for sqrt(2) - 1") {
    const std::vector<double> a{0.41421356};
    const auto w = gp::dirichlet_witness(a, 3, 1);
    CHECK(w.t == 2);  // 2 * 0.41421356 = 0.828... is within 1/3 of 1
    REQUIRE(w.x.size() == 1);
    CHECK(w.x[0] == 1);
    CHECK(w.q == 3);
    CHECK(w.t0 == 1);
}

TEST_CASE("multiple witnesses stay ascending and within range") {
    const std::vector<double> a{0.1, 0.3};
    const auto ws = gp::dirichlet_witnesses(a, 3, 1, 2);
    REQUIRE(ws.size() == 2);
    CHECK(ws[0].t == 1);
    CHECK(ws[1].t == 3);
    CHECK(ws[0].x == std::vector<std::int64_t>{0, 0});
    CHECK(ws[1].x == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("integer targets make every scale a witness") {
    const std::vector<double> a{0.0};
    const auto ws = gp::dirichlet_witnesses(a, 5, 7, 3);
    REQUIRE(ws.size() == 3);
    CHECK(ws[0].t == 7);
    CHECK(ws[1].t == 8);
    CHECK(ws[2].t == 9);
}

TEST_CASE("pigeonhole range overflow is reported") {
    const std::vector<double> a(5, 0.37);
    CHECK_THROWS_AS(gp::dirichlet_witness(a, 10, 1000000000000000LL), gp::RangeOverflow);
    CHECK_THROWS_AS(gp::dirichlet_witnesses(a, 10, 900000000000000LL, 4),
                    gp::RangeOverflow);
}

TEST_CASE("witness preconditions") {
    const std::vector<double> a{0.5};
    CHECK_THROWS_AS(gp::dirichlet_witness(a, 0, 1), gp::OutOfRange);
    CHECK_THROWS_AS(gp::dirichlet_witness(a, 3, 0), gp::OutOfRange);
    CHECK_THROWS_AS(gp::dirichlet_witness(std::vector<double>{}, 3, 1), gp::OutOfRange);
    CHECK_THROWS_AS(gp::dirichlet_witnesses(a, 3, 1, 0), gp::OutOfRange);
}

TEST_CASE("randomized witnesses honour the stated guarantees") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> real(-2.0, 2.0);
    std::uniform_int_distribution<int> num(1, 3), qd(1, 8), t0d(1, 5), md(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> a(static_cast<std::size_t>(num(rng)));
        for (auto& v : a) v = real(rng);
        const std::int64_t q = qd(rng), t0 = t0d(rng), m = md(rng);

        std::int64_t range = t0;
        for (std::size_t i = 0; i < a.size(); ++i) range *= q;

        const auto ws = gp::dirichlet_witnesses(a, q, t0, m);
        REQUIRE(std::ssize(ws) == m);
        std::int64_t prev = 0;
        for (const auto& w : ws) {
            CAPTURE(trial);
            REQUIRE(w.t >= t0);
            REQUIRE(w.t <= m * range);
            REQUIRE(w.t > prev);
            prev = w.t;
            REQUIRE(w.x.size() == a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                REQUIRE(std::abs(static_cast<double>(w.t) * a[i] -
                                 static_cast<double>(w.x[i])) <=
                        1.0 / static_cast<double>(q));
        }
        // the first witness is also what the single-witness search returns
        CHECK(gp::dirichlet_witness(a, q, t0).t == ws[0].t);
    }
}

TEST_CASE("good index for the gap argument: known cases") {
    const auto s1 = gp::good_index_gap(gp::validate_params(100, 43));
    CHECK(s1.q == 9);
    REQUIRE(s1.indices.size() == 1);
    CHECK(s1.indices[0] == 7);
    CHECK(!s1.eps.has_value());

    const auto s2 = gp::good_index_gap(gp::validate_params(100, 1));
    CHECK(s2.indices[0] == 1);

    const auto s3 = gp::good_index_gap(gp::validate_params(10, 3));
    CHECK(s3.q == 2);
    CHECK(s3.indices[0] == 1);
}

TEST_CASE("good index domain") {
    CHECK_THROWS_AS(gp::good_index_gap(gp::validate_params(4, 1)), gp::OutOfRange);
    CHECK_NOTHROW(gp::good_index_gap(gp::validate_params(5, 2)));
}

TEST_CASE("good index forces an eigenvalue above 3 minus the gap bound") {
    auto check_one = [](std::int64_t n, std::int64_t k) {
        const auto p = gp::validate_params(n, k);
        const auto set = gp::good_index_gap(p);
        REQUIRE(set.indices.size() == 1);
        const std::int64_t j = set.indices[0];
        CAPTURE(n);
        CAPTURE(k);
        REQUIRE(j >= 1);
        REQUIRE(j < n);
        // the witness scale t is the index and stays within q^2 < n
        REQUIRE(j <= set.q * set.q);
        const double inv_q = 1.0 / static_cast<double>(set.q);
        REQUIRE(gp::nearest_int_dist(static_cast<double>(j) / static_cast<double>(n)) <=
                inv_q);
        REQUIRE(gp::nearest_int_dist(static_cast<double>(j) * static_cast<double>(k) /
                                     static_cast<double>(n)) <= inv_q);
        REQUIRE(gp::eig_pair(p, j).plus_value > 3.0 - gp::gap_bound(n));
    };
    for (std::int64_t n = 5; n <= 60; ++n)
        for (std::int64_t k = 1; 2 * k < n; ++k) check_one(n, k);
    for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{100, 43},
                        {500, 123},
                        {997, 400},
                        {2000, 311},
                        {2000, 999}})
        check_one(n, k);
}

TEST_CASE("clustering: known layouts") {
    // eps = 2 gives q = 7; for n = 100 the good indices hug 0 and n
    const auto s = gp::good_index_cluster(gp::validate_params(100, 1), 2.0);
    CHECK(s.q == 7);
    CHECK(s.eps == 2.0);
    REQUIRE(s.indices.size() == 28);
    CHECK(s.indices.front() == 1);
    CHECK(s.indices[13] == 14);
    CHECK(s.indices[14] == 86);
    CHECK(s.indices.back() == 99);
}

TEST_CASE("clustering domain errors") {
    CHECK_THROWS_AS(gp::good_index_cluster(gp::validate_params(49, 2), 2.0), gp::TooSmallN);
    CHECK_THROWS_AS(gp::good_index_cluster(gp::validate_params(100, 1), 0.0),
                    gp::NonpositiveEpsilon);
    CHECK_THROWS_AS(gp::good_index_cluster(gp::validate_params(100, 1), -2.0),
                    gp::NonpositiveEpsilon);
    // n = q^2 + 1 is the smallest admissible n
    CHECK_NOTHROW(gp::good_index_cluster(gp::validate_params(50, 7), 2.0));
}

TEST_CASE("clustering guarantees the floor across a grid") {
    for (double eps : {0.5, 1.0, 2.0}) {
        const auto q =
            static_cast<std::int64_t>(std::floor(4.0 * std::numbers::pi_v<double> / eps)) + 1;
        for (std::int64_t n : {q * q + 1, 2 * q * q, 3 * q * q + 5, std::int64_t{1000},
                               std::int64_t{2500}}) {
            if (n <= q * q) continue;
            for (std::int64_t k : {std::int64_t{1}, std::int64_t{2}, (n - 1) / 2}) {
                if (2 * k >= n || k < 1) continue;
                const auto p = gp::validate_params(n, k);
                const auto set = gp::good_index_cluster(p, eps);
                const std::int64_t floor_m = n / (set.q * set.q);
                CAPTURE(eps);
                CAPTURE(n);
                CAPTURE(k);
                REQUIRE(std::ssize(set.indices) >= floor_m);
                const double inv_q = 1.0 / static_cast<double>(set.q);
                for (std::int64_t j : set.indices) {
                    REQUIRE(j >= 1);
                    REQUIRE(j < n);
                    REQUIRE(gp::nearest_int_dist(static_cast<double>(j) /
                                                 static_cast<double>(n)) <= inv_q);
                    REQUIRE(gp::nearest_int_dist(static_cast<double>(j) *
                                                 static_cast<double>(k) /
                                                 static_cast<double>(n)) <= inv_q);
                }
            }
        }
    }
}
