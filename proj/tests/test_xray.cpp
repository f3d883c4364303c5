#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rooks/verify.hpp"
#include "rooks/xray.hpp"

using namespace rooks;

namespace {

// Midpoint rule over [0,n]^2 with marginal mass spread evenly on each cell.
double limit_shape_by_quadrature(const Partition& lambda, double t, int grid) {
    const auto m = marginal_matrix(lambda);
    const std::size_t n = lambda.size();
    const double h = 1.0 / grid;
    double total = 0.0;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b) {
            const double p = to_double(m.at(a, b));
            if (p == 0.0) continue;
            std::int64_t inside = 0;
            for (int u = 0; u < grid; ++u)
                for (int v = 0; v < grid; ++v) {
                    const double x = a - 1 + (u + 0.5) * h, y = b - 1 + (v + 0.5) * h;
                    inside += x + y <= n * t;
                }
            total += p * static_cast<double>(inside) * h * h;
        }
    return total / static_cast<double>(n);
}

}  // namespace

TEST_CASE("profiles") {
    const auto id = xray_profile(RookPlacement{{1, 2, 3}});
    CHECK(id.x(2) == 1);
    CHECK(id.x(3) == 0);
    CHECK(id.x(4) == 1);
    CHECK(id.x(5) == 0);
    CHECK(id.x(6) == 1);
    CHECK(id.X(4) == 2);
    CHECK(id.X(1) == 0);
    CHECK(id.X(9) == 3);
    for (std::int64_t n = 1; n <= 6; ++n) {
        RookPlacement anti;
        for (std::int64_t i = 1; i <= n; ++i) anti.cols.push_back(n + 1 - i);
        const auto p = xray_profile(anti);
        for (std::int64_t k = 2; k <= 2 * n; ++k) CHECK(p.x(k) == (k == n + 1 ? n : 0));
        CHECK(p.normalized(Rational(2)) == 1);
        CHECK(p.normalized(Rational(0)) == 0);
    }
    CHECK(id.xi(ratio(9, 2)) == 2);
    CHECK(id.normalized(ratio(4, 3)) == ratio(2, 3));
}

TEST_CASE("anti-diagonal counts") {
    CHECK(s_count(Rational(0), 5) == 0);
    CHECK(s_count(ratio(-1, 3), 5) == 0);
    CHECK(s_count(Rational(1), 4) == 6);
    CHECK(s_count(Rational(2), 7) == 49);
    CHECK(s_count(Rational(3), 7) == 49);
    for (std::int64_t N = 1; N <= 50; ++N)
        for (std::int64_t j = -10; j <= 250; ++j) {
            const Rational phi = ratio(j, 100);
            std::int64_t direct = 0;
            for (std::int64_t x = 1; x <= N; ++x)
                for (std::int64_t y = 1; y <= N; ++y) direct += Rational(x + y) <= phi * N;
            CHECK(s_count(phi, N) == direct);
        }
}

TEST_CASE("c function") {
    CHECK(c_function(Rational(0)) == 0);
    CHECK(c_function(Rational(2)) == 1);
    CHECK(c_function(Rational(1)) == ratio(1, 2));
    CHECK(c_function(ratio(3, 2)) == ratio(7, 8));
    CHECK(c_function(Rational(-4)) == 0);
    CHECK(c_function(Rational(5)) == 1);
    CHECK(c_function(1.5) == 0.875);
    for (std::int64_t j = -20; j <= 220; ++j) CHECK(c_function(j / 100.0) == doctest::Approx(to_double(c_function(ratio(j, 100)))));
    // S(phi;N)/N^2 tends to c(phi)
    CHECK(std::abs(to_double(Rational(s_count(ratio(13, 10), 4000), 16000000)) - 0.755) < 1e-3);
}

TEST_CASE("limit shape") {
    const Partition box({1});
    for (std::int64_t j = 0; j <= 200; ++j) CHECK(limit_shape(box, ratio(j, 100)) == c_function(ratio(j, 100)));
    CHECK(limit_shape(box, Rational(1)) == ratio(1, 2));
    CHECK(limit_shape(Partition({2, 2}), Rational(1)) == ratio(1, 2));
    CHECK(std::abs(limit_shape_by_quadrature(Partition({2, 2}), 1.0, 400) - 0.5) < 1e-2);
    for (std::size_t n = 1; n <= 4; ++n)
        for_each_D_n(n, [&](const Partition& lambda) {
            CHECK(limit_shape(lambda, Rational(2)) == 1);
            CHECK(limit_shape(lambda, Rational(0)) == 0);
            const auto curve = limit_shape_curve(lambda, 41);
            for (std::size_t j = 1; j < curve.size(); ++j) CHECK(curve[j - 1].m <= curve[j].m);
        });
    for (const auto& lambda : {Partition({2, 1}), Partition({3, 3, 2}), Partition({4, 3, 3, 2})})
        for (std::int64_t j = 1; j < 8; ++j) {
            const double t = j / 4.0;
            CHECK(std::abs(to_double(limit_shape(lambda, ratio(j, 4))) - limit_shape_by_quadrature(lambda, t, 300)) < 5e-3);
        }
    CHECK_THROWS_AS(limit_shape(Partition({3, 1, 1}), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(limit_shape(box, Rational(3)), std::out_of_range);
}

TEST_CASE("expected xray") {
    CHECK(expected_normalized_xray(Partition({1}), 1, Rational(2)) == 1);
    Rational prev = 1;
    for (std::int64_t N : {4, 8, 16}) {
        const Rational gap = abs(expected_normalized_xray(Partition({1}), N, Rational(1)) - ratio(1, 2));
        CHECK(gap == ratio(1, 2 * N));
        CHECK(gap < prev);
        prev = gap;
    }
    // average over the four placements of [4,4,2,2]
    const auto all = brute_force_rook_placements(dilate(Partition({2, 1}), 2));
    REQUIRE(all.size() == 4);
    for (std::int64_t j = 0; j <= 16; ++j) {
        const Rational t = ratio(j, 8);
        Rational avg = 0;
        for (const auto& p : all) avg += xray_profile(p).normalized(t);
        CHECK(expected_normalized_xray(Partition({2, 1}), 2, t) == avg / 4);
    }
    for (const auto& lambda : {Partition({1}), Partition({2, 1}), Partition({2, 2})})
        for (std::int64_t N : {2, 4, 8, 16})
            for (std::int64_t j = 0; j <= 8; ++j) {
                const Rational t = ratio(j, 4);
                const double scaled = to_double(abs(expected_normalized_xray(lambda, N, t) - limit_shape(lambda, t))) * N;
                CHECK(scaled <= kMeanRateBound);
            }
}

TEST_CASE("moments") {
    CHECK(xray_moments(2, 2).second_moment == ratio(1, 2));
    CHECK(xray_moments(2, 3).mean == ratio(3, 2));
    CHECK_THROWS_AS(xray_moments(5, 7), std::out_of_range);
    for (std::int64_t N = 2; N <= 7; ++N) {
        // independent scan of S_N
        std::vector<Rational> mean(2 * N + 1, 0), second(2 * N + 1, 0);
        std::vector<std::int64_t> perm(N);
        std::iota(perm.begin(), perm.end(), 1);
        std::int64_t count = 0;
        do {
            ++count;
            for (std::int64_t k = 2; k <= 2 * N; ++k) {
                std::int64_t X = 0;
                for (std::int64_t i = 1; i <= N; ++i) X += i + perm[i - 1] <= k;
                mean[k] += X;
                second[k] += X * X;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        const auto ex = exhaustive_xray_moments(N);
        for (std::int64_t k = 2; k <= N + 1; ++k) {
            const auto m = xray_moments(N, k);
            CHECK(m.mean == mean[k] / count);
            CHECK(m.second_moment == second[k] / count);
            CHECK(ex.mean[k] == m.mean);
            CHECK(ex.second_moment[k] == m.second_moment);
        }
    }
    for (std::int64_t N = 2; N <= 200; ++N)
        for (std::int64_t k = 2; k <= N + 1; ++k) {
            const auto m = xray_moments(N, k);
            CHECK(m.variance == m.second_moment - m.mean * m.mean);
            CHECK(m.variance < m.variance_bound);
        }
}

TEST_CASE("tail sums") {
    const auto a = tail_sum_bound_check(4, 4);
    CHECK(a.exhaustive);
    CHECK(a.lhs_exact == ratio(1, 24));
    CHECK(a.rhs == ratio(1, 24));
    CHECK(a.holds);
    const auto b = tail_sum_bound_check(7, 2);
    CHECK(b.holds);
    CHECK(b.lhs_exact <= ratio(8, 6));
    const auto c = tail_sum_bound_check(7, 7);
    CHECK(c.lhs_exact == ratio(1, 5040));
    CHECK(c.rhs == ratio(8, 40320));
    for (std::int64_t N = 1; N <= 7; ++N)
        for (std::int64_t t = 1; t <= N; ++t) CHECK(tail_sum_bound_check(N, t).holds);
    const auto d = tail_sum_bound_check(30, 3, 20000, 9);
    CHECK_FALSE(d.exhaustive);
    CHECK(d.holds);
    CHECK(d.standard_error > 0.0);
}

TEST_CASE("sup deviation") {
    RandomSource rng(3);
    for (const auto& lambda : {Partition({1}), Partition({2, 2}), Partition({3, 3, 2})})
        for (std::int64_t N : {5, 40}) {
            const auto big = dilate(lambda, N);
            const std::int64_t M = static_cast<std::int64_t>(big.size());
            const auto curve = limit_curve_on_steps(lambda, N);
            REQUIRE(curve.size() == static_cast<std::size_t>(2 * M + 1));
            for (int s = 0; s < 20; ++s) {
                const auto p = sample_rook_placement(big, rng);
                const auto prof = xray_profile(p);
                CHECK(prof.normalized(Rational(0)) == 0);
                CHECK(prof.normalized(Rational(2)) == 1);
                for (std::int64_t k = 1; k <= 2 * M; ++k) CHECK(prof.X(k - 1) <= prof.X(k));
                // fine grid lower bound on the sup
                const auto marg = marginal_matrix(lambda);
                double grid_max = 0.0;
                const std::int64_t G = 16 * M;
                for (std::int64_t g = 0; g <= 2 * G; g += 3) {
                    const Rational t = ratio(g, G);
                    grid_max = std::max(grid_max, std::abs(to_double(prof.normalized(t) - limit_shape(marg, t))));
                }
                const double sup = sup_deviation(p, curve);
                CHECK(sup >= grid_max - 1e-12);
                CHECK(sup <= grid_max + 4.0 / static_cast<double>(M));
            }
        }
}

TEST_CASE("experiment") {
    const std::vector<double> eps = {0.05, 0.2};
    const auto par = limit_shape_experiment(Partition({2, 1}), 30, 64, 5, eps);
    const auto ser = limit_shape_experiment_serial(Partition({2, 1}), 30, 64, 5, eps);
    CHECK(par.deviations == ser.deviations);
    CHECK(par.fraction_below == ser.fraction_below);
    CHECK(par.max == ser.max);
    CHECK(par.median == ser.median);
    CHECK(par.q05 <= par.median);
    CHECK(par.median <= par.q95);
    CHECK(par.max == *std::max_element(par.deviations.begin(), par.deviations.end()));
    CHECK_THROWS_AS(limit_shape_experiment(Partition({1}), kExperimentSizeCap + 1, 1, 0), std::length_error);
    double prev = 1.0;
    for (std::int64_t N : {100, 400, 1600}) {
        const auto st = limit_shape_experiment(Partition({1}), N, 100, 7, {0.05});
        CHECK(st.median < prev);
        prev = st.median;
    }
}
