#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rooks/partition.hpp"

using namespace rooks;

namespace {

// Independent oracle: scan all of S_n and keep the permutations inside the shape.
std::int64_t count_by_permutations(const Partition& lambda) {
    const std::size_t n = lambda.size();
    std::vector<std::int64_t> cols(n);
    std::iota(cols.begin(), cols.end(), 1);
    std::int64_t count = 0;
    do {
        bool inside = true;
        for (std::size_t r = 1; r <= n && inside; ++r) inside = cols[r - 1] <= lambda.row_length(r);
        count += inside;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return count;
}

}  // namespace

TEST_CASE("partition construction and parsing") {
    CHECK(Partition::parse("4,3,3,2") == Partition({4, 3, 3, 2}));
    CHECK_THROWS_AS(Partition({3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
    const Partition p({4, 3, 3, 2});
    CHECK(p[1] == 4);
    CHECK(p.row_length(1) == 2);  // top row is the shortest
    CHECK(p.to_string() == "4,3,3,2");
    CHECK(p.box_count() == 12);
}

TEST_CASE("rook counts on small shapes") {
    CHECK(count_rook_placements(Partition({3, 2, 1})) == 1);
    CHECK(count_rook_placements(Partition({3, 3, 3})) == 6);
    CHECK(count_rook_placements(Partition({4, 3, 3, 2})) == 4);
    CHECK(count_rook_placements(Partition({3, 1, 1})) == 0);
    CHECK_THROWS_AS(count_rook_placements(Partition({3, 3})), std::invalid_argument);
    CHECK(brute_force_rook_placements(Partition({2, 2})).size() == 2);
    const auto one = brute_force_rook_placements(Partition({2, 1}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].cols == std::vector<std::int64_t>{1, 2});
    CHECK(brute_force_rook_placements(Partition({4, 3, 3, 2})).size() == 4);
    CHECK_THROWS_AS(brute_force_rook_placements(Partition(std::vector<std::int64_t>(10, 10))), std::length_error);
}

TEST_CASE("brute force agrees with a permutation scan") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& lambda : enumerate_B_n(n)) {
            const auto placements = brute_force_rook_placements(lambda);
            CHECK(static_cast<std::int64_t>(placements.size()) == count_by_permutations(lambda));
            for (const auto& p : placements) CHECK(is_valid_placement(lambda, p));
        }
}

TEST_CASE("dilation") {
    CHECK(dilate(Partition({2, 1}), 2) == Partition({4, 4, 2, 2}));
    CHECK(dilate(Partition({1}), 3) == Partition({3, 3, 3}));
    CHECK(dilate(Partition({3, 2, 1}), 1) == Partition({3, 2, 1}));
    CHECK(count_rook_placements_dilated(Partition({2, 1}), 2) == 4);
    CHECK(count_rook_placements_dilated(Partition({1}), 3) == 6);
    CHECK(count_rook_placements_dilated(Partition({2, 1}), 1) == 1);
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& lambda : enumerate_B_n(n))
            for (std::int64_t m = 1; m <= 3; ++m) {
                CHECK(count_rook_placements_dilated(lambda, m) == count_rook_placements(dilate(lambda, m)));
                CHECK(in_D_n(lambda) == in_D_n(dilate(lambda, m)));
            }
}

TEST_CASE("log counts") {
    CHECK(log_count_rook_placements(Partition({3, 3, 3})) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
    CHECK(log_count_rook_placements(Partition({3, 2, 1})) == 0.0);
    CHECK(log_count_rook_placements(Partition({4, 3, 3, 2})) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    CHECK_THROWS_AS(log_count_rook_placements(Partition({3, 1, 1})), std::domain_error);
    // log 1000! by lgamma
    const Partition square(std::vector<std::int64_t>(1000, 1000));
    CHECK(log_count_rook_placements(square) == doctest::Approx(std::lgamma(1001.0)).epsilon(1e-13));
}

TEST_CASE("membership and enumeration sizes") {
    CHECK(in_D_n(Partition({3, 2, 2})));
    CHECK_FALSE(in_D_n(Partition({3, 1, 1})));
    CHECK(enumerate_B_n(2) == std::vector<Partition>{Partition({2, 2}), Partition({2, 1})});
    CHECK(enumerate_B_n(3).size() == 6);
    CHECK(enumerate_D_n(3).size() == 5);
    CHECK(enumerate_D_n(4).size() == 14);
    CHECK(enumerate_B_n(1) == std::vector<Partition>{Partition({1})});
    CHECK(enumerate_D_n(1) == std::vector<Partition>{Partition({1})});
    const auto b5 = enumerate_B_n(5);
    CHECK(std::is_sorted(b5.rbegin(), b5.rend()));
    CHECK_THROWS_AS(enumerate_B_n(15), std::length_error);
}

TEST_CASE("ground bumps") {
    CHECK(ground_bump_decomposition(Partition({2, 1})) == std::vector<Partition>{Partition({1}), Partition({1})});
    CHECK(ground_bump_decomposition(Partition({3, 3, 3})) == std::vector<Partition>{Partition({3, 3, 3})});
    CHECK(ground_bump_decomposition(Partition({3, 2, 1})) ==
          std::vector<Partition>{Partition({1}), Partition({1}), Partition({1})});
    CHECK(ground_bump_count(Partition({3, 2, 1})) == 2);
    // RRDDRRDD touches the diagonal once, at (2,2)
    CHECK(ground_bump_decomposition(Partition({4, 4, 2, 2})) ==
          std::vector<Partition>{Partition({2, 2}), Partition({2, 2})});
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& lambda : enumerate_D_n(n)) {
            const auto parts = ground_bump_decomposition(lambda);
            CHECK(parts.size() == ground_bump_count(lambda) + 1);
            std::int64_t width = 0;
            std::string joined;
            for (const auto& c : parts) {
                width += c.largest();
                joined += dyck_word(c);
                CHECK(ground_bump_count(c) == 0);
            }
            CHECK(width == lambda.largest());
            CHECK(joined == dyck_word(lambda));
            CHECK(partition_from_dyck_word(dyck_word(lambda)) == lambda);
            if (n <= 6)
                for (std::int64_t N = 1; N <= 3; ++N) {
                    BigInt product = 1;
                    for (const auto& c : parts) product *= count_rook_placements(dilate(c, N));
                    CHECK(count_rook_placements(dilate(lambda, N)) == product);
                }
        }
}

TEST_CASE("minimum run and conjugate") {
    CHECK(minimum_run(Partition({4, 4, 4, 4})) == 4);
    CHECK(minimum_run(Partition({2, 1})) == 1);
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& lambda : enumerate_D_n(n)) {
            const auto mr = minimum_run(lambda);
            CHECK(mr <= static_cast<std::int64_t>(n));
            CHECK((mr == static_cast<std::int64_t>(n)) == (lambda == Partition(std::vector<std::int64_t>(n, n))));
            CHECK(minimum_run(dilate(lambda, 3)) == 3 * mr);
            CHECK(conjugate(conjugate(lambda)) == lambda);
        }
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
    CHECK(conjugate(Partition({4, 3, 3, 2})) == Partition({4, 4, 3, 1}));
}
