#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rooks/rational.hpp"

namespace rooks {

/// A weakly decreasing sequence of positive integers (the board shape).
///
/// Rows of a board are numbered from the top: row i (1-based) of a shape
/// with n parts holds part n+1-i, so the top row is the shortest one. Every
/// API in this library that takes a row index uses that convention.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<std::int64_t> parts);

    static Partition parse(std::string_view text);  ///< "4,3,3,2"

    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    /// 1-based part access, matching the usual lambda_i notation.
    std::int64_t operator[](std::size_t i) const { return parts_.at(i - 1); }
    /// Length of row i counted from the top (1-based).
    std::int64_t row_length(std::size_t row) const { return parts_.at(parts_.size() - row); }
    std::span<const std::int64_t> parts() const { return parts_; }
    std::int64_t largest() const { return parts_.empty() ? 0 : parts_.front(); }
    std::int64_t box_count() const;

    std::string to_string() const;
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<std::int64_t> parts_;
};

/// cols[r] is the 1-based column of the rook in row r+1 (rows from the top).
struct RookPlacement {
    std::vector<std::int64_t> cols;
    bool operator==(const RookPlacement&) const = default;
    auto operator<=>(const RookPlacement&) const = default;
};

bool in_B_n(const Partition& lambda);
/// lambda_i >= n+1-i for all i. Requires lambda in B_n.
bool in_D_n(const Partition& lambda);
bool is_valid_placement(const Partition& lambda, const RookPlacement& p);

/// prod (lambda_i - (n-i)), returning 0 as soon as a factor is non-positive.
BigInt count_rook_placements(const Partition& lambda);
/// m!^n * prod C(m(lambda_i - (n-i)), m) with the generalized binomial.
BigInt count_rook_placements_dilated(const Partition& lambda, std::int64_t m);
/// Compensated sum of log(lambda_i - (n-i)); throws std::domain_error when
/// some factor is non-positive (the count is zero).
double log_count_rook_placements(const Partition& lambda);

inline constexpr std::size_t kBruteForceCap = 9;
/// Exhaustive placements by backtracking over columns, in lexicographic order of cols.
std::vector<RookPlacement> brute_force_rook_placements(const Partition& lambda,
                                                       std::size_t cap = kBruteForceCap);
void for_each_rook_placement(const Partition& lambda,
                             const std::function<void(const RookPlacement&)>& visit,
                             std::size_t cap = kBruteForceCap);

Partition dilate(const Partition& lambda, std::int64_t m);
Partition conjugate(const Partition& lambda);

inline constexpr std::size_t kEnumerationCap = 14;
/// Streams B_n (resp. D_n) in decreasing lexicographic order, starting at [n,...,n].
void for_each_B_n(std::size_t n, const std::function<void(const Partition&)>& visit,
                  std::size_t cap = kEnumerationCap);
void for_each_D_n(std::size_t n, const std::function<void(const Partition&)>& visit,
                  std::size_t cap = kEnumerationCap);
std::vector<Partition> enumerate_B_n(std::size_t n, std::size_t cap = kEnumerationCap);
std::vector<Partition> enumerate_D_n(std::size_t n, std::size_t cap = kEnumerationCap);

/// Boundary path of lambda in D_n from (0,n) to (n,0): 'R' right, 'D' down.
std::string dyck_word(const Partition& lambda);
/// Inverse of dyck_word for words that start at (0,n) and stay weakly above X+Y=n.
Partition partition_from_dyck_word(std::string_view word);

std::size_t ground_bump_count(const Partition& lambda);
/// Bump-free components along the path, top-left component first.
std::vector<Partition> ground_bump_decomposition(const Partition& lambda);

/// Shortest maximal run of equal steps in dyck_word(lambda).
std::int64_t minimum_run(const Partition& lambda);

}  // namespace rooks
