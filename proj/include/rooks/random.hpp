#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rooks/partition.hpp"
#include "rooks/rational.hpp"

namespace rooks {

/// Deterministic stream keyed by (seed, stream). Distinct stream ids give
/// independent sequences, so parallel work can be split without sharing state.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

    /// Uniform draw from {1, ..., m}; m >= 1.
    std::int64_t uniform(std::int64_t m);
    double uniform_real();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

/// Row-major n x n table; entry (i,j), 1-based, is E(pi_ij) with rows from the top.
struct MarginalMatrix {
    std::size_t n = 0;
    std::vector<Rational> entries;

    const Rational& at(std::size_t i, std::size_t j) const { return entries[(i - 1) * n + (j - 1)]; }
    Rational& at(std::size_t i, std::size_t j) { return entries[(i - 1) * n + (j - 1)]; }
    bool operator==(const MarginalMatrix&) const = default;
};

/// Probability that a uniform placement of lambda has a rook at (i,j).
Rational marginal_probability(const Partition& lambda, std::size_t i, std::size_t j);

/// Full table, rows computed in parallel from running products.
MarginalMatrix marginal_matrix(const Partition& lambda);
/// Cell-by-cell evaluation of marginal_probability; the reference for marginal_matrix.
MarginalMatrix marginal_matrix_serial(const Partition& lambda);

/// Exact rook frequencies over the brute-force list of placements.
MarginalMatrix marginal_frequencies(const Partition& lambda, std::size_t cap = kBruteForceCap);

/// Uniform over RP(lambda): rows from the top, each picking a free admissible column.
RookPlacement sample_rook_placement(const Partition& lambda, RandomSource& rng);

/// (E(pi_ij) on N (.) lambda, (1/N) E(pi_{ceil(i/N), ceil(j/N)}) on lambda).
std::pair<Rational, Rational> scaled_marginal_check(const Partition& lambda, std::int64_t N, std::size_t i,
                                                    std::size_t j);

/// Largest probability that t given boxes all carry rooks, over every
/// t-subset of boxes. Brute force over placements.
Rational max_joint_probability(const Partition& lambda, std::size_t t, std::size_t cap = kBruteForceCap);

/// 1 / (r (r-1) ... (r-t+1)).
Rational joint_bound(std::int64_t r, std::size_t t);

struct ChiSquareResult {
    std::size_t categories = 0;
    std::size_t draws = 0;
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Goodness of fit of sample_rook_placement against the uniform law on RP(lambda).
ChiSquareResult sampler_chi_square(const Partition& lambda, std::size_t draws, RandomSource& rng,
                                   std::size_t cap = kBruteForceCap);

inline constexpr std::size_t kDrawBlock = 4096;
/// Empirical rook frequencies (row-major n x n) over `draws` samples. Block b
/// of kDrawBlock draws uses stream b, so the result ignores the thread count.
std::vector<double> sampled_marginals(const Partition& lambda, std::size_t draws, std::uint64_t seed);
std::vector<double> sampled_marginals_serial(const Partition& lambda, std::size_t draws, std::uint64_t seed);

}  // namespace rooks
