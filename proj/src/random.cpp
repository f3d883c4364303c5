#include "rooks/random.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace rooks {

namespace {

void require_D_n(const Partition& lambda) {
    if (lambda.empty() || !in_B_n(lambda) || !in_D_n(lambda))
        throw std::invalid_argument("shape must lie in D_n");
}

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream) {
    return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
    auto seq = make_seed_seq(seed, stream);
    return std::mt19937_64(seq);
}

void add_samples(const Partition& lambda, std::size_t block, std::size_t begin, std::size_t end,
                 std::uint64_t seed, std::vector<std::int64_t>& counts) {
    const std::size_t n = lambda.size();
    RandomSource rng(seed, block);
    for (std::size_t s = begin; s < end; ++s) {
        const auto p = sample_rook_placement(lambda, rng);
        for (std::size_t r = 0; r < n; ++r) ++counts[r * n + static_cast<std::size_t>(p.cols[r] - 1)];
    }
}

std::vector<double> normalize(std::vector<std::int64_t> counts, std::size_t draws) {
    std::vector<double> out(counts.size());
    for (std::size_t c = 0; c < counts.size(); ++c)
        out[c] = static_cast<double>(counts[c]) / static_cast<double>(draws);
    return out;
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

std::int64_t RandomSource::uniform(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("uniform: empty range");
    return std::uniform_int_distribution<std::int64_t>(1, m)(engine_);
}

double RandomSource::uniform_real() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

Rational marginal_probability(const Partition& lambda, std::size_t i, std::size_t j) {
    require_D_n(lambda);
    const std::size_t n = lambda.size();
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("marginal_probability: index out of range");
    const auto col = static_cast<std::int64_t>(j);
    if (col > lambda.row_length(i)) return 0;
    std::size_t first = 1;
    while (lambda.row_length(first) < col) ++first;
    Rational p = 1;
    for (std::size_t t = first; t < i; ++t) {
        const std::int64_t free = lambda.row_length(t) - static_cast<std::int64_t>(t);
        p *= ratio(free, free + 1);
    }
    p /= lambda.row_length(i) - static_cast<std::int64_t>(i) + 1;
    return p;
}

MarginalMatrix marginal_matrix(const Partition& lambda) {
    require_D_n(lambda);
    const std::size_t n = lambda.size();
    MarginalMatrix m{n, std::vector<Rational>(n * n, Rational(0))};
    const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t ii = 1; ii <= rows; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        // Columns in (L(t-1), L(t)] first become admissible at row t; walk t
        // downward from i while accumulating the survival product.
        Rational p = ratio(1, lambda.row_length(i) - ii + 1);
        for (std::size_t t = i; t >= 1; --t) {
            const std::int64_t lo = t == 1 ? 0 : lambda.row_length(t - 1);
            for (std::int64_t col = lo + 1; col <= lambda.row_length(t); ++col)
                m.at(i, static_cast<std::size_t>(col)) = p;
            if (t > 1) {
                const std::int64_t free = lambda.row_length(t - 1) - static_cast<std::int64_t>(t - 1);
                p *= ratio(free, free + 1);
            }
        }
    }
    return m;
}

MarginalMatrix marginal_matrix_serial(const Partition& lambda) {
    require_D_n(lambda);
    const std::size_t n = lambda.size();
    MarginalMatrix m{n, std::vector<Rational>(n * n)};
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) m.at(i, j) = marginal_probability(lambda, i, j);
    return m;
}

MarginalMatrix marginal_frequencies(const Partition& lambda, std::size_t cap) {
    const std::size_t n = lambda.size();
    std::vector<std::int64_t> counts(n * n, 0);
    std::int64_t total = 0;
    for_each_rook_placement(
        lambda,
        [&](const RookPlacement& p) {
            ++total;
            for (std::size_t r = 0; r < n; ++r) ++counts[r * n + static_cast<std::size_t>(p.cols[r] - 1)];
        },
        cap);
    if (total == 0) throw std::invalid_argument("shape has no rook placements");
    MarginalMatrix m{n, std::vector<Rational>(n * n)};
    for (std::size_t c = 0; c < counts.size(); ++c) m.entries[c] = ratio(counts[c], total);
    return m;
}

RookPlacement sample_rook_placement(const Partition& lambda, RandomSource& rng) {
    require_D_n(lambda);
    const std::size_t n = lambda.size();
    RookPlacement p;
    p.cols.reserve(n);
    std::vector<std::int64_t> pool;
    pool.reserve(n);
    std::int64_t opened = 0;
    for (std::size_t row = 1; row <= n; ++row) {
        for (; opened < lambda.row_length(row); ++opened) pool.push_back(opened + 1);
        const auto pick = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(pool.size())) - 1);
        p.cols.push_back(pool[pick]);
        pool[pick] = pool.back();
        pool.pop_back();
    }
    return p;
}

std::pair<Rational, Rational> scaled_marginal_check(const Partition& lambda, std::int64_t N, std::size_t i,
                                                    std::size_t j) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    const auto big = static_cast<std::size_t>(N);
    const Rational lhs = marginal_probability(dilate(lambda, N), i, j);
    Rational rhs = marginal_probability(lambda, (i + big - 1) / big, (j + big - 1) / big);
    rhs /= N;
    return {lhs, rhs};
}

Rational max_joint_probability(const Partition& lambda, std::size_t t, std::size_t cap) {
    const std::size_t n = lambda.size();
    if (t == 0) return 1;
    if (t > n) return 0;
    // Only boxes that co-occur in some placement have positive probability,
    // so tally every t-subset of every placement's rooks.
    std::map<std::vector<std::int64_t>, std::int64_t> tally;
    std::int64_t total = 0;
    std::vector<std::int64_t> key(t);
    for_each_rook_placement(
        lambda,
        [&](const RookPlacement& p) {
            ++total;
            std::vector<bool> chosen(n, false);
            std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(t), true);
            do {
                std::size_t at = 0;
                for (std::size_t r = 0; r < n; ++r)
                    if (chosen[r]) key[at++] = static_cast<std::int64_t>(r * n) + p.cols[r];
                ++tally[key];
            } while (std::prev_permutation(chosen.begin(), chosen.end()));
        },
        cap);
    if (total == 0) return 0;
    std::int64_t best = 0;
    for (const auto& [cells, count] : tally) best = std::max(best, count);
    return ratio(best, total);
}

Rational joint_bound(std::int64_t r, std::size_t t) {
    BigInt falling = 1;
    for (std::size_t s = 0; s < t; ++s) falling *= BigInt(static_cast<long>(r - static_cast<std::int64_t>(s)));
    if (falling <= 0) throw std::domain_error("joint_bound: t exceeds the run length");
    return Rational(BigInt(1), falling);
}

ChiSquareResult sampler_chi_square(const Partition& lambda, std::size_t draws, RandomSource& rng,
                                   std::size_t cap) {
    const auto placements = brute_force_rook_placements(lambda, cap);
    std::map<std::vector<std::int64_t>, std::size_t> index;
    for (std::size_t c = 0; c < placements.size(); ++c) index.emplace(placements[c].cols, c);
    std::vector<std::int64_t> observed(placements.size(), 0);
    for (std::size_t s = 0; s < draws; ++s) {
        const auto p = sample_rook_placement(lambda, rng);
        auto it = index.find(p.cols);
        if (it == index.end()) throw std::logic_error("sampler produced an invalid placement");
        ++observed[it->second];
    }
    ChiSquareResult result;
    result.categories = placements.size();
    result.draws = draws;
    const double expected = static_cast<double>(draws) / static_cast<double>(placements.size());
    for (auto o : observed) {
        const double diff = static_cast<double>(o) - expected;
        result.statistic += diff * diff / expected;
    }
    if (placements.size() > 1) {
        boost::math::chi_squared dist(static_cast<double>(placements.size() - 1));
        result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
    }
    return result;
}

std::vector<double> sampled_marginals(const Partition& lambda, std::size_t draws, std::uint64_t seed) {
    require_D_n(lambda);
    const std::size_t n = lambda.size();
    const auto blocks = static_cast<std::int64_t>((draws + kDrawBlock - 1) / kDrawBlock);
    std::vector<std::int64_t> counts(n * n, 0);
#pragma omp parallel
    {
        std::vector<std::int64_t> local(n * n, 0);
#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < blocks; ++b) {
            const auto block = static_cast<std::size_t>(b);
            add_samples(lambda, block, block * kDrawBlock, std::min(draws, (block + 1) * kDrawBlock), seed, local);
        }
#pragma omp critical
        for (std::size_t c = 0; c < counts.size(); ++c) counts[c] += local[c];
    }
    return normalize(std::move(counts), draws);
}

std::vector<double> sampled_marginals_serial(const Partition& lambda, std::size_t draws, std::uint64_t seed) {
    require_D_n(lambda);
    const std::size_t n = lambda.size();
    std::vector<std::int64_t> counts(n * n, 0);
    for (std::size_t block = 0; block * kDrawBlock < draws; ++block)
        add_samples(lambda, block, block * kDrawBlock, std::min(draws, (block + 1) * kDrawBlock), seed, counts);
    return normalize(std::move(counts), draws);
}

}  // namespace rooks
