#pragma once

#include <cstdint>
#include <vector>

#include "rooks/partition.hpp"
#include "rooks/random.hpp"
#include "rooks/rational.hpp"

namespace rooks {

/// Anti-diagonal counts of a permutation matrix of size n.
struct XRayProfile {
    std::size_t n = 0;
    std::vector<std::int64_t> components;  ///< index k in [0, 2n]; x_k for k >= 2
    std::vector<std::int64_t> cumulative;  ///< X_k = x_2 + ... + x_k

    std::int64_t x(std::int64_t k) const;
    std::int64_t X(std::int64_t k) const;  ///< 0 below 2, n above 2n
    /// xi(t) = X_floor(t).
    std::int64_t xi(const Rational& t) const;
    /// xi~(t) = xi(n t) / n on [0,2].
    Rational normalized(const Rational& t) const;
};

XRayProfile xray_profile(const RookPlacement& p);

/// #{(x,y) in [N]^2 : x + y <= phi N}.
BigInt s_count(const Rational& phi, std::int64_t N);

/// t^2/2 on (0,1], -t^2/2 + 2t - 1 on (1,2], clamped to 0 and 1 outside.
Rational c_function(const Rational& t);
double c_function(double t);

/// (1/n) sum_{a,b} E(pi_ab) c(n t - a - b + 2), exactly.
Rational limit_shape(const Partition& lambda, const Rational& t);
/// Same evaluator with the marginal table computed once.
Rational limit_shape(const MarginalMatrix& marginals, const Rational& t);

struct CurvePoint {
    Rational t;
    Rational m;
};
/// m_lambda on grid points t = 2j/(points-1), j = 0..points-1.
std::vector<CurvePoint> limit_shape_curve(const Partition& lambda, std::size_t points);

/// E(xi~(t)) for a uniform placement of N (.) lambda, summed from exact marginals.
Rational expected_normalized_xray(const Partition& lambda, std::int64_t N, const Rational& t);

struct XRayMoments {
    Rational mean;
    Rational second_moment;
    Rational variance;
    Rational variance_bound;  ///< k^2 / (2N)
};
/// Closed forms for X_k of a uniform permutation of size N; 2 <= k <= N+1.
XRayMoments xray_moments(std::int64_t N, std::int64_t k);

struct ExhaustiveMoments {
    std::vector<Rational> mean;           ///< index k in [0, 2N]
    std::vector<Rational> second_moment;  ///< index k in [0, 2N]
};
/// Moments of X_k averaged over all of S_N. N <= 9.
ExhaustiveMoments exhaustive_xray_moments(std::int64_t N);

struct TailCheck {
    bool exhaustive = true;
    double lhs = 0.0;
    Rational lhs_exact;  ///< set in exhaustive mode
    Rational rhs;
    double standard_error = 0.0;  ///< empirical mode only
    bool holds = false;
};
inline constexpr std::int64_t kExhaustiveTailCap = 7;
/// sum_{k=2}^{N+1} P(x_k >= t) against (N+1)/(t+1)!. Exhaustive for N <= 7, otherwise
/// `samples` uniform permutations with a 3 sigma allowance.
TailCheck tail_sum_bound_check(std::int64_t N, std::int64_t t, std::size_t samples = 100000,
                               std::uint64_t seed = 0);

struct DeviationStats {
    std::vector<double> deviations;  ///< per sample, in sample order
    double max = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double q05 = 0.0;
    double q25 = 0.0;
    double q75 = 0.0;
    double q95 = 0.0;
    std::vector<double> eps;
    std::vector<double> fraction_below;  ///< one per eps
};

/// sup_t |xi~(t) - m(t)| for one placement, over every step of xi~.
/// `curve` holds m(k/M) for k = 0..2M, where M is the placement size.
double sup_deviation(const RookPlacement& p, const std::vector<double>& curve);
/// m_lambda(k/M) for k = 0..2M in double precision, M = n N.
std::vector<double> limit_curve_on_steps(const Partition& lambda, std::int64_t N);

/// Sample s is drawn from stream s of `seed`, so results are identical for any thread count.
DeviationStats limit_shape_experiment(const Partition& lambda, std::int64_t N, std::size_t samples,
                                      std::uint64_t seed, const std::vector<double>& eps = {});
DeviationStats limit_shape_experiment_serial(const Partition& lambda, std::int64_t N, std::size_t samples,
                                             std::uint64_t seed, const std::vector<double>& eps = {});

inline constexpr std::int64_t kExperimentSizeCap = 100000;
inline constexpr std::size_t kExperimentSampleCap = 100000;

}  // namespace rooks
