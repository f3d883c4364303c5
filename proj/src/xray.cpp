#include "rooks/xray.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rooks {

namespace {

void require_D_n(const Partition& lambda) {
    if (lambda.empty() || !in_B_n(lambda) || !in_D_n(lambda))
        throw std::invalid_argument("shape must lie in D_n");
}

double quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

DeviationStats summarize(std::vector<double> deviations, const std::vector<double>& eps) {
    DeviationStats s;
    s.eps = eps;
    s.deviations = std::move(deviations);
    if (s.deviations.empty()) return s;
    std::vector<double> sorted = s.deviations;
    std::sort(sorted.begin(), sorted.end());
    s.max = sorted.back();
    s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
    s.median = quantile(sorted, 0.5);
    s.q05 = quantile(sorted, 0.05);
    s.q25 = quantile(sorted, 0.25);
    s.q75 = quantile(sorted, 0.75);
    s.q95 = quantile(sorted, 0.95);
    for (double e : eps) {
        const auto below = std::count_if(sorted.begin(), sorted.end(), [e](double d) { return d < e; });
        s.fraction_below.push_back(static_cast<double>(below) / static_cast<double>(sorted.size()));
    }
    return s;
}

void check_experiment(const Partition& lambda, std::int64_t N, std::size_t samples) {
    require_D_n(lambda);
    if (N < 1 || N * static_cast<std::int64_t>(lambda.size()) > kExperimentSizeCap)
        throw std::length_error("limit_shape_experiment: size exceeds cap");
    if (samples > kExperimentSampleCap) throw std::length_error("limit_shape_experiment: too many samples");
}

double sample_deviation(const Partition& big, const std::vector<double>& curve, std::uint64_t seed,
                        std::size_t s) {
    RandomSource rng(seed, s);
    return sup_deviation(sample_rook_placement(big, rng), curve);
}

}  // namespace

std::int64_t XRayProfile::x(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(components.size())) return 0;
    return components[static_cast<std::size_t>(k)];
}

std::int64_t XRayProfile::X(std::int64_t k) const {
    if (k < 0) return 0;
    if (k >= static_cast<std::int64_t>(cumulative.size())) return static_cast<std::int64_t>(n);
    return cumulative[static_cast<std::size_t>(k)];
}

std::int64_t XRayProfile::xi(const Rational& t) const { return X(floor_int(t)); }

Rational XRayProfile::normalized(const Rational& t) const {
    if (t < 0 || t > 2) throw std::out_of_range("normalized X-ray: t outside [0,2]");
    const auto count = static_cast<std::int64_t>(n);
    return ratio(xi(t * count), count);
}

XRayProfile xray_profile(const RookPlacement& p) {
    XRayProfile out;
    out.n = p.cols.size();
    out.components.assign(2 * out.n + 1, 0);
    for (std::size_t r = 0; r < out.n; ++r) ++out.components[r + 1 + static_cast<std::size_t>(p.cols[r])];
    out.cumulative.assign(out.components.size(), 0);
    std::partial_sum(out.components.begin(), out.components.end(), out.cumulative.begin());
    return out;
}

BigInt s_count(const Rational& phi, std::int64_t N) {
    if (N < 1) throw std::invalid_argument("s_count: N must be positive");
    const BigInt n(static_cast<long>(N));
    if (phi <= 0) return 0;
    if (phi >= 2) return n * n;
    const std::int64_t m = floor_int(phi * N);
    if (phi <= 1) return binomial(m, 2);
    return n * n - binomial(2 * N - m + 1, 2);
}

Rational c_function(const Rational& t) {
    if (t <= 0) return 0;
    if (t <= 1) return t * t / 2;
    if (t <= 2) return Rational(-t * t / 2 + 2 * t - 1);
    return 1;
}

double c_function(double t) {
    if (t <= 0.0) return 0.0;
    if (t <= 1.0) return t * t / 2.0;
    if (t <= 2.0) return -t * t / 2.0 + 2.0 * t - 1.0;
    return 1.0;
}

Rational limit_shape(const MarginalMatrix& marginals, const Rational& t) {
    if (t < 0 || t > 2) throw std::out_of_range("limit_shape: t outside [0,2]");
    const std::size_t n = marginals.n;
    const auto count = static_cast<std::int64_t>(n);
    Rational total = 0;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b) {
            const Rational& e = marginals.at(a, b);
            if (e == 0) continue;
            total += e * c_function(Rational(t * count - static_cast<long>(a + b) + 2));
        }
    return total / count;
}

Rational limit_shape(const Partition& lambda, const Rational& t) { return limit_shape(marginal_matrix(lambda), t); }

std::vector<CurvePoint> limit_shape_curve(const Partition& lambda, std::size_t points) {
    if (points < 2) throw std::invalid_argument("limit_shape_curve: need at least two points");
    const auto marginals = marginal_matrix(lambda);
    std::vector<CurvePoint> out;
    out.reserve(points);
    for (std::size_t j = 0; j < points; ++j) {
        const Rational t = ratio(2 * static_cast<std::int64_t>(j), static_cast<std::int64_t>(points - 1));
        out.push_back({t, limit_shape(marginals, t)});
    }
    return out;
}

Rational expected_normalized_xray(const Partition& lambda, std::int64_t N, const Rational& t) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (t < 0 || t > 2) throw std::out_of_range("expected_normalized_xray: t outside [0,2]");
    const auto big = dilate(lambda, N);
    const auto marginals = marginal_matrix(big);
    const auto size = static_cast<std::int64_t>(big.size());
    const std::int64_t reach = floor_int(t * size);
    Rational total = 0;
    for (std::int64_t i = 1; i <= size; ++i)
        for (std::int64_t j = 1; j <= size && i + j <= reach; ++j)
            total += marginals.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return total / size;
}

XRayMoments xray_moments(std::int64_t N, std::int64_t k) {
    if (N < 2 || k < 2 || k > N + 1) throw std::out_of_range("xray_moments: need N >= 2 and 2 <= k <= N+1");
    const BigInt n(static_cast<long>(N)), kk(static_cast<long>(k));
    XRayMoments m;
    m.mean = Rational(kk * (kk - 1), 2 * n);
    m.mean.canonicalize();
    Rational extra(kk * (kk - 1) * (kk - 2) * (3 * kk - 5), 12 * n * (n - 1));
    extra.canonicalize();
    m.second_moment = m.mean + extra;
    m.variance = m.second_moment - m.mean * m.mean;
    m.variance_bound = Rational(kk * kk, 2 * n);
    m.variance_bound.canonicalize();
    return m;
}

ExhaustiveMoments exhaustive_xray_moments(std::int64_t N) {
    if (N < 1 || N > 9) throw std::length_error("exhaustive_xray_moments: N outside [1,9]");
    const auto n = static_cast<std::size_t>(N);
    std::vector<std::int64_t> sum(2 * n + 1, 0), sum_sq(2 * n + 1, 0);
    RookPlacement p;
    p.cols.resize(n);
    std::iota(p.cols.begin(), p.cols.end(), 1);
    std::int64_t total = 0;
    do {
        ++total;
        const auto profile = xray_profile(p);
        for (std::size_t k = 0; k <= 2 * n; ++k) {
            const auto X = profile.cumulative[k];
            sum[k] += X;
            sum_sq[k] += X * X;
        }
    } while (std::next_permutation(p.cols.begin(), p.cols.end()));
    ExhaustiveMoments out;
    for (std::size_t k = 0; k <= 2 * n; ++k) {
        out.mean.push_back(ratio(sum[k], total));
        out.second_moment.push_back(ratio(sum_sq[k], total));
    }
    return out;
}

TailCheck tail_sum_bound_check(std::int64_t N, std::int64_t t, std::size_t samples, std::uint64_t seed) {
    if (N < 1 || t < 1 || t > N) throw std::out_of_range("tail_sum_bound_check: need 1 <= t <= N");
    const auto n = static_cast<std::size_t>(N);
    TailCheck check;
    check.rhs = Rational(BigInt(static_cast<long>(N + 1)), factorial(t + 1));
    check.rhs.canonicalize();
    // Per permutation, the number of components x_2..x_{N+1} reaching t.
    auto hits = [&](const RookPlacement& p) {
        const auto profile = xray_profile(p);
        std::int64_t count = 0;
        for (std::int64_t k = 2; k <= N + 1; ++k) count += profile.x(k) >= t ? 1 : 0;
        return count;
    };
    if (N <= kExhaustiveTailCap) {
        RookPlacement p;
        p.cols.resize(n);
        std::iota(p.cols.begin(), p.cols.end(), 1);
        std::int64_t total = 0, hit = 0;
        do {
            ++total;
            hit += hits(p);
        } while (std::next_permutation(p.cols.begin(), p.cols.end()));
        check.lhs_exact = ratio(hit, total);
        check.lhs = check.lhs_exact.get_d();
        check.holds = check.lhs_exact <= check.rhs;
        return check;
    }
    check.exhaustive = false;
    const Partition square(std::vector<std::int64_t>(n, N));
    RandomSource rng(seed);
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        const auto h = static_cast<double>(hits(sample_rook_placement(square, rng)));
        sum += h;
        sum_sq += h * h;
    }
    const double count = static_cast<double>(samples);
    check.lhs = sum / count;
    const double var = samples > 1 ? (sum_sq - sum * sum / count) / (count - 1.0) : 0.0;
    check.standard_error = std::sqrt(std::max(var, 0.0) / count);
    check.holds = check.lhs <= check.rhs.get_d() + 3.0 * check.standard_error;
    return check;
}

std::vector<double> limit_curve_on_steps(const Partition& lambda, std::int64_t N) {
    require_D_n(lambda);
    const auto marginals = marginal_matrix(lambda);
    const std::size_t n = lambda.size();
    std::vector<double> e(n * n);
    for (std::size_t c = 0; c < e.size(); ++c) e[c] = marginals.entries[c].get_d();
    const auto count = static_cast<double>(n);
    const std::int64_t M = N * static_cast<std::int64_t>(n);
    std::vector<double> curve(static_cast<std::size_t>(2 * M + 1));
    for (std::int64_t k = 0; k <= 2 * M; ++k) {
        // n t with t = k/M is k/N.
        const double nt = static_cast<double>(k) / static_cast<double>(N);
        double total = 0.0;
        for (std::size_t a = 1; a <= n; ++a)
            for (std::size_t b = 1; b <= n; ++b) {
                const double w = e[(a - 1) * n + (b - 1)];
                if (w != 0.0) total += w * c_function(nt - static_cast<double>(a + b) + 2.0);
            }
        curve[static_cast<std::size_t>(k)] = total / count;
    }
    return curve;
}

double sup_deviation(const RookPlacement& p, const std::vector<double>& curve) {
    const auto profile = xray_profile(p);
    const std::size_t M = profile.n;
    if (curve.size() != 2 * M + 1) throw std::invalid_argument("sup_deviation: curve does not match the size");
    // xi~ equals X_k/M on [k/M, (k+1)/M) and m is monotone, so each step's
    // sup is reached at one of its two ends.
    const double scale = static_cast<double>(M);
    double sup = 0.0;
    for (std::size_t k = 0; k <= 2 * M; ++k) {
        const double level = static_cast<double>(profile.cumulative[k]) / scale;
        sup = std::max(sup, std::abs(level - curve[k]));
        if (k < 2 * M) sup = std::max(sup, std::abs(level - curve[k + 1]));
    }
    return sup;
}

DeviationStats limit_shape_experiment(const Partition& lambda, std::int64_t N, std::size_t samples,
                                      std::uint64_t seed, const std::vector<double>& eps) {
    check_experiment(lambda, N, samples);
    const auto big = dilate(lambda, N);
    const auto curve = limit_curve_on_steps(lambda, N);
    std::vector<double> deviations(samples);
    const auto count = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < count; ++s)
        deviations[static_cast<std::size_t>(s)] = sample_deviation(big, curve, seed, static_cast<std::size_t>(s));
    return summarize(std::move(deviations), eps);
}

DeviationStats limit_shape_experiment_serial(const Partition& lambda, std::int64_t N, std::size_t samples,
                                             std::uint64_t seed, const std::vector<double>& eps) {
    check_experiment(lambda, N, samples);
    const auto big = dilate(lambda, N);
    const auto curve = limit_curve_on_steps(lambda, N);
    std::vector<double> deviations(samples);
    for (std::size_t s = 0; s < samples; ++s) deviations[s] = sample_deviation(big, curve, seed, s);
    return summarize(std::move(deviations), eps);
}

}  // namespace rooks
