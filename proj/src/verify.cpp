#include "rooks/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rooks/asymptotics.hpp"
#include "rooks/combinatorics.hpp"
#include "rooks/partition.hpp"
#include "rooks/random.hpp"
#include "rooks/xray.hpp"

namespace rooks {

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (passed) detail << "first failure: " << what << '\n';
            passed = false;
        }
    }
};

std::int64_t count_by_brute_force(const Partition& lambda) {
    std::int64_t count = 0;
    for_each_rook_placement(lambda, [&](const RookPlacement&) { ++count; });
    return count;
}

// 1. Product formula against exhaustive placement counts.
void criterion_counts(Outcome& out, const VerifyOptions&) {
    std::size_t shapes = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for_each_B_n(n, [&](const Partition& lambda) {
            ++shapes;
            const BigInt formula = count_rook_placements(lambda);
            out.require(formula == count_by_brute_force(lambda), "count mismatch at " + lambda.to_string());
        });
    out.detail << "shapes checked: " << shapes << " (B_1..B_8)\n";
}

// 2. Dilation formula against the count of the dilated shape.
void criterion_dilation(Outcome& out, const VerifyOptions&) {
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 6; ++n)
        for_each_B_n(n, [&](const Partition& lambda) {
            for (std::int64_t m = 1; m <= 3; ++m) {
                ++cases;
                out.require(count_rook_placements_dilated(lambda, m) == count_rook_placements(dilate(lambda, m)),
                            "dilation mismatch at " + lambda.to_string() + ", m = " + std::to_string(m));
            }
        });
    out.detail << "cases checked: " << cases << " (B_1..B_6, m = 1..3)\n";
}

// 3. Cardinalities of shapes, functions, subfamilies and waterfalls.
void criterion_cardinalities(Outcome& out, const VerifyOptions&) {
    out.detail << "n  |B_n|  C(2n-2,n-1)  |D_n|  C_n\n";
    for (std::size_t n = 1; n <= 12; ++n) {
        std::size_t b = 0, d = 0;
        for_each_B_n(n, [&](const Partition& lambda) {
            ++b;
            if (in_D_n(lambda)) ++d;
        });
        const auto nn = static_cast<std::int64_t>(n);
        const BigInt central = binomial(2 * nn - 2, nn - 1), cat = catalan(nn);
        out.detail << n << "  " << b << "  " << central.get_str() << "  " << d << "  " << cat.get_str() << '\n';
        out.require(central == static_cast<long>(b), "|B_n| at n = " + std::to_string(n));
        out.require(cat == static_cast<long>(d), "|D_n| at n = " + std::to_string(n));
    }
    out.detail << "k  |P_k|  A006013  const/C_{k-1}  cont/C_k  motzkin/M_{k-2}  schroder/r_{k-1}  "
                  "cont,f(1)=1/k/C_{k-1}  sum wt  |WT|\n";
    for (std::int64_t k = 1; k <= 8; ++k) {
        std::int64_t total = 0, constant = 0, continuous = 0, motzkin = 0, schroder = 0, low_end = 0;
        for_each_combinatorial_fn(k, [&](const CombinatorialFn& f) {
            ++total;
            const auto c = classify(f);
            constant += c.piecewise_constant;
            continuous += c.continuous;
            motzkin += c.motzkin;
            schroder += c.schroder;
            low_end += c.continuous && f.value(k) == 1;
        });
        std::int64_t weight_sum = 0;
        for (const auto& word : enumerate_dyck(k)) weight_sum += dyck_weight(word, k);
        const auto waterfalls = static_cast<std::int64_t>(enumerate_waterfalls(k).size());
        const BigInt expected = a006013(k);
        out.detail << k << "  " << total << "  " << expected.get_str() << "  " << constant << "/"
                   << catalan(k - 1).get_str() << "  " << continuous << "/" << catalan(k).get_str() << "  "
                   << motzkin << "/" << (k >= 2 ? motzkin_number(k - 2).get_str() : std::string("-")) << "  "
                   << schroder << "/" << schroder_number(k - 1).get_str() << "  " << low_end << "/"
                   << catalan(k - 1).get_str() << "  " << weight_sum << "  " << waterfalls << '\n';
        const std::string at = " at k = " + std::to_string(k);
        out.require(expected == static_cast<long>(total), "|P_k|" + at);
        out.require(catalan(k - 1) == static_cast<long>(constant), "piecewise constant count" + at);
        out.require(catalan(k) == static_cast<long>(continuous), "continuous count" + at);
        if (k >= 2) out.require(motzkin_number(k - 2) == static_cast<long>(motzkin), "Motzkin count" + at);
        out.require(schroder_number(k - 1) == static_cast<long>(schroder), "Schroder count" + at);
        out.require(catalan(k - 1) == static_cast<long>(low_end), "continuous with f(1) = 1/k" + at);
        out.require(expected == static_cast<long>(weight_sum), "weight sum" + at);
        out.require(expected == static_cast<long>(waterfalls), "waterfall count" + at);
    }
}

// 4. The seven members on the 1/3 grid and their constants.
void criterion_p3_constants(Outcome& out, const VerifyOptions&) {
    const double pi = std::numbers::pi, l2 = std::log(2.0), l3 = std::log(3.0);
    struct Row {
        std::vector<std::int64_t> values, slopes;
        double B, D;
    };
    const std::vector<Row> rows = {
        {{3, 3, 3}, {0, 0, 0}, -1.0, 0.5 * std::log(2.0 * pi)},
        {{3, 3, 2}, {0, 0, -1}, l2 - l3 - 2.0 / 3.0, 0.5 * std::log(4.0 * pi / 3.0)},
        {{3, 3, 1}, {0, 0, -2}, 4.0 / 3.0 * l2 - l3 - 1.0, 0.5 * std::log(2.0 * pi / 3.0)},
        {{3, 3, 2}, {0, 0, 0}, 4.0 / 3.0 * l2 - l3 - 1.0, 0.5 * std::log(8.0 * pi / 3.0)},
        {{3, 3, 1}, {0, 0, -1}, 2.0 / 3.0 * l2 - l3 - 2.0 / 3.0, 0.5 * std::log(4.0 * pi / 3.0)},
        {{3, 2, 2}, {0, -1, 0}, 2.0 / 3.0 * l2 - l3 - 2.0 / 3.0, 0.5 * std::log(4.0 * pi / 3.0)},
        {{3, 2, 1}, {0, -1, -1}, -l3 - 1.0 / 3.0, 0.5 * std::log(2.0 * pi / 3.0)},
    };
    const auto members = enumerate_Pk(3);
    out.require(members.size() == 7, "expected seven members, got " + std::to_string(members.size()));
    double worst = 0.0;
    std::size_t matched = 0;
    for (const auto& row : rows) {
        const auto it = std::find_if(members.begin(), members.end(), [&](const CombinatorialFn& f) {
            return f.values() == row.values && f.slopes() == row.slopes;
        });
        if (it == members.end()) {
            out.require(false, "member missing from the enumeration");
            continue;
        }
        ++matched;
        const double dB = std::abs(coefficient_B(*it) - row.B), dD = std::abs(coefficient_D(*it) - row.D);
        worst = std::max({worst, dB, dD});
        out.require(dB <= kConstantsTolerance && dD <= kConstantsTolerance, "constant mismatch");
    }
    out.detail << "members: " << members.size() << ", matched rows: " << matched << "\nmax |error|: " << worst
               << " (tolerance " << kConstantsTolerance << ")\n";
}

// 5. Residual decay along N = 3 * 2^j.
void criterion_residual(Outcome& out, const VerifyOptions&) {
    double worst_scaled = 0.0, worst_final = 0.0;
    for (const auto& f : enumerate_Pk(3)) {
        for (int j = 0; j <= 10; ++j) {
            const std::int64_t N = std::int64_t{3} << j;
            const double r = asymptotic_residual(f, N);
            worst_scaled = std::max(worst_scaled, std::abs(r) * static_cast<double>(N));
            if (j == 10) worst_final = std::max(worst_final, std::abs(r));
        }
    }
    out.require(worst_scaled <= kResidualScaleBound, "N |residual| exceeds the pinned constant");
    out.require(worst_final < kResidualFinalBound, "|residual(3072)| too large");
    out.detail << "max N |residual|: " << worst_scaled << " (bound " << kResidualScaleBound << ")\n"
               << "max |residual(3072)|: " << worst_final << " (bound " << kResidualFinalBound << ")\n";
}

// 6. Extremes of B and D and how often they are attained.
void criterion_ranges(Outcome& out, const VerifyOptions&) {
    for (std::int64_t k = 1; k <= 6; ++k) {
        const auto [blo, bhi] = bounds_B(k);
        const auto [dlo, dhi] = bounds_D(k);
        std::vector<double> Bs, Ds;
        for_each_combinatorial_fn(k, [&](const CombinatorialFn& f) {
            Bs.push_back(coefficient_B(f));
            Ds.push_back(coefficient_D(f));
        });
        auto near = [](const std::vector<double>& xs, double target) {
            return std::count_if(xs.begin(), xs.end(), [&](double x) { return std::abs(x - target) <= kRangeTolerance; });
        };
        const double bmin = *std::min_element(Bs.begin(), Bs.end()), bmax = *std::max_element(Bs.begin(), Bs.end());
        const double dmin = *std::min_element(Ds.begin(), Ds.end()), dmax = *std::max_element(Ds.begin(), Ds.end());
        const auto mult_blo = near(Bs, blo), mult_bhi = near(Bs, bhi), mult_dlo = near(Ds, dlo), mult_dhi = near(Ds, dhi);
        const std::string at = " at k = " + std::to_string(k);
        out.require(std::abs(bmin - blo) <= kRangeTolerance && mult_blo == 1, "min B" + at);
        out.require(std::abs(bmax - bhi) <= kRangeTolerance && mult_bhi == 1, "max B" + at);
        out.require(std::abs(dmin - dlo) <= kRangeTolerance && catalan(k - 1) == static_cast<long>(mult_dlo), "min D" + at);
        // For k = 1 the two D bounds coincide and the single member attains both.
        out.require(std::abs(dmax - dhi) <= kRangeTolerance && mult_dhi == 1, "max D" + at);
        out.detail << "k=" << k << ": B in [" << bmin << ", " << bmax << "] mult " << mult_blo << "/" << mult_bhi
                   << "; D in [" << dmin << ", " << dmax << "] mult " << mult_dlo << "/" << mult_dhi << '\n';
    }
}

// 7. The log N exponent of dilated shapes from a four-point fit.
void criterion_bumps(Outcome& out, const VerifyOptions&) {
    const std::vector<std::int64_t> Ns = {8, 16, 32, 64};
    std::size_t shapes = 0, misses = 0;
    double worst = 0.0;
    std::string worst_shape;
    std::map<std::size_t, double> worst_by_components;
    for (std::size_t n = 1; n <= 6; ++n)
        for_each_D_n(n, [&](const Partition& lambda) {
            ++shapes;
            const double expected = (static_cast<double>(ground_bump_count(lambda)) + 1.0) / 2.0;
            const double err = std::abs(fit_dilated_log_count(lambda, Ns)[2] - expected);
            const auto parts = ground_bump_count(lambda) + 1;
            worst_by_components[parts] = std::max(worst_by_components[parts], err);
            if (err > kBumpExponentTolerance) ++misses;
            if (err > worst) {
                worst = err;
                worst_shape = lambda.to_string();
            }
        });
    out.require(misses == 0, std::to_string(misses) + " shapes outside tolerance");
    out.detail << "shapes: " << shapes << ", outside tolerance " << kBumpExponentTolerance << ": " << misses
               << "\nworst |fit - (bumps+1)/2|: " << worst << " at " << worst_shape << '\n';
    for (const auto& [parts, err] : worst_by_components)
        out.detail << "components " << parts << ": worst error " << err << '\n';
}

// 8. Exact marginals, their bound, and the joint bound.
void criterion_marginals(Outcome& out, const VerifyOptions&) {
    std::size_t shapes = 0, joint_cases = 0;
    for (std::size_t n = 1; n <= 7; ++n)
        for_each_D_n(n, [&](const Partition& lambda) {
            ++shapes;
            const auto m = marginal_matrix(lambda);
            const std::string at = " at " + lambda.to_string();
            out.require(m == marginal_frequencies(lambda), "brute-force frequencies" + at);
            out.require(m == marginal_matrix_serial(lambda), "serial reference" + at);
            for (std::size_t i = 1; i <= n; ++i) {
                Rational row = 0, col = 0;
                for (std::size_t j = 1; j <= n; ++j) {
                    row += m.at(i, j);
                    col += m.at(j, i);
                }
                out.require(row == 1 && col == 1, "doubly stochastic" + at);
            }
            if (n > 6) return;
            for (std::size_t i = 1; i <= n; ++i) {
                const Rational bound = ratio(1, lambda.row_length(i) - static_cast<std::int64_t>(i) + 1);
                for (std::size_t j = 1; j <= n; ++j) out.require(m.at(i, j) <= bound, "marginal bound" + at);
            }
            const std::int64_t mr = minimum_run(lambda);
            for (std::int64_t t = 1; t <= mr; ++t) {
                ++joint_cases;
                const auto ts = static_cast<std::size_t>(t);
                out.require(max_joint_probability(lambda, ts) <= joint_bound(mr, ts), "joint bound" + at);
            }
        });
    out.detail << "shapes: " << shapes << " (D_1..D_7), joint-bound cases: " << joint_cases << " (n <= 6)\n";
}

// 9. Marginals of a dilated shape against the scaled originals.
void criterion_scale(Outcome& out, const VerifyOptions&) {
    std::size_t cells = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for_each_D_n(n, [&](const Partition& lambda) {
            for (std::int64_t N = 1; N <= 3; ++N) {
                const auto size = n * static_cast<std::size_t>(N);
                for (std::size_t i = 1; i <= size; ++i)
                    for (std::size_t j = 1; j <= size; ++j) {
                        ++cells;
                        const auto [lhs, rhs] = scaled_marginal_check(lambda, N, i, j);
                        out.require(lhs == rhs, "scale identity at " + lambda.to_string());
                    }
            }
        });
    out.detail << "cells checked: " << cells << '\n';
}

// 10. Chi-square fit of the sampler on every shape of D_5.
void criterion_sampler(Outcome& out, const VerifyOptions& options) {
    std::size_t shapes = 0;
    double smallest_p = 1.0;
    std::string smallest_at;
    std::uint64_t stream = 0;
    for_each_D_n(5, [&](const Partition& lambda) {
        ++shapes;
        RandomSource rng(options.seed, stream++);
        const auto r = sampler_chi_square(lambda, 100000, rng);
        if (r.p_value < smallest_p) {
            smallest_p = r.p_value;
            smallest_at = lambda.to_string();
        }
        out.require(r.p_value >= kChiSquareAlpha, "chi-square rejects at " + lambda.to_string());
    });
    out.detail << "shapes: " << shapes << ", draws each: 100000, seed: " << options.seed
               << "\nsmallest p-value: " << smallest_p << " at " << smallest_at << '\n';
}

// 11. Moments of X_k, the variance bound and the tail sum.
void criterion_moments(Outcome& out, const VerifyOptions&) {
    for (std::int64_t N = 2; N <= 7; ++N) {
        const auto ex = exhaustive_xray_moments(N);
        for (std::int64_t k = 2; k <= N + 1; ++k) {
            const auto m = xray_moments(N, k);
            const auto kk = static_cast<std::size_t>(k);
            out.require(ex.mean[kk] == m.mean, "mean at N = " + std::to_string(N) + ", k = " + std::to_string(k));
            out.require(ex.second_moment[kk] == m.second_moment,
                        "second moment at N = " + std::to_string(N) + ", k = " + std::to_string(k));
        }
    }
    std::size_t variance_cases = 0;
    for (std::int64_t N = 2; N <= 200; ++N)
        for (std::int64_t k = 2; k <= N + 1; ++k) {
            ++variance_cases;
            const auto m = xray_moments(N, k);
            out.require(m.variance < m.variance_bound, "variance bound at N = " + std::to_string(N));
        }
    std::size_t tail_cases = 0;
    Rational tightest = 0;
    for (std::int64_t N = 1; N <= kExhaustiveTailCap; ++N)
        for (std::int64_t t = 1; t <= N; ++t) {
            ++tail_cases;
            const auto c = tail_sum_bound_check(N, t);
            out.require(c.holds, "tail sum at N = " + std::to_string(N) + ", t = " + std::to_string(t));
            Rational share = c.lhs_exact / c.rhs;
            tightest = std::max(tightest, share);
        }
    out.detail << "exhaustive moments: N = 2..7; variance cases: " << variance_cases << " (N <= 200)\n"
               << "tail cases: " << tail_cases << ", largest lhs/rhs: " << format_rational(tightest) << '\n';
}

// 12. The limit shape at desk scale.
void criterion_limit_shape(Outcome& out, const VerifyOptions& options) {
    const Partition box({1});
    const auto run = limit_shape_experiment(box, 1000, 200, options.seed, {kLimitShapeEps});
    out.require(run.fraction_below[0] >= kLimitShapeFraction, "fraction below eps");
    out.detail << "N=1000, 200 samples: fraction below " << kLimitShapeEps << " = " << run.fraction_below[0]
               << ", median " << run.median << ", max " << run.max << '\n';

    double previous = 1e300;
    out.detail << "medians:";
    for (std::int64_t N : {100, 400, 1600}) {
        const double median = limit_shape_experiment(box, N, 200, options.seed).median;
        out.require(median < previous, "median not decreasing at N = " + std::to_string(N));
        previous = median;
        out.detail << " N=" << N << ":" << median;
    }
    out.detail << '\n';

    const auto curve = limit_shape_curve(box, 201);
    bool exact = true;
    for (const auto& p : curve) exact = exact && p.m == c_function(p.t);
    out.require(exact, "limit shape of the box differs from c");
    out.detail << "box curve equals c on 201 points: " << (exact ? "yes" : "no") << '\n';

    double worst = 0.0;
    for (const auto& lambda : {Partition({1}), Partition({2, 1}), Partition({2, 2})}) {
        const auto marginals = marginal_matrix(lambda);
        for (std::int64_t N : {2, 4, 8, 16})
            for (std::int64_t j = 0; j <= 16; ++j) {
                const Rational t = ratio(j, 8);
                const Rational gap = expected_normalized_xray(lambda, N, t) - limit_shape(marginals, t);
                worst = std::max(worst, std::abs(gap.get_d()) * static_cast<double>(N));
            }
    }
    out.require(worst <= kMeanRateBound, "N |E - m| exceeds the pinned constant");
    out.detail << "max N |E(xi~) - m|: " << worst << " (bound " << kMeanRateBound << ")\n";
}

struct Criterion {
    int id;
    const char* name;
    double budget;
    void (*run)(Outcome&, const VerifyOptions&);
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "exact-count oracle equivalence", 60, criterion_counts},
        {2, "dilation formula", 60, criterion_dilation},
        {3, "cardinalities", 300, criterion_cardinalities},
        {4, "P3 constants table", 1, criterion_p3_constants},
        {5, "asymptotic residual decay", 30, criterion_residual},
        {6, "range bounds", 120, criterion_ranges},
        {7, "ground-bump exponent", 120, criterion_bumps},
        {8, "marginals", 300, criterion_marginals},
        {9, "margin-scale identity", 60, criterion_scale},
        {10, "sampler correctness", 120, criterion_sampler},
        {11, "moment identities", 180, criterion_moments},
        {12, "limit shape", 300, criterion_limit_shape},
    };
    return all;
}

const std::map<std::string, std::vector<int>, std::less<>>& suites() {
    static const std::map<std::string, std::vector<int>, std::less<>> all = {
        {"counts", {1, 2, 3}},   {"p3", {4}},     {"residual", {5}}, {"ranges", {6}},
        {"bumps", {7}},          {"marginals", {8}},  {"scale", {9}},    {"sampler", {10}},
        {"moments", {11}},       {"limit-shape", {12}},
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
    };
    return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"counts", "p3",  "residual", "ranges",
                                                   "bumps",  "marginals", "scale",  "sampler",
                                                   "moments", "limit-shape", "all"};
    return names;
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
    const auto& all = criteria();
    if (id < 1 || id > static_cast<int>(all.size())) throw std::invalid_argument("unknown criterion");
    const auto& c = all[static_cast<std::size_t>(id - 1)];
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        c.run(out, options);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.seconds = elapsed.count();
    r.budget_seconds = c.budget;
    if (r.seconds > c.budget) out.require(false, "time budget exceeded");
    r.passed = out.passed;
    r.detail = out.detail.str();
    return r;
}

std::vector<CriterionResult> run_suite(std::string_view suite, const VerifyOptions& options) {
    const auto& all = suites();
    const auto it = all.find(suite);
    if (it == all.end()) throw std::invalid_argument("unknown suite: " + std::string(suite));
    std::vector<CriterionResult> results;
    for (int id : it->second) results.push_back(run_criterion(id, options));
    return results;
}

}  // namespace rooks
