#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rooks/partition.hpp"
#include "rooks/plfn.hpp"

namespace rooks {

/// log #RP(lambda(f,N)) = A N log N + B N + C log N + D + o(1).
struct AsymptoticCoefficients {
    double A = 1.0;
    double B = 0.0;
    double C = 0.5;
    std::optional<double> D;  ///< only for the combinatorial class
};

/// Integral of log(f(x) + x - 1) over (0,1], piece by piece in closed form.
template <class T>
double coefficient_B(const BasicPiecewiseLinearFn<T>& f);
double coefficient_B(const CombinatorialFn& f);

/// Jump-sum form: 1/2 log(2 pi f(1)) plus half the log-ratios across jumps.
double coefficient_D(const CombinatorialFn& f);
/// Same constant through the piecewise integral of (x f' - f + 1) / (x (f + x - 1)).
double coefficient_D_integral(const CombinatorialFn& f);

AsymptoticCoefficients coefficients(const CombinatorialFn& f);

/// log #RP(lambda(f,N)) - (N log N + B N + 1/2 log N + D).
double asymptotic_residual(const CombinatorialFn& f, std::int64_t N);
/// For general members there is no constant term; the residual is O(1) only.
template <class T>
double asymptotic_residual(const BasicPiecewiseLinearFn<T>& f, std::int64_t N);

std::pair<double, double> bounds_B(std::int64_t k);
std::pair<double, double> bounds_D(std::int64_t k);

/// #RP(N (.) lambda) ~ alpha4 * alpha3^N * N^(alpha1 N + alpha2).
struct DilatedAsymptotics {
    std::int64_t alpha1 = 0;
    double alpha2 = 0.0;
    double log_alpha3 = 0.0;
    double log_alpha4 = 0.0;
    std::vector<Partition> components;

    double alpha3() const;
    double alpha4() const;
    /// log of the leading form at N.
    double predicted_log_count(std::int64_t N) const;
};

/// A bump-free shape of D_s as the piecewise constant member of the class on the 1/s grid.
CombinatorialFn function_of_component(const Partition& component);

DilatedAsymptotics dilated_asymptotics(const Partition& lambda);

/// log #RP(N (.) lambda) without building the big integer.
double log_count_dilated(const Partition& lambda, std::int64_t N);

/// Least-squares coefficients (a, b, c, d) of log #RP(N (.) lambda) against
/// N log N, N, log N, 1 over the given N.
std::vector<double> fit_dilated_log_count(const Partition& lambda, const std::vector<std::int64_t>& Ns);

extern template double coefficient_B(const PiecewiseLinearFn&);
extern template double coefficient_B(const FloatPiecewiseLinearFn&);
extern template double asymptotic_residual(const PiecewiseLinearFn&, std::int64_t);
extern template double asymptotic_residual(const FloatPiecewiseLinearFn&, std::int64_t);

}  // namespace rooks
