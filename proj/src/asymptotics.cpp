#include "rooks/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace rooks {

namespace {

double as_double(const Rational& q) { return q.get_d(); }
double as_double(double x) { return x; }

// Antiderivative of log(c x + d) with c != 0.
double log_linear_antiderivative(double c, double d, double x) {
    const double y = c * x + d;
    return y * (std::log(y) - 1.0) / c;
}

}  // namespace

template <class T>
double coefficient_B(const BasicPiecewiseLinearFn<T>& f) {
    if (!validate_class_P(f).ok()) throw std::invalid_argument("coefficient_B: function is not in the class");
    const auto& pieces = f.pieces();
    // On the first piece f + x - 1 = x, improper at 0.
    const double rho1 = as_double(f.piece_end(0));
    double total = rho1 * std::log(rho1) - rho1;
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        const double a = as_double(f.piece_begin(i)), b = as_double(f.piece_end(i));
        const double c = as_double(pieces[i].slope) + 1.0;
        const double d = as_double(pieces[i].intercept) - 1.0;
        if (c == 0.0)
            total += (b - a) * std::log(d);
        else
            total += log_linear_antiderivative(c, d, b) - log_linear_antiderivative(c, d, a);
    }
    return total;
}

template double coefficient_B(const PiecewiseLinearFn&);
template double coefficient_B(const FloatPiecewiseLinearFn&);

double coefficient_B(const CombinatorialFn& f) { return coefficient_B(f.lift()); }

double coefficient_D(const CombinatorialFn& f) {
    const std::int64_t k = f.k();
    double total = 0.5 * std::log(2.0 * std::numbers::pi * static_cast<double>(f.value(k)) / static_cast<double>(k));
    for (std::int64_t i = 1; i < k; ++i) {
        if (f.jump_scaled(i) == 0) continue;
        // k (f(a) + a - 1) over k (f(a+) + a - 1) at a = i/k.
        const auto num = static_cast<double>(f.value(i) + i - k);
        const auto den = static_cast<double>(f.right_limit_scaled(i) + i - k);
        total += 0.5 * std::log(num / den);
    }
    return total;
}

double coefficient_D_integral(const CombinatorialFn& f) {
    const std::int64_t k = f.k();
    // On a piece f + x - 1 = c x + d the integrand is -d / (x (c x + d)), whose
    // antiderivative is log((c x + d) / x). Piece 1 has d = 0.
    double total = 0.0;
    for (std::int64_t i = 2; i <= k; ++i) {
        const auto right_end = static_cast<double>(f.value(i) + i - k) / static_cast<double>(i);
        const auto left_end =
            static_cast<double>(f.right_limit_scaled(i - 1) + (i - 1) - k) / static_cast<double>(i - 1);
        total += std::log(right_end / left_end);
    }
    return 0.5 * std::log(2.0 * std::numbers::pi) + 0.5 * total;
}

AsymptoticCoefficients coefficients(const CombinatorialFn& f) {
    AsymptoticCoefficients c;
    c.B = coefficient_B(f);
    c.D = coefficient_D(f);
    return c;
}

double asymptotic_residual(const CombinatorialFn& f, std::int64_t N) {
    const auto c = coefficients(f);
    const double n = static_cast<double>(N);
    const double log_count = log_count_rook_placements(young_diagram(f, N));
    return log_count - (n * std::log(n) + c.B * n + 0.5 * std::log(n) + *c.D);
}

template <class T>
double asymptotic_residual(const BasicPiecewiseLinearFn<T>& f, std::int64_t N) {
    const double B = coefficient_B(f);
    const double n = static_cast<double>(N);
    const double log_count = log_count_rook_placements(young_diagram(f, N));
    return log_count - (n * std::log(n) + B * n + 0.5 * std::log(n));
}

template double asymptotic_residual(const PiecewiseLinearFn&, std::int64_t);
template double asymptotic_residual(const FloatPiecewiseLinearFn&, std::int64_t);

std::pair<double, double> bounds_B(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const double kd = static_cast<double>(k);
    return {-std::log(kd) - 1.0 / kd, -1.0};
}

std::pair<double, double> bounds_D(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const double kd = static_cast<double>(k);
    const double log_pi_over_k = std::log(std::numbers::pi / kd);
    return {0.5 * (std::log(2.0) + log_pi_over_k), 0.5 * (kd * std::log(2.0) + log_pi_over_k)};
}

double DilatedAsymptotics::alpha3() const { return std::exp(log_alpha3); }
double DilatedAsymptotics::alpha4() const { return std::exp(log_alpha4); }

double DilatedAsymptotics::predicted_log_count(std::int64_t N) const {
    const double n = static_cast<double>(N);
    return static_cast<double>(alpha1) * n * std::log(n) + log_alpha3 * n + alpha2 * std::log(n) + log_alpha4;
}

CombinatorialFn function_of_component(const Partition& component) {
    const auto s = static_cast<std::int64_t>(component.size());
    if (!in_B_n(component) || !in_D_n(component) || ground_bump_count(component) != 0)
        throw std::invalid_argument("component must be a bump-free shape in D_n");
    std::vector<std::int64_t> values(component.parts().begin(), component.parts().end());
    return CombinatorialFn(s, std::move(values), std::vector<std::int64_t>(static_cast<std::size_t>(s), 0));
}

DilatedAsymptotics dilated_asymptotics(const Partition& lambda) {
    if (lambda.empty() || !in_B_n(lambda) || !in_D_n(lambda))
        throw std::invalid_argument("dilated_asymptotics: shape must lie in D_n");
    DilatedAsymptotics out;
    out.components = ground_bump_decomposition(lambda);
    for (const auto& component : out.components) {
        const auto f = function_of_component(component);
        const double s = static_cast<double>(f.k());
        out.alpha1 += f.k();
        out.alpha2 += 0.5;
        out.log_alpha3 += s * std::log(s) + coefficient_B(f) * s;
        out.log_alpha4 += 0.5 * std::log(s) + coefficient_D(f);
    }
    return out;
}

double log_count_dilated(const Partition& lambda, std::int64_t N) {
    return log_count_rook_placements(dilate(lambda, N));
}

std::vector<double> fit_dilated_log_count(const Partition& lambda, const std::vector<std::int64_t>& Ns) {
    if (Ns.size() < 4) throw std::invalid_argument("need at least four sample sizes");
    Eigen::MatrixXd design(static_cast<Eigen::Index>(Ns.size()), 4);
    Eigen::VectorXd target(static_cast<Eigen::Index>(Ns.size()));
    for (std::size_t r = 0; r < Ns.size(); ++r) {
        const double n = static_cast<double>(Ns[r]);
        const auto row = static_cast<Eigen::Index>(r);
        design(row, 0) = n * std::log(n);
        design(row, 1) = n;
        design(row, 2) = std::log(n);
        design(row, 3) = 1.0;
        target(row) = log_count_dilated(lambda, Ns[r]);
    }
    const Eigen::VectorXd x = design.colPivHouseholderQr().solve(target);
    return {x(0), x(1), x(2), x(3)};
}

}  // namespace rooks
