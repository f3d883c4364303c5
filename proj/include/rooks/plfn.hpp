#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rooks/partition.hpp"
#include "rooks/rational.hpp"

namespace rooks {

template <class T>
struct LinearPiece {
    T slope;
    T intercept;
    T at(const T& x) const { return slope * x + intercept; }
};

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::optional<std::string> witness;  ///< first violating point, as "p/q"
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool ok() const;
    std::string summary() const;
};

/// A weakly decreasing piecewise-linear f:[0,1]->(0,1] with rational breakpoints.
///
/// Piece i (0-based) is the linear function on the open interval between
/// breakpoint i-1 and breakpoint i, with 0 and 1 as the outer ends. The value
/// at each interior breakpoint is stored separately, since it may differ from
/// both one-sided limits. T is Rational for exact data and double for the
/// float-backed variant; breakpoints are always exact.
template <class T>
class BasicPiecewiseLinearFn {
public:
    using Scalar = T;

    BasicPiecewiseLinearFn() = default;
    /// Breakpoints must lie strictly inside (0,1) and increase. A missing
    /// breakpoint value defaults to the left limit; a missing f(1) to the last
    /// piece's value at 1. Throws std::invalid_argument on structural errors.
    BasicPiecewiseLinearFn(std::vector<Rational> breakpoints, std::vector<LinearPiece<T>> pieces,
                           std::vector<std::optional<T>> breakpoint_values = {},
                           std::optional<T> value_at_one = std::nullopt);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<LinearPiece<T>>& pieces() const { return pieces_; }
    const std::vector<T>& breakpoint_values() const { return values_; }
    const T& value_at_one() const { return value_at_one_; }

    /// Bounds of piece i as exact rationals.
    Rational piece_begin(std::size_t i) const { return i == 0 ? Rational(0) : breakpoints_[i - 1]; }
    Rational piece_end(std::size_t i) const { return i == breakpoints_.size() ? Rational(1) : breakpoints_[i]; }

    T evaluate(const Rational& x) const;
    T right_limit(const Rational& a) const;
    T left_limit(const Rational& a) const;

    /// True when N * rho is an integer for every breakpoint rho.
    bool grid_compatible(std::int64_t N) const;

private:
    std::vector<Rational> breakpoints_;
    std::vector<LinearPiece<T>> pieces_;
    std::vector<T> values_;
    T value_at_one_{};
};

using PiecewiseLinearFn = BasicPiecewiseLinearFn<Rational>;
using FloatPiecewiseLinearFn = BasicPiecewiseLinearFn<double>;

/// A member of the combinatorial class on the 1/k grid.
///
/// values[i-1] = k f(i/k) and slopes[i-1] is the integer slope of f on
/// ((i-1)/k, i/k]. In the scaled square [0,k]^2 the right limit of f at
/// (i-1)/k is (values[i-1] - slopes[i-1]) / k.
class CombinatorialFn {
public:
    CombinatorialFn() = default;
    /// Throws std::invalid_argument when the data violates the class axioms.
    CombinatorialFn(std::int64_t k, std::vector<std::int64_t> values, std::vector<std::int64_t> slopes);

    /// Reason the data fails the class axioms, or nullopt when it is a member.
    static std::optional<std::string> check(std::int64_t k, const std::vector<std::int64_t>& values,
                                            const std::vector<std::int64_t>& slopes);

    std::int64_t k() const { return k_; }
    const std::vector<std::int64_t>& values() const { return values_; }
    const std::vector<std::int64_t>& slopes() const { return slopes_; }
    /// k f(i/k), i in [1,k].
    std::int64_t value(std::int64_t i) const { return values_.at(i - 1); }
    /// Integer slope on ((i-1)/k, i/k], i in [1,k].
    std::int64_t slope(std::int64_t i) const { return slopes_.at(i - 1); }
    /// k * lim_{x -> (i/k)+} f(x) for i in [0,k-1].
    std::int64_t right_limit_scaled(std::int64_t i) const { return value(i + 1) - slope(i + 1); }
    /// k * (f(i/k) - lim_{x -> (i/k)+} f(x)), i in [1,k-1].
    std::int64_t jump_scaled(std::int64_t i) const { return value(i) - right_limit_scaled(i); }

    Rational evaluate(const Rational& x) const;
    Rational right_limit(const Rational& a) const;

    PiecewiseLinearFn lift() const;

    bool operator==(const CombinatorialFn&) const = default;
    auto operator<=>(const CombinatorialFn&) const = default;

private:
    std::int64_t k_ = 0;
    std::vector<std::int64_t> values_;
    std::vector<std::int64_t> slopes_;
};

template <class T>
ValidationReport validate_class_P(const BasicPiecewiseLinearFn<T>& f);

/// Supremum of the admissible plateau-and-clearance set, in closed form.
template <class T>
T loft(const BasicPiecewiseLinearFn<T>& f);

/// Parts ceil(N f(i/N)), i = 1..N. Throws std::invalid_argument unless N is
/// grid compatible. Float-backed values within 1e-9 of an integer snap to it.
template <class T>
Partition young_diagram(const BasicPiecewiseLinearFn<T>& f, std::int64_t N);
Partition young_diagram(const CombinatorialFn& f, std::int64_t N);

/// sum over n of log((ceil(N f(n/N)) + n - N) / (N f(n/N) + n - N)).
template <class T>
double rounding_discrepancy(const BasicPiecewiseLinearFn<T>& f, std::int64_t N);

inline constexpr double kSnapTolerance = 1e-9;

/// f(x) = min(1 + 1/k - x, 1), the unique minimizer of B on the 1/k grid.
CombinatorialFn b_low_example(std::int64_t k);
/// f(x) = min(1 + (2 - ceil(kx))/k, 1), the unique maximizer of D on the 1/k grid.
CombinatorialFn d_high_example(std::int64_t k);
/// f = 1 on [0,1/2), 1/sqrt2 at 1/2, 1/sqrt2 - x/sqrt7 after.
FloatPiecewiseLinearFn irrational_slope_example();
/// The step function 1 on [0,1/2], 1/2 after; not a class member.
PiecewiseLinearFn step_non_example();
PiecewiseLinearFn constant_one();

extern template class BasicPiecewiseLinearFn<Rational>;
extern template class BasicPiecewiseLinearFn<double>;

}  // namespace rooks
