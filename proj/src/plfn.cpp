#include "rooks/plfn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rooks {

namespace {

template <class T>
T from_rational(const Rational& q);
template <>
Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
double from_rational<double>(const Rational& q) { return q.get_d(); }

std::int64_t ceil_scaled(const Rational& y) { return ceil_int(y); }
std::int64_t ceil_scaled(double y) {
    double r = std::nearbyint(y);
    if (std::abs(y - r) <= kSnapTolerance) return static_cast<std::int64_t>(r);
    return static_cast<std::int64_t>(std::ceil(y));
}

double log1p_ratio(const Rational& num, const Rational& den) { return std::log1p(Rational(num / den).get_d()); }
double log1p_ratio(double num, double den) { return std::log1p(num / den); }

}  // namespace

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto& c : checks) {
        out += c.name + ": " + (c.passed ? "pass" : "fail");
        if (c.witness) out += " at " + *c.witness;
        out += '\n';
    }
    return out;
}

template <class T>
BasicPiecewiseLinearFn<T>::BasicPiecewiseLinearFn(std::vector<Rational> breakpoints,
                                                  std::vector<LinearPiece<T>> pieces,
                                                  std::vector<std::optional<T>> breakpoint_values,
                                                  std::optional<T> value_at_one)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (pieces_.size() != breakpoints_.size() + 1)
        throw std::invalid_argument("need exactly one more piece than interior breakpoints");
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (breakpoints_[i] <= 0 || breakpoints_[i] >= 1)
            throw std::invalid_argument("breakpoints must lie strictly inside (0,1)");
        if (i > 0 && breakpoints_[i] <= breakpoints_[i - 1])
            throw std::invalid_argument("breakpoints must be strictly increasing");
    }
    if (!breakpoint_values.empty() && breakpoint_values.size() != breakpoints_.size())
        throw std::invalid_argument("breakpoint value list must match the breakpoints");
    values_.reserve(breakpoints_.size());
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!breakpoint_values.empty() && breakpoint_values[i])
            values_.push_back(*breakpoint_values[i]);
        else
            values_.push_back(pieces_[i].at(from_rational<T>(breakpoints_[i])));
    }
    value_at_one_ = value_at_one ? *value_at_one : pieces_.back().at(T(1));
}

template <class T>
T BasicPiecewiseLinearFn<T>::evaluate(const Rational& x) const {
    if (x < 0 || x > 1) throw std::out_of_range("evaluate: x outside [0,1]");
    if (x == 1) return value_at_one_;
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it != breakpoints_.end() && *it == x) return values_[it - breakpoints_.begin()];
    return pieces_[it - breakpoints_.begin()].at(from_rational<T>(x));
}

template <class T>
T BasicPiecewiseLinearFn<T>::right_limit(const Rational& a) const {
    if (a < 0 || a >= 1) throw std::out_of_range("right_limit: a outside [0,1)");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), a);
    return pieces_[it - breakpoints_.begin()].at(from_rational<T>(a));
}

template <class T>
T BasicPiecewiseLinearFn<T>::left_limit(const Rational& a) const {
    if (a <= 0 || a > 1) throw std::out_of_range("left_limit: a outside (0,1]");
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), a);
    return pieces_[it - breakpoints_.begin()].at(from_rational<T>(a));
}

template <class T>
bool BasicPiecewiseLinearFn<T>::grid_compatible(std::int64_t N) const {
    if (N < 1) return false;
    for (const auto& b : breakpoints_) {
        Rational scaled = b * N;
        scaled.canonicalize();
        if (scaled.get_den() != 1) return false;
    }
    return true;
}

template class BasicPiecewiseLinearFn<Rational>;
template class BasicPiecewiseLinearFn<double>;

template <class T>
ValidationReport validate_class_P(const BasicPiecewiseLinearFn<T>& f) {
    ValidationReport report;
    const auto& bps = f.breakpoints();
    const auto& pieces = f.pieces();
    const T one(1), zero(0);
    auto fail = [](AxiomCheck& c, const Rational& at) {
        if (c.passed) {
            c.passed = false;
            c.witness = format_rational(at);
        }
    };

    AxiomCheck plateau{"initial plateau f = 1 near 0", true, std::nullopt};
    if (!(pieces.front().slope == zero && pieces.front().intercept == one)) fail(plateau, Rational(0));

    AxiomCheck decreasing{"weakly decreasing", true, std::nullopt};
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (pieces[i].slope > zero) fail(decreasing, f.piece_begin(i));
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const T value = f.breakpoint_values()[i];
        if (f.left_limit(bps[i]) < value || value < f.right_limit(bps[i])) fail(decreasing, bps[i]);
    }
    if (f.left_limit(Rational(1)) < f.value_at_one()) fail(decreasing, Rational(1));

    AxiomCheck positive_end{"f(1) > 0", true, std::nullopt};
    if (!(f.value_at_one() > zero)) fail(positive_end, Rational(1));

    AxiomCheck range{"0 < f <= 1", true, std::nullopt};
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const T value = f.breakpoint_values()[i];
        if (!(value > zero) || value > one) fail(range, bps[i]);
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Rational b = f.piece_begin(i), e = f.piece_end(i);
        const T from_right = pieces[i].at(from_rational<T>(b));
        const T from_left = pieces[i].at(from_rational<T>(e));
        if (from_right > one) fail(range, b);
        if (from_left < zero) fail(range, e);
    }
    if (f.value_at_one() > one) fail(range, Rational(1));

    // lim_{x->a+} f(x) > 1 - a on (0,1): linear in a on each piece, so it is
    // enough to test the left end strictly and the right end weakly.
    AxiomCheck right_limits{"right limits above 1 - a", true, std::nullopt};
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        const Rational b = f.piece_begin(i), e = f.piece_end(i);
        if (!(pieces[i].at(from_rational<T>(b)) + from_rational<T>(b) - one > zero)) fail(right_limits, b);
        if (pieces[i].at(from_rational<T>(e)) + from_rational<T>(e) - one < zero) fail(right_limits, e);
    }

    AxiomCheck values_and_left{"f(a) and left limits above 1 - a", true, std::nullopt};
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const T b = from_rational<T>(bps[i]);
        if (!(f.breakpoint_values()[i] + b - one > zero) || !(f.left_limit(bps[i]) + b - one > zero))
            fail(values_and_left, bps[i]);
    }
    if (!(f.value_at_one() > zero) || !(f.left_limit(Rational(1)) > zero)) fail(values_and_left, Rational(1));

    report.checks = {plateau, decreasing, positive_end, range, right_limits, values_and_left};
    return report;
}

template <class T>
T loft(const BasicPiecewiseLinearFn<T>& f) {
    if (!validate_class_P(f).ok()) throw std::invalid_argument("loft: function is not in the class");
    const auto& bps = f.breakpoints();
    const auto& pieces = f.pieces();
    const T one(1), zero(0);

    // End of the initial plateau, as a piece index and a point.
    std::size_t idx = 0;
    while (idx < bps.size() && f.breakpoint_values()[idx] == one && pieces[idx + 1].slope == zero &&
           pieces[idx + 1].intercept == one)
        ++idx;
    const Rational plateau_end = f.piece_end(idx);
    const T plateau = from_rational<T>(plateau_end);

    // Infimum of f(x) + x - 1 over {f < 1}; every candidate is a piece-end
    // limit or an explicit value.
    std::optional<T> inf;
    auto consider = [&](const T& v) {
        if (!inf || v < *inf) inf = v;
    };
    if (idx < bps.size()) {
        if (f.breakpoint_values()[idx] < one) consider(f.breakpoint_values()[idx] + plateau - one);
        for (std::size_t j = idx + 1; j < pieces.size(); ++j) {
            const T b = from_rational<T>(f.piece_begin(j)), e = from_rational<T>(f.piece_end(j));
            consider(pieces[j].at(b) + b - one);
            consider(pieces[j].at(e) + e - one);
        }
        for (std::size_t j = idx + 1; j < bps.size(); ++j)
            consider(f.breakpoint_values()[j] + from_rational<T>(bps[j]) - one);
        consider(f.value_at_one());
    } else if (f.value_at_one() < one) {
        consider(f.value_at_one());
    }
    if (!inf) return plateau;
    return *inf < plateau ? *inf : plateau;
}

template <class T>
Partition young_diagram(const BasicPiecewiseLinearFn<T>& f, std::int64_t N) {
    if (!f.grid_compatible(N))
        throw std::invalid_argument("young_diagram: N must clear every breakpoint denominator");
    std::vector<std::int64_t> parts;
    parts.reserve(static_cast<std::size_t>(N));
    const T scale = from_rational<T>(Rational(N));
    for (std::int64_t i = 1; i <= N; ++i) parts.push_back(ceil_scaled(scale * f.evaluate(ratio(i, N))));
    return Partition(std::move(parts));
}

Partition young_diagram(const CombinatorialFn& f, std::int64_t N) {
    if (N < 1 || N % f.k() != 0) throw std::invalid_argument("young_diagram: N must be a multiple of k");
    return young_diagram(f.lift(), N);
}

template <class T>
double rounding_discrepancy(const BasicPiecewiseLinearFn<T>& f, std::int64_t N) {
    if (!f.grid_compatible(N))
        throw std::invalid_argument("rounding_discrepancy: N must clear every breakpoint denominator");
    const T scale = from_rational<T>(Rational(N));
    double total = 0.0;
    for (std::int64_t n = 1; n <= N; ++n) {
        const T y = scale * f.evaluate(ratio(n, N));
        const T gap = from_rational<T>(Rational(ceil_scaled(y))) - y;
        if (gap == T(0)) continue;
        total += log1p_ratio(gap, y + from_rational<T>(Rational(n - N)));
    }
    return total;
}

template ValidationReport validate_class_P(const PiecewiseLinearFn&);
template ValidationReport validate_class_P(const FloatPiecewiseLinearFn&);
template Rational loft(const PiecewiseLinearFn&);
template double loft(const FloatPiecewiseLinearFn&);
template Partition young_diagram(const PiecewiseLinearFn&, std::int64_t);
template Partition young_diagram(const FloatPiecewiseLinearFn&, std::int64_t);
template double rounding_discrepancy(const PiecewiseLinearFn&, std::int64_t);
template double rounding_discrepancy(const FloatPiecewiseLinearFn&, std::int64_t);

CombinatorialFn::CombinatorialFn(std::int64_t k, std::vector<std::int64_t> values, std::vector<std::int64_t> slopes)
    : k_(k), values_(std::move(values)), slopes_(std::move(slopes)) {
    if (auto why = check(k_, values_, slopes_)) throw std::invalid_argument("not a combinatorial function: " + *why);
}

std::optional<std::string> CombinatorialFn::check(std::int64_t k, const std::vector<std::int64_t>& v,
                                                  const std::vector<std::int64_t>& mu) {
    if (k < 1) return "k must be positive";
    if (static_cast<std::int64_t>(v.size()) != k || static_cast<std::int64_t>(mu.size()) != k)
        return "need exactly k values and k slopes";
    if (v[0] != k || mu[0] != 0) return "first piece must be identically 1";
    for (std::int64_t i = 1; i <= k; ++i) {
        const std::int64_t vi = v[i - 1], mi = mu[i - 1];
        const auto at = std::to_string(i) + "/" + std::to_string(k);
        if (mi > 0) return "positive slope on the piece ending at " + at;
        if (vi < 1 || vi > k) return "value out of range at " + at;
        if (i < k && vi + i <= k) return "value not above the anti-diagonal at " + at;
        if (i >= 2) {
            const std::int64_t right = vi - mi;
            const auto left_end = std::to_string(i - 1) + "/" + std::to_string(k);
            if (right + (i - 1) <= k) return "right limit not above the anti-diagonal at " + left_end;
            if (v[i - 2] < right) return "not upper semicontinuous at " + left_end;
        }
    }
    return std::nullopt;
}

Rational CombinatorialFn::evaluate(const Rational& x) const {
    if (x < 0 || x > 1) throw std::out_of_range("evaluate: x outside [0,1]");
    if (x == 0) return 1;
    const std::int64_t i = ceil_int(x * k_);
    return (Rational(value(i)) + slope(i) * (x * k_ - i)) / k_;
}

Rational CombinatorialFn::right_limit(const Rational& a) const {
    if (a < 0 || a >= 1) throw std::out_of_range("right_limit: a outside [0,1)");
    const std::int64_t i = floor_int(a * k_) + 1;
    return (Rational(value(i)) + slope(i) * (a * k_ - i)) / k_;
}

PiecewiseLinearFn CombinatorialFn::lift() const {
    std::vector<Rational> bps;
    std::vector<LinearPiece<Rational>> pieces;
    std::vector<std::optional<Rational>> vals;
    for (std::int64_t i = 1; i <= k_; ++i) {
        const Rational slope_i(slope(i));
        pieces.push_back({slope_i, ratio(value(i), k_) - slope_i * ratio(i, k_)});
        if (i < k_) {
            bps.push_back(ratio(i, k_));
            vals.emplace_back(ratio(value(i), k_));
        }
    }
    for (auto& p : pieces) p.intercept.canonicalize();
    return PiecewiseLinearFn(std::move(bps), std::move(pieces), std::move(vals), ratio(value(k_), k_));
}

CombinatorialFn b_low_example(std::int64_t k) {
    std::vector<std::int64_t> v{k}, mu{0};
    for (std::int64_t i = 2; i <= k; ++i) {
        v.push_back(k + 1 - i);
        mu.push_back(-1);
    }
    return CombinatorialFn(k, v, mu);
}

CombinatorialFn d_high_example(std::int64_t k) {
    std::vector<std::int64_t> v{k}, mu(static_cast<std::size_t>(k), 0);
    for (std::int64_t i = 2; i <= k; ++i) v.push_back(std::min(k, k + 2 - i));
    return CombinatorialFn(k, v, mu);
}

FloatPiecewiseLinearFn irrational_slope_example() {
    const double r2 = 1.0 / std::sqrt(2.0), r7 = 1.0 / std::sqrt(7.0);
    return FloatPiecewiseLinearFn({ratio(1, 2)}, {{0.0, 1.0}, {-r7, r2}}, {r2});
}

PiecewiseLinearFn step_non_example() {
    return PiecewiseLinearFn({ratio(1, 2)}, {{Rational(0), Rational(1)}, {Rational(0), ratio(1, 2)}},
                             {Rational(1)});
}

PiecewiseLinearFn constant_one() { return PiecewiseLinearFn({}, {{Rational(0), Rational(1)}}); }

}  // namespace rooks
