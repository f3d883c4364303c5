#include <doctest.h>

#include <cmath>
#include <type_traits>

#include "rooks/combinatorics.hpp"
#include "rooks/plfn.hpp"

using namespace rooks;

namespace {

PiecewiseLinearFn sample_member() {
    return PiecewiseLinearFn({ratio(1, 2)}, {{Rational(0), Rational(1)}, {ratio(-1, 3), ratio(5, 6)}},
                             {ratio(3, 4)});
}

template <class T>
void check_loft_sandwich(const BasicPiecewiseLinearFn<T>& f) {
    const T l = loft(f);
    const T slack = std::is_same_v<T, double> ? T(1e-12) : T(0);
    CHECK(l > T(0));
    CHECK(l <= T(1));
    for (std::int64_t j = 0; j <= 1000; ++j) {
        const Rational x = ratio(j, 1000);
        T xv;
        if constexpr (std::is_same_v<T, double>) xv = to_double(x);
        else xv = x;
        const T y = f.evaluate(x) + xv - T(1);
        CHECK(xv + slack >= y);
        CHECK(y + slack >= (xv < l ? xv : l));
        if (xv <= l) CHECK(f.evaluate(x) == T(1));
    }
}

}  // namespace

TEST_CASE("class membership") {
    CHECK(validate_class_P(constant_one()).ok());
    CHECK(validate_class_P(irrational_slope_example()).ok());
    CHECK(validate_class_P(sample_member()).ok());
    const auto step = validate_class_P(step_non_example());
    CHECK_FALSE(step.ok());
    bool found = false;
    for (const auto& c : step.checks)
        if (!c.passed) {
            CHECK(c.witness == std::string("1/2"));
            found = true;
        }
    CHECK(found);
    // a slope that climbs
    CHECK_FALSE(validate_class_P(PiecewiseLinearFn({ratio(1, 2)}, {{Rational(0), Rational(1)}, {ratio(1, 4), ratio(1, 2)}}))
                    .ok());
    // no initial plateau
    CHECK_FALSE(validate_class_P(PiecewiseLinearFn({}, {{ratio(-1, 2), Rational(1)}})).ok());
    CHECK_THROWS_AS(PiecewiseLinearFn({ratio(1, 2)}, {{Rational(0), Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseLinearFn({Rational(1)}, {{Rational(0), Rational(1)}, {Rational(0), Rational(1)}}),
                    std::invalid_argument);
}

TEST_CASE("combinatorial class axioms") {
    CHECK_NOTHROW(CombinatorialFn(3, {3, 3, 1}, {0, 0, -2}));
    CHECK_THROWS_AS(CombinatorialFn(3, {3, 3, 1}, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(CombinatorialFn(3, {2, 2, 1}, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(CombinatorialFn(3, {3, 1, 1}, {0, 0, 0}), std::invalid_argument);  // touches the diagonal
    CHECK_THROWS_AS(CombinatorialFn(3, {3, 3, 1}, {0, 0, -3}), std::invalid_argument);  // starts too high
    CHECK(CombinatorialFn::check(3, {3, 3}, {0, 0}).has_value());
}

TEST_CASE("evaluation and limits") {
    CHECK(constant_one().evaluate(ratio(37, 100)) == 1);
    const auto irr = irrational_slope_example();
    CHECK(irr.evaluate(ratio(1, 2)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(irr.right_limit(ratio(1, 2)) == doctest::Approx(1.0 / std::sqrt(2.0) - 0.5 / std::sqrt(7.0)));
    CHECK(irr.left_limit(ratio(1, 2)) == 1.0);
    const CombinatorialFn f(3, {3, 3, 1}, {0, 0, -2});
    CHECK(f.right_limit(ratio(2, 3)) == 1);
    CHECK(f.evaluate(ratio(5, 6)) == ratio(2, 3));
    CHECK(f.lift().right_limit(ratio(2, 3)) == 1);
    CHECK_THROWS_AS(constant_one().evaluate(ratio(3, 2)), std::out_of_range);
    CHECK_THROWS_AS(constant_one().right_limit(Rational(1)), std::out_of_range);
    // left-continuity of every lift
    for (std::int64_t k = 1; k <= 5; ++k)
        for (const auto& g : enumerate_Pk(k)) {
            const auto lifted = g.lift();
            for (std::int64_t i = 1; i <= k; ++i) CHECK(lifted.evaluate(ratio(i, k)) == lifted.left_limit(ratio(i, k)));
            for (std::int64_t j = 0; j <= 4 * k; ++j) CHECK(lifted.evaluate(ratio(j, 4 * k)) == g.evaluate(ratio(j, 4 * k)));
        }
}

TEST_CASE("loft") {
    CHECK(loft(constant_one()) == 1);
    for (std::int64_t k = 2; k <= 6; ++k) CHECK(loft(b_low_example(k).lift()) == ratio(1, k));
    CHECK(loft(sample_member()) == ratio(1, 6));
    CHECK_THROWS_AS(loft(step_non_example()), std::invalid_argument);
    check_loft_sandwich(constant_one());
    check_loft_sandwich(sample_member());
    check_loft_sandwich(irrational_slope_example());
    for (std::int64_t k = 1; k <= 4; ++k)
        for (const auto& f : enumerate_Pk(k)) {
            CHECK(loft(f.lift()) >= ratio(1, k));
            check_loft_sandwich(f.lift());
        }
}

TEST_CASE("young diagrams and rounding") {
    CHECK(young_diagram(constant_one(), 3) == Partition({3, 3, 3}));
    CHECK(young_diagram(b_low_example(2), 4) == Partition({4, 4, 3, 2}));
    CHECK_THROWS_AS(young_diagram(b_low_example(2), 3), std::invalid_argument);
    CHECK_THROWS_AS(young_diagram(sample_member(), 3), std::invalid_argument);
    for (std::int64_t k = 1; k <= 6; ++k)
        for (const auto& f : enumerate_Pk(k)) {
            CHECK(validate_class_P(f.lift()).ok());
            for (std::int64_t N : {k, 2 * k, 4 * k}) {
                const auto lambda = young_diagram(f, N);
                CHECK(in_B_n(lambda));
                CHECK(in_D_n(lambda));
                CHECK(rounding_discrepancy(f.lift(), N) == 0.0);
            }
        }
    CHECK(rounding_discrepancy(constant_one(), 7) == 0.0);
    const auto irr = irrational_slope_example();
    double largest = 0.0;
    for (std::int64_t N = 2; N <= 512; N += 2) {
        const double r = rounding_discrepancy(irr, N);
        CHECK(r >= 0.0);
        largest = std::max(largest, r);
        CHECK(in_D_n(young_diagram(irr, N)));
    }
    CHECK(largest < 5.0);
    // snapping: 0.5 + 1e-12 scaled by 2 rounds to 1
    const FloatPiecewiseLinearFn near({ratio(1, 2)}, {{0.0, 1.0}, {0.0, 0.5 + 1e-12}});
    CHECK(young_diagram(near, 2) == Partition({2, 1}));
}
