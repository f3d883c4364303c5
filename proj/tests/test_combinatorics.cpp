#include <doctest.h>

#include <map>
#include <set>

#include "rooks/combinatorics.hpp"

using namespace rooks;

namespace {

// Direct scan of the axioms over a box of candidate data.
std::set<CombinatorialFn> members_by_axioms(std::int64_t k) {
    std::set<CombinatorialFn> out;
    std::vector<std::int64_t> v(k), mu(k);
    std::function<void(std::int64_t)> rec = [&](std::int64_t i) {
        if (i == k) {
            if (!CombinatorialFn::check(k, v, mu)) out.emplace(k, v, mu);
            return;
        }
        for (std::int64_t a = 1; a <= k; ++a)
            for (std::int64_t b = -k; b <= 0; ++b) {
                v[i] = a;
                mu[i] = b;
                rec(i + 1);
            }
    };
    rec(0);
    return out;
}

// Lattice paths (0,0) -> (2k-1,k-1) with E/N steps inside x >= 2y.
BigInt gpath_count(std::int64_t k) {
    const std::int64_t W = 2 * k - 1, H = k - 1;
    std::vector<std::vector<BigInt>> c(W + 1, std::vector<BigInt>(H + 1, 0));
    c[0][0] = 1;
    for (std::int64_t x = 0; x <= W; ++x)
        for (std::int64_t y = 0; y <= H; ++y) {
            if (x < 2 * y || (x == 0 && y == 0)) continue;
            if (x > 0) c[x][y] += c[x - 1][y];
            if (y > 0) c[x][y] += c[x][y - 1];
        }
    return c[W][H];
}

// The four coloring rules, walked from (0,k).
bool rules_hold(const std::string& word, const std::vector<SegmentColor>& colors, std::int64_t k) {
    std::int64_t x = 0, y = k;
    bool prev_vertical = false;
    SegmentColor prev = SegmentColor::green;
    for (std::size_t s = 0; s < word.size(); ++s) {
        const SegmentColor c = colors[s];
        if (word[s] == 'R') {
            if (c != SegmentColor::blue) return false;
            ++x;
            prev_vertical = false;
            continue;
        }
        const bool on_line = x + y == k || x + y - 1 == k;
        if ((x == k || on_line) && c != SegmentColor::green) return false;
        if (prev_vertical && prev == SegmentColor::green && c == SegmentColor::blue) return false;
        --y;
        prev_vertical = true;
        prev = c;
    }
    return true;
}

const std::vector<std::int64_t> kCatalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
const std::vector<std::int64_t> kMotzkin = {1, 1, 2, 4, 9, 21, 51, 127, 323};
const std::vector<std::int64_t> kSchroder = {1, 2, 6, 22, 90, 394, 1806, 8558};

}  // namespace

TEST_CASE("sequences") {
    for (std::int64_t n = 0; n < 9; ++n) CHECK(motzkin_number(n) == kMotzkin[n]);
    for (std::int64_t n = 0; n < 8; ++n) CHECK(schroder_number(n) == kSchroder[n]);
    const std::vector<std::int64_t> a = {1, 2, 7, 30, 143, 728, 3876, 21318};
    for (std::int64_t k = 1; k <= 8; ++k) CHECK(a006013(k) == a[k - 1]);
}

TEST_CASE("drop tuples") {
    CHECK(to_tuple(CombinatorialFn(3, {3, 3, 3}, {0, 0, 0})).y == std::vector<std::int64_t>{0, 0, 0});
    CHECK(to_tuple(CombinatorialFn(3, {3, 3, 2}, {0, 0, -1})).y == std::vector<std::int64_t>{0, 0, 1});
    CHECK(to_tuple(CombinatorialFn(3, {3, 3, 1}, {0, 0, -2})).y == std::vector<std::int64_t>{0, 0, 2});
    CHECK(is_drop_tuple({3, {0, 0, 2}}));
    CHECK_FALSE(is_drop_tuple({3, {2, 0, 0}}));
    CHECK_FALSE(is_drop_tuple({3, {0, 0}}));
    CHECK_THROWS_AS(from_tuple({3, {2, 0, 0}}), std::invalid_argument);
    CHECK(tuple_to_gpath({3, {0, 0, 0}}) == "EEEEENN");
    CHECK_THROWS_AS(tuple_to_gpath({3, {1, 1, 1}}), std::invalid_argument);
    CHECK(enumerate_Pk(2).size() == 2);
    CHECK(enumerate_Pk(1).size() == 1);
    CHECK(enumerate_Pk(1)[0] == CombinatorialFn(1, {1}, {0}));
    CHECK(enumerate_Pk(3).size() == 7);
    CHECK(enumerate_Pk(5).size() == 143);
    CHECK_THROWS_AS(enumerate_Pk(10), std::length_error);
}

TEST_CASE("bijections round trip") {
    for (std::int64_t k = 2; k <= 6; ++k) {
        std::set<std::string> paths;
        std::size_t n = 0;
        for_each_drop_tuple(k, [&](const DropTuple& t) {
            ++n;
            CHECK(is_drop_tuple(t));
            const auto f = from_tuple(t);
            CHECK(to_tuple(f) == t);
            const auto w = tuple_to_gpath(t);
            CHECK(is_gpath(w, k));
            CHECK(gpath_to_tuple(w, k) == t);
            paths.insert(w);
            const auto p = path_of(f);
            CHECK(is_function_path(p, k));
            CHECK(func_of(p, k) == f);
            CHECK(path_of(func_of(p, k)) == p);
        });
        CHECK(paths.size() == n);
        CHECK(BigInt(static_cast<long>(n)) == a006013(k));
        CHECK(gpath_count(k) == a006013(k));
    }
}

TEST_CASE("enumeration matches the axioms") {
    for (std::int64_t k = 1; k <= 4; ++k) {
        const auto listed = enumerate_Pk(k);
        const std::set<CombinatorialFn> as_set(listed.begin(), listed.end());
        CHECK(as_set.size() == listed.size());
        CHECK(as_set == members_by_axioms(k));
    }
}

TEST_CASE("function paths") {
    const FunctionPath one = path_of(CombinatorialFn(3, {3, 3, 3}, {0, 0, 0}));
    CHECK(one == FunctionPath{{1, 0}, {1, 0}, {1, 0}, {0, -1}, {0, -1}, {0, -1}});
    // touches X+Y = 3 at (1,2)
    const FunctionPath touching{{1, -1}, {1, 0}, {1, 0}, {0, -1}, {0, -1}};
    CHECK_FALSE(is_function_path(touching, 3));
    CHECK_THROWS_AS(func_of(touching, 3), std::invalid_argument);
    CHECK_FALSE(is_function_path({{1, 0}, {1, 0}, {1, 0}, {0, -1}}, 3));
}

TEST_CASE("subfamilies") {
    const auto c3 = classify(CombinatorialFn(3, {3, 3, 3}, {0, 0, 0}));
    CHECK(c3.piecewise_constant);
    CHECK(c3.continuous);
    CHECK(c3.schroder);
    CHECK_FALSE(c3.motzkin);
    CHECK(classify(CombinatorialFn(4, {4, 4, 4, 4}, {0, 0, 0, 0})).motzkin);
    for (std::int64_t k = 2; k <= 8; ++k) {
        std::int64_t pc = 0, cont = 0, mo = 0, sc = 0, low_end = 0;
        for_each_combinatorial_fn(k, [&](const CombinatorialFn& f) {
            const auto c = classify(f);
            pc += c.piecewise_constant;
            cont += c.continuous;
            mo += c.motzkin;
            sc += c.schroder;
            low_end += c.continuous && f.value(k) == 1;
        });
        CAPTURE(k);
        CHECK(pc == kCatalan[k - 1]);
        CHECK(cont == kCatalan[k]);
        CHECK(mo == kMotzkin[k - 2]);
        CHECK(sc == kSchroder[k - 1]);
        CHECK(low_end == kCatalan[k - 1]);
    }
}

TEST_CASE("dyck images of continuous functions") {
    CHECK(continuous_to_dyck(CombinatorialFn(3, {3, 3, 3}, {0, 0, 0})) == "RRRDDD");
    CHECK_THROWS_AS(continuous_to_dyck(CombinatorialFn(3, {3, 3, 2}, {0, 0, 0})), std::invalid_argument);
    for (std::int64_t k = 1; k <= 6; ++k) {
        const auto all = enumerate_dyck(k);
        CHECK(static_cast<std::int64_t>(all.size()) == kCatalan[k]);
        std::set<std::string> image;
        for (const auto& f : enumerate_Pk(k)) {
            if (!classify(f).continuous) continue;
            const auto w = continuous_to_dyck(f);
            CHECK(is_dyck_word(w, k));
            CHECK(image.insert(w).second);
            if (f.value(k) == 1) {
                // passes through (k-1, 1)
                std::int64_t x = 0, y = k;
                bool seen = k == 1;
                for (char c : w) {
                    c == 'R' ? ++x : --y;
                    seen = seen || (x == k - 1 && y == 1);
                }
                CHECK(seen);
            }
        }
        CHECK(image == std::set<std::string>(all.begin(), all.end()));
    }
}

TEST_CASE("waterfalls") {
    CHECK(dyck_weight("RRDD", 2) == 1);
    CHECK(dyck_weight("RDRD", 2) == 1);
    CHECK(enumerate_waterfalls(1).size() == 1);
    CHECK(enumerate_waterfalls(2).size() == 2);
    CHECK_THROWS_AS(enumerate_waterfalls(9), std::length_error);
    for (std::int64_t k = 1; k <= 6; ++k) {
        std::map<std::string, std::int64_t> generated;
        for (const auto& w : enumerate_waterfalls(k)) {
            CHECK(is_valid_waterfall(w, k));
            CHECK(rules_hold(w.base, w.colors, k));
            ++generated[w.base];
        }
        std::int64_t total = 0;
        for (const auto& d : enumerate_dyck(k)) {
            // brute force over all colorings
            const std::size_t L = d.size();
            std::int64_t valid = 0;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L); ++mask) {
                std::vector<SegmentColor> col(L);
                for (std::size_t s = 0; s < L; ++s)
                    col[s] = (mask >> s & 1) ? SegmentColor::blue : SegmentColor::green;
                const bool ok = rules_hold(d, col, k);
                CHECK(is_valid_waterfall({d, col}, k) == ok);
                valid += ok;
            }
            CHECK(generated[d] == valid);
            CHECK(dyck_weight(d, k) == valid);
            total += dyck_weight(d, k);
        }
        CHECK(BigInt(static_cast<long>(total)) == a006013(k));
    }
}
