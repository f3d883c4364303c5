#include "rooks/combinatorics.hpp"

#include <stdexcept>

namespace rooks {

namespace {

bool same_parity(std::int64_t a, std::int64_t b) { return ((a - b) % 2) == 0; }

}  // namespace

bool is_drop_tuple(const DropTuple& t) {
    if (t.k < 2 || static_cast<std::int64_t>(t.y.size()) != 2 * t.k - 3) return false;
    std::int64_t prefix = 0;
    for (std::size_t m = 1; m <= t.y.size(); ++m) {
        if (t.y[m - 1] < 0) return false;
        prefix += t.y[m - 1];
        if (prefix > static_cast<std::int64_t>((m + 1) / 2)) return false;
    }
    return true;
}

DropTuple to_tuple(const CombinatorialFn& f) {
    const std::int64_t k = f.k();
    if (k < 2) throw std::invalid_argument("drop tuples are defined for k >= 2");
    DropTuple t{k, std::vector<std::int64_t>(static_cast<std::size_t>(2 * k - 3), 0)};
    for (std::int64_t h = 1; h <= k - 1; ++h) t.y[2 * h - 2] = -f.slope(h + 1);
    for (std::int64_t l = 1; l <= k - 2; ++l) t.y[2 * l - 1] = f.jump_scaled(l + 1);
    return t;
}

CombinatorialFn from_tuple(const DropTuple& t) {
    if (!is_drop_tuple(t)) throw std::invalid_argument("tuple violates the prefix-sum constraint");
    const std::int64_t k = t.k;
    std::vector<std::int64_t> v{k}, mu{0};
    for (std::int64_t i = 2; i <= k; ++i) {
        const std::int64_t slope = -t.y[2 * i - 4];
        const std::int64_t jump = i - 1 >= 2 ? t.y[2 * i - 5] : 0;
        v.push_back(v.back() - jump + slope);
        mu.push_back(slope);
    }
    return CombinatorialFn(k, std::move(v), std::move(mu));
}

std::string tuple_to_gpath(const DropTuple& t) {
    if (!is_drop_tuple(t)) throw std::invalid_argument("tuple violates the prefix-sum constraint");
    std::string word = "E";
    std::int64_t used = 0;
    for (auto y : t.y) {
        word += 'E';
        word.append(static_cast<std::size_t>(y), 'N');
        used += y;
    }
    word += 'E';
    word.append(static_cast<std::size_t>(t.k - 1 - used), 'N');
    return word;
}

DropTuple gpath_to_tuple(std::string_view word, std::int64_t k) {
    if (!is_gpath(word, k)) throw std::invalid_argument("not a lattice path of the G_k family");
    // N-run lengths following each E; the run after the first E is always empty.
    std::vector<std::int64_t> runs;
    for (char c : word) {
        if (c == 'E')
            runs.push_back(0);
        else
            ++runs.back();
    }
    DropTuple t{k, std::vector<std::int64_t>(runs.begin() + 1, runs.end() - 1)};
    return t;
}

bool is_gpath(std::string_view word, std::int64_t k) {
    if (k < 2) return false;
    std::int64_t x = 0, y = 0;
    for (char c : word) {
        if (c == 'E')
            ++x;
        else if (c == 'N')
            ++y;
        else
            return false;
        if (x < 2 * y) return false;
    }
    return x == 2 * k - 1 && y == k - 1;
}

FunctionPath path_of(const CombinatorialFn& f) {
    FunctionPath path;
    const std::int64_t k = f.k();
    for (std::int64_t i = 1; i <= k; ++i) {
        if (i >= 2)
            for (std::int64_t j = 0; j < f.jump_scaled(i - 1); ++j) path.push_back({0, -1});
        path.push_back({1, f.slope(i)});
    }
    for (std::int64_t j = 0; j < f.value(k); ++j) path.push_back({0, -1});
    return path;
}

bool is_function_path(const FunctionPath& path, std::int64_t k) {
    if (k < 1 || path.empty()) return false;
    std::int64_t x = 0, y = k;
    for (std::size_t s = 0; s < path.size(); ++s) {
        const auto& step = path[s];
        const bool diagonal = step.dx == 1 && step.dy <= 0;
        const bool vertical = step.dx == 0 && step.dy == -1;
        if (!diagonal && !vertical) return false;
        x += step.dx;
        y += step.dy;
        if (s + 1 < path.size() && x + y <= k) return false;
    }
    return x == k && y == 0;
}

CombinatorialFn func_of(const FunctionPath& path, std::int64_t k) {
    if (!is_function_path(path, k)) throw std::invalid_argument("path is not in the function path class");
    std::vector<std::int64_t> v, mu;
    std::int64_t y = k;
    for (const auto& step : path) {
        y += step.dy;
        if (step.dx == 1) {
            v.push_back(y);
            mu.push_back(step.dy);
        }
    }
    return CombinatorialFn(k, std::move(v), std::move(mu));
}

void for_each_drop_tuple(std::int64_t k, const std::function<void(const DropTuple&)>& visit) {
    if (k < 2) throw std::invalid_argument("drop tuples are defined for k >= 2");
    DropTuple t{k, std::vector<std::int64_t>(static_cast<std::size_t>(2 * k - 3), 0)};
    std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t m, std::int64_t prefix) {
        if (m == t.y.size()) {
            visit(t);
            return;
        }
        const auto bound = static_cast<std::int64_t>((m + 2) / 2);
        for (std::int64_t y = 0; prefix + y <= bound; ++y) {
            t.y[m] = y;
            fill(m + 1, prefix + y);
        }
        t.y[m] = 0;
    };
    fill(0, 0);
}

void for_each_combinatorial_fn(std::int64_t k, const std::function<void(const CombinatorialFn&)>& visit,
                               std::int64_t cap) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k > cap) throw std::length_error("enumerate_Pk: k exceeds cap " + std::to_string(cap));
    if (k == 1) {
        visit(CombinatorialFn(1, {1}, {0}));
        return;
    }
    for_each_drop_tuple(k, [&](const DropTuple& t) { visit(from_tuple(t)); });
}

std::vector<CombinatorialFn> enumerate_Pk(std::int64_t k, std::int64_t cap) {
    std::vector<CombinatorialFn> out;
    for_each_combinatorial_fn(k, [&](const CombinatorialFn& f) { out.push_back(f); }, cap);
    return out;
}

FunctionClasses classify(const CombinatorialFn& f) {
    const std::int64_t k = f.k();
    FunctionClasses c;
    c.piecewise_constant = true;
    c.continuous = true;
    c.schroder = true;
    for (std::int64_t i = 1; i <= k; ++i) {
        if (f.slope(i) != 0) c.piecewise_constant = false;
        if (f.slope(i) != 0 && f.slope(i) != -1) c.schroder = false;
    }
    for (std::int64_t i = 1; i < k; ++i)
        if (f.jump_scaled(i) != 0) c.continuous = false;

    c.motzkin = c.schroder && same_parity(f.value(k), 0);
    for (std::int64_t i = 1; i < k && c.motzkin; ++i) {
        const bool kink = f.jump_scaled(i) != 0 || f.slope(i) != f.slope(i + 1);
        if (!kink) continue;
        const std::int64_t value = f.value(i), right = f.right_limit_scaled(i), diag = k - i;
        if (!same_parity(value, right) || !same_parity(right, diag)) c.motzkin = false;
    }
    return c;
}

std::vector<std::string> enumerate_dyck(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::vector<std::string> out;
    std::string word;
    std::function<void(std::int64_t, std::int64_t)> walk = [&](std::int64_t x, std::int64_t y) {
        if (x == k && y == 0) {
            out.push_back(word);
            return;
        }
        if (x < k) {
            word += 'R';
            walk(x + 1, y);
            word.pop_back();
        }
        if (y > 0 && x + y - 1 >= k) {
            word += 'D';
            walk(x, y - 1);
            word.pop_back();
        }
    };
    walk(0, k);
    return out;
}

bool is_dyck_word(std::string_view word, std::int64_t k) {
    std::int64_t x = 0, y = k;
    for (char c : word) {
        if (c == 'R')
            ++x;
        else if (c == 'D')
            --y;
        else
            return false;
        if (x + y < k || x > k || y < 0) return false;
    }
    return x == k && y == 0;
}

std::string continuous_to_dyck(const CombinatorialFn& f) {
    if (!classify(f).continuous) throw std::invalid_argument("continuous_to_dyck needs a continuous function");
    std::string word;
    std::int64_t previous = f.k();
    for (std::int64_t i = 1; i <= f.k(); ++i) {
        word.append(static_cast<std::size_t>(previous - f.value(i)), 'D');
        word += 'R';
        previous = f.value(i);
    }
    word.append(static_cast<std::size_t>(previous), 'D');
    return word;
}

std::vector<Waterfall> enumerate_waterfalls(std::int64_t k, std::int64_t cap) {
    if (k > cap) throw std::length_error("enumerate_waterfalls: k exceeds cap " + std::to_string(cap));
    struct Run {
        std::size_t begin;  // index of the top segment in the word
        std::size_t length;
        std::size_t free;   // segments that may be blue
    };
    std::vector<Waterfall> out;
    for (const auto& word : enumerate_dyck(k)) {
        std::vector<Run> runs;
        std::int64_t x = 0, y = k;
        for (std::size_t s = 0; s < word.size();) {
            if (word[s] == 'R') {
                ++x;
                ++s;
                continue;
            }
            std::size_t e = s;
            while (e < word.size() && word[e] == 'D') ++e;
            const auto length = e - s;
            y -= static_cast<std::int64_t>(length);
            std::size_t free = 0;
            if (x < k) free = length - (x + y == k ? 1 : 0);
            runs.push_back({s, length, free});
            s = e;
        }
        Waterfall w{word, std::vector<SegmentColor>(word.size(), SegmentColor::blue)};
        std::function<void(std::size_t)> choose = [&](std::size_t r) {
            if (r == runs.size()) {
                out.push_back(w);
                return;
            }
            const auto& run = runs[r];
            for (std::size_t blue = 0; blue <= run.free; ++blue) {
                for (std::size_t j = 0; j < run.length; ++j)
                    w.colors[run.begin + j] = j < blue ? SegmentColor::blue : SegmentColor::green;
                choose(r + 1);
            }
        };
        choose(0);
    }
    return out;
}

bool is_valid_waterfall(const Waterfall& w, std::int64_t k) {
    if (!is_dyck_word(w.base, k) || w.colors.size() != w.base.size()) return false;
    std::int64_t x = 0, y = k;
    for (std::size_t s = 0; s < w.base.size(); ++s) {
        const auto color = w.colors[s];
        if (w.base[s] == 'R') {
            if (color != SegmentColor::blue) return false;
            ++x;
            continue;
        }
        const bool on_last_column = x == k;
        const bool touches_diagonal = x + y == k || x + y - 1 == k;
        if ((on_last_column || touches_diagonal) && color != SegmentColor::green) return false;
        const bool has_segment_above = s > 0 && w.base[s - 1] == 'D';
        if (has_segment_above && color == SegmentColor::blue && w.colors[s - 1] != SegmentColor::blue) return false;
        --y;
    }
    return true;
}

std::int64_t dyck_weight(std::string_view word, std::int64_t k) {
    if (!is_dyck_word(word, k)) throw std::invalid_argument("not a Dyck word of size k");
    std::vector<std::int64_t> above(static_cast<std::size_t>(k + 1), 0);
    std::int64_t x = 0, y = k;
    auto record = [&] {
        if (x + y > k) ++above[static_cast<std::size_t>(x)];
    };
    record();
    for (char c : word) {
        if (c == 'R')
            ++x;
        else
            --y;
        record();
    }
    std::int64_t weight = 1;
    for (std::int64_t i = 1; i <= k - 1; ++i) weight *= above[static_cast<std::size_t>(i)];
    return weight;
}

BigInt a006013(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    return binomial(3 * k - 2, k - 1) / k;
}

BigInt motzkin_number(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("negative index");
    std::vector<BigInt> m{1, 1};
    for (std::int64_t j = 2; j <= n; ++j) {
        BigInt next = m[j - 1];
        for (std::int64_t i = 0; i <= j - 2; ++i) next += m[i] * m[j - 2 - i];
        m.push_back(next);
    }
    return m[static_cast<std::size_t>(n)];
}

BigInt schroder_number(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("negative index");
    std::vector<BigInt> r{1};
    for (std::int64_t j = 1; j <= n; ++j) {
        BigInt next = r[j - 1];
        for (std::int64_t i = 0; i <= j - 1; ++i) next += r[i] * r[j - 1 - i];
        r.push_back(next);
    }
    return r[static_cast<std::size_t>(n)];
}

}  // namespace rooks
