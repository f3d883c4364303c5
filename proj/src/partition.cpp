#include "rooks/partition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rooks {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void require_B_n(const Partition& lambda) {
    if (!in_B_n(lambda))
        throw std::invalid_argument("partition " + lambda.to_string() +
                                    " is not in B_n (need n parts with largest part n)");
}

void require_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap)
        throw std::length_error(std::string(what) + ": size " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
}

}  // namespace

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<std::int64_t> parts;
    std::string s(text);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty part in partition text '" + s + "'");
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition text '" + s + "'");
        }
        if (used != item.size()) throw std::invalid_argument("malformed partition text '" + s + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition text");
    return Partition(std::move(parts));
}

std::int64_t Partition::box_count() const {
    std::int64_t total = 0;
    for (auto p : parts_) total += p;
    return total;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool in_B_n(const Partition& lambda) {
    return !lambda.empty() && lambda.largest() == static_cast<std::int64_t>(lambda.size());
}

bool in_D_n(const Partition& lambda) {
    if (!in_B_n(lambda)) return false;
    const auto n = static_cast<std::int64_t>(lambda.size());
    for (std::int64_t i = 1; i <= n; ++i)
        if (lambda[i] < n + 1 - i) return false;
    return true;
}

bool is_valid_placement(const Partition& lambda, const RookPlacement& p) {
    const std::size_t n = lambda.size();
    if (p.cols.size() != n) return false;
    std::vector<bool> used(n + 1, false);
    for (std::size_t r = 1; r <= n; ++r) {
        auto c = p.cols[r - 1];
        if (c < 1 || c > static_cast<std::int64_t>(n) || used[c]) return false;
        if (c > lambda.row_length(r)) return false;
        used[c] = true;
    }
    return true;
}

BigInt count_rook_placements(const Partition& lambda) {
    require_B_n(lambda);
    const auto n = static_cast<std::int64_t>(lambda.size());
    BigInt count = 1;
    for (std::int64_t i = 1; i <= n; ++i) {
        std::int64_t factor = lambda[i] - (n - i);
        if (factor <= 0) return 0;
        count *= BigInt(static_cast<long>(factor));
    }
    return count;
}

BigInt count_rook_placements_dilated(const Partition& lambda, std::int64_t m) {
    require_B_n(lambda);
    if (m < 1) throw std::invalid_argument("dilation factor must be positive");
    const auto n = static_cast<std::int64_t>(lambda.size());
    BigInt fm = factorial(m);
    BigInt count = 1;
    for (std::int64_t i = 1; i <= n; ++i) count *= fm * binomial(m * (lambda[i] - (n - i)), m);
    return count;
}

double log_count_rook_placements(const Partition& lambda) {
    require_B_n(lambda);
    const auto n = static_cast<std::int64_t>(lambda.size());
    CompensatedSum sum;
    for (std::int64_t i = 1; i <= n; ++i) {
        std::int64_t factor = lambda[i] - (n - i);
        if (factor <= 0)
            throw std::domain_error("log of zero count: shape " + lambda.to_string() + " has no placements");
        sum.add(std::log(static_cast<double>(factor)));
    }
    return sum.value();
}

void for_each_rook_placement(const Partition& lambda,
                             const std::function<void(const RookPlacement&)>& visit,
                             std::size_t cap) {
    const std::size_t n = lambda.size();
    require_cap(n, cap, "brute_force_rook_placements");
    if (!lambda.empty() && lambda.largest() > static_cast<std::int64_t>(n))
        throw std::invalid_argument("shape wider than its row count");
    RookPlacement current{std::vector<std::int64_t>(n, 0)};
    std::vector<bool> used(n + 1, false);
    std::function<void(std::size_t)> place = [&](std::size_t row) {
        if (row > n) {
            visit(current);
            return;
        }
        for (std::int64_t c = 1; c <= lambda.row_length(row); ++c) {
            if (used[c]) continue;
            used[c] = true;
            current.cols[row - 1] = c;
            place(row + 1);
            used[c] = false;
        }
    };
    if (n > 0) place(1);
}

std::vector<RookPlacement> brute_force_rook_placements(const Partition& lambda, std::size_t cap) {
    std::vector<RookPlacement> out;
    for_each_rook_placement(lambda, [&](const RookPlacement& p) { out.push_back(p); }, cap);
    return out;
}

Partition dilate(const Partition& lambda, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("dilation factor must be positive");
    std::vector<std::int64_t> parts;
    parts.reserve(lambda.size() * static_cast<std::size_t>(m));
    for (auto p : lambda.parts())
        for (std::int64_t r = 0; r < m; ++r) parts.push_back(m * p);
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    std::vector<std::int64_t> parts;
    for (std::int64_t c = 1; c <= lambda.largest(); ++c) {
        std::int64_t height = 0;
        for (auto p : lambda.parts())
            if (p >= c) ++height;
        parts.push_back(height);
    }
    return Partition(std::move(parts));
}

namespace {

void enumerate_shapes(std::size_t n, bool dyck_only, const std::function<void(const Partition&)>& visit) {
    std::vector<std::int64_t> parts(n, 0);
    const auto nn = static_cast<std::int64_t>(n);
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == n) {
            visit(Partition(parts));
            return;
        }
        std::int64_t hi = i == 0 ? nn : parts[i - 1];
        std::int64_t lo = i == 0 ? nn : 1;
        if (dyck_only) lo = std::max<std::int64_t>(lo, nn - static_cast<std::int64_t>(i));
        for (std::int64_t v = hi; v >= lo; --v) {
            parts[i] = v;
            fill(i + 1);
        }
    };
    if (n > 0) fill(0);
}

}  // namespace

void for_each_B_n(std::size_t n, const std::function<void(const Partition&)>& visit, std::size_t cap) {
    require_cap(n, cap, "enumerate_B_n");
    enumerate_shapes(n, false, visit);
}

void for_each_D_n(std::size_t n, const std::function<void(const Partition&)>& visit, std::size_t cap) {
    require_cap(n, cap, "enumerate_D_n");
    enumerate_shapes(n, true, visit);
}

std::vector<Partition> enumerate_B_n(std::size_t n, std::size_t cap) {
    std::vector<Partition> out;
    for_each_B_n(n, [&](const Partition& p) { out.push_back(p); }, cap);
    return out;
}

std::vector<Partition> enumerate_D_n(std::size_t n, std::size_t cap) {
    std::vector<Partition> out;
    for_each_D_n(n, [&](const Partition& p) { out.push_back(p); }, cap);
    return out;
}

std::string dyck_word(const Partition& lambda) {
    std::string word;
    const std::size_t n = lambda.size();
    std::int64_t x = 0;
    for (std::size_t r = n; r >= 1; --r) {
        for (; x < lambda[r]; ++x) word += 'R';
        word += 'D';
    }
    return word;
}

Partition partition_from_dyck_word(std::string_view word) {
    std::vector<std::int64_t> rows_from_top;
    std::int64_t x = 0;
    for (char c : word) {
        if (c == 'R')
            ++x;
        else if (c == 'D')
            rows_from_top.push_back(x);
        else
            throw std::invalid_argument("dyck word may only contain R and D");
    }
    if (rows_from_top.empty() || x != static_cast<std::int64_t>(rows_from_top.size()) || word.back() != 'D')
        throw std::invalid_argument("word does not run from (0,n) to (n,0)");
    std::vector<std::int64_t> parts(rows_from_top.rbegin(), rows_from_top.rend());
    Partition lambda(std::move(parts));
    if (!in_D_n(lambda)) throw std::invalid_argument("word crosses the line X+Y=n");
    return lambda;
}

std::size_t ground_bump_count(const Partition& lambda) {
    if (!in_D_n(lambda)) throw std::invalid_argument("ground bumps need a shape in D_n");
    const auto n = static_cast<std::int64_t>(lambda.size());
    std::size_t bumps = 0;
    for (std::int64_t j = 2; j <= n; ++j)
        if (lambda[j] == n + 1 - j) ++bumps;
    return bumps;
}

std::vector<Partition> ground_bump_decomposition(const Partition& lambda) {
    if (!in_D_n(lambda)) throw std::invalid_argument("ground bump decomposition needs a shape in D_n");
    const auto n = static_cast<std::int64_t>(lambda.size());
    // Heights where the path meets X+Y=n, from the start (y=n) down to the end (y=0).
    std::vector<std::int64_t> heights{n};
    for (std::int64_t j = n; j >= 2; --j)
        if (lambda[j] == n + 1 - j) heights.push_back(j - 1);
    heights.push_back(0);

    std::vector<Partition> components;
    for (std::size_t c = 0; c + 1 < heights.size(); ++c) {
        const std::int64_t top = heights[c], bottom = heights[c + 1];
        const std::int64_t shift = n - top;
        std::vector<std::int64_t> parts;
        for (std::int64_t r = bottom + 1; r <= top; ++r) parts.push_back(lambda[r] - shift);
        components.emplace_back(std::move(parts));
    }
    return components;
}

std::int64_t minimum_run(const Partition& lambda) {
    if (!in_D_n(lambda)) throw std::invalid_argument("minimum run needs a shape in D_n");
    const std::string word = dyck_word(lambda);
    std::int64_t best = static_cast<std::int64_t>(word.size());
    std::int64_t run = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        ++run;
        if (i + 1 == word.size() || word[i + 1] != word[i]) {
            best = std::min(best, run);
            run = 0;
        }
    }
    return best;
}

}  // namespace rooks
