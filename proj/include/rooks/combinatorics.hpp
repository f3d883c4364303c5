#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rooks/plfn.hpp"
#include "rooks/rational.hpp"

namespace rooks {

/// (y_1, ..., y_{2k-3}) with y_1 + ... + y_m <= ceil(m/2) for every prefix.
struct DropTuple {
    std::int64_t k = 0;
    std::vector<std::int64_t> y;
    bool operator==(const DropTuple&) const = default;
};

bool is_drop_tuple(const DropTuple& t);

/// In-piece drops at odd positions, jumps at even positions. Requires k >= 2.
DropTuple to_tuple(const CombinatorialFn& f);
CombinatorialFn from_tuple(const DropTuple& t);

/// E^2 N^{y_1} E N^{y_2} ... E N^{y_{2k-3}} E N^{k-1-sum y}, over {'E','N'}.
std::string tuple_to_gpath(const DropTuple& t);
DropTuple gpath_to_tuple(std::string_view word, std::int64_t k);
/// Lattice path (0,0) -> (2k-1,k-1) inside {x >= 2y}.
bool is_gpath(std::string_view word, std::int64_t k);

/// A step of a path from (0,k) to (k,0): (1,-l) with l >= 0, or (0,-1).
struct PathStep {
    std::int64_t dx = 0;
    std::int64_t dy = 0;
    bool operator==(const PathStep&) const = default;
};
using FunctionPath = std::vector<PathStep>;

/// Scaled graph of f with vertical segments filling every jump, ending with
/// the drop from (k, k f(1)) to (k, 0).
FunctionPath path_of(const CombinatorialFn& f);
/// Membership in the path class: endpoints (0,k) and (k,0), legal steps,
/// and no interior point on X+Y = k.
bool is_function_path(const FunctionPath& path, std::int64_t k);
/// Throws std::invalid_argument when the path is not in the class.
CombinatorialFn func_of(const FunctionPath& path, std::int64_t k);

inline constexpr std::int64_t kFunctionEnumerationCap = 9;
void for_each_drop_tuple(std::int64_t k, const std::function<void(const DropTuple&)>& visit);
/// All members of the class on the 1/k grid, in drop-tuple order.
void for_each_combinatorial_fn(std::int64_t k, const std::function<void(const CombinatorialFn&)>& visit,
                               std::int64_t cap = kFunctionEnumerationCap);
std::vector<CombinatorialFn> enumerate_Pk(std::int64_t k, std::int64_t cap = kFunctionEnumerationCap);

struct FunctionClasses {
    bool piecewise_constant = false;
    bool continuous = false;
    bool motzkin = false;
    bool schroder = false;
};
/// Each predicate is evaluated from the raw (values, slopes) data.
FunctionClasses classify(const CombinatorialFn& f);

/// Dyck words over {'R','D'} from (0,k) to (k,0), weakly above X+Y = k.
std::vector<std::string> enumerate_dyck(std::int64_t k);
bool is_dyck_word(std::string_view word, std::int64_t k);
/// Replaces each unit piece of a continuous f by a down-then-right staircase.
std::string continuous_to_dyck(const CombinatorialFn& f);

enum class SegmentColor : char { green = 'G', blue = 'B' };

struct Waterfall {
    std::string base;                  ///< Dyck word
    std::vector<SegmentColor> colors;  ///< one per unit step of base
};

inline constexpr std::int64_t kWaterfallCap = 8;
std::vector<Waterfall> enumerate_waterfalls(std::int64_t k, std::int64_t cap = kWaterfallCap);
/// Checks the four coloring rules directly on the coordinates.
bool is_valid_waterfall(const Waterfall& w, std::int64_t k);
/// prod_{i=1}^{k-1} #{ j : i + j > k, (i,j) on the path }.
std::int64_t dyck_weight(std::string_view word, std::int64_t k);

/// (1/k) C(3k-2, k-1).
BigInt a006013(std::int64_t k);
BigInt motzkin_number(std::int64_t n);
/// Large Schroder numbers 1, 2, 6, 22, 90, ...
BigInt schroder_number(std::int64_t n);

}  // namespace rooks
