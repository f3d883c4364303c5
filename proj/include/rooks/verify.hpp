#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rooks {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  ///< measured values, one fact per line
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();
/// Runs the criteria of one suite; throws std::invalid_argument on an unknown name.
std::vector<CriterionResult> run_suite(std::string_view suite, const VerifyOptions& options = {});
CriterionResult run_criterion(int id, const VerifyOptions& options = {});

inline constexpr int kCriterionCount = 12;

/// Pinned constants of the numeric criteria.
inline constexpr double kResidualScaleBound = 1.0;     ///< max N |residual| over the grid
inline constexpr double kResidualFinalBound = 1e-3;    ///< |residual| at N = 3 * 2^10
inline constexpr double kConstantsTolerance = 1e-12;
inline constexpr double kRangeTolerance = 1e-12;
inline constexpr double kBumpExponentTolerance = 0.02;
inline constexpr double kChiSquareAlpha = 1e-3;
inline constexpr double kLimitShapeEps = 0.05;
inline constexpr double kLimitShapeFraction = 0.95;
inline constexpr double kMeanRateBound = 2.0;  ///< max N |E(xi~) - m|; (3N+1)/(2N) bounds the box case

}  // namespace rooks
