#pragma once

#include <cstdint>

namespace gromov {

inline constexpr const char* kToolName = "gromov-lab";
inline constexpr const char* kToolVersion = "0.1.0";

// Desk-scale caps. Requests beyond these throw CapExceededError (or
// DimensionCapExceededError) instead of running unbounded.
inline constexpr int kMaxSpaceSize = 512;        // points per FiniteMetricSpace
inline constexpr int kMaxSolverCells = 64;       // n_x * n_y index grid for gh_exact
inline constexpr int kMaxEnumerationCells = 64;  // n_x * n_y for minimal-correspondence streams
inline constexpr int kMaxLatticeDim = 4;
inline constexpr std::int64_t kMaxLatticeWork = 200'000'000;  // box columns visited per ball_count

// Branch-and-bound node budget when the caller does not pass one.
// Overridable through the environment variable below.
inline constexpr std::int64_t kDefaultNodeBudget = 20'000'000;
inline constexpr const char* kNodeBudgetEnvVar = "GROMOV_LAB_MAX_NODES";

// Absolute tolerance for metric validity and isometry comparisons.
inline constexpr double kEps = 1e-9;

// Exact rational radii are kept small enough that p^2 and q^2 products fit
// comfortably in 128-bit intermediates.
inline constexpr long long kMaxRationalNum = 2'000'000'000LL;
inline constexpr long long kMaxRationalDen = 1'000'000LL;

}  // namespace gromov
