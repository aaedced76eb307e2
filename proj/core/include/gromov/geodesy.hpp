#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gromov/gh_solver.hpp"

namespace gromov {

// One-parameter family of spaces: t -> tX, or t -> A x_l1 (tX).
struct CurveFamily {
  enum class Kind { Scale, ProductScale };

  Kind kind;
  FiniteMetricSpace x;                   // the scaled factor
  std::optional<FiniteMetricSpace> a;    // fixed factor (ProductScale only)

  static CurveFamily scale_family(FiniteMetricSpace x);
  static CurveFamily product_scale_family(FiniteMetricSpace a, FiniteMetricSpace x);
};

std::vector<FiniteMetricSpace> sample_curve(const CurveFamily& family, const std::vector<double>& ts);

enum class DeviationMode { Exact, Sandwich };

struct DeviationRow {
  double s, t;
  double lower, upper;          // diameter bound / explicit-correspondence bound
  std::optional<double> exact;  // gh_exact value (Exact mode only)
  double target;                // speed * |s - t|
  double deviation;             // |exact - target|, or distance from target to [lower, upper]
};

struct DeviationReport {
  double speed;
  std::vector<DeviationRow> rows;  // all pairs s < t in t_list order
  double max_deviation;
  bool exact_fallback;     // Exact was requested but sample sizes forced Sandwich
  bool budget_exhausted;   // some pairwise solve returned CallerBudgetExceeded
};

struct DeviationOptions {
  int threads = 1;
  SolveOptions solve;
  // When Exact mode hits the solver cap: fall back to Sandwich (set by the
  // ProductScale runner) instead of throwing CapExceededError.
  bool fallback_to_sandwich = false;
};

// Measures deviation from constant-speed geodesicity over every sample pair.
// Pairwise values are computed independently (possibly concurrently); rows
// are assembled in (s, t) order, so reports are deterministic.
DeviationReport geodesic_deviation(const std::vector<FiniteMetricSpace>& samples,
                                   const std::vector<double>& ts, double speed, DeviationMode mode,
                                   DeviationOptions opts = {});

// CSV columns: s,t,lower,upper,exact,target,deviation (exact blank in Sandwich mode).
std::string deviation_report_csv(const DeviationReport& report);

}  // namespace gromov
