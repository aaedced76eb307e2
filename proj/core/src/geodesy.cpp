#include "gromov/geodesy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "gromov/errors.hpp"
#include "gromov/limits.hpp"
#include "gromov/parallel.hpp"
#include "gromov/textio.hpp"

namespace gromov {

CurveFamily CurveFamily::scale_family(FiniteMetricSpace x) {
  return CurveFamily{Kind::Scale, std::move(x), std::nullopt};
}

CurveFamily CurveFamily::product_scale_family(FiniteMetricSpace a, FiniteMetricSpace x) {
  return CurveFamily{Kind::ProductScale, std::move(x), std::move(a)};
}

std::vector<FiniteMetricSpace> sample_curve(const CurveFamily& family,
                                            const std::vector<double>& ts) {
  std::vector<FiniteMetricSpace> samples;
  samples.reserve(ts.size());
  for (double t : ts) {
    FiniteMetricSpace scaled = scale(family.x, t);
    if (family.kind == CurveFamily::Kind::ProductScale) {
      samples.push_back(l1_product(*family.a, scaled));
    } else {
      samples.push_back(std::move(scaled));
    }
  }
  return samples;
}

DeviationReport geodesic_deviation(const std::vector<FiniteMetricSpace>& samples,
                                   const std::vector<double>& ts, double speed, DeviationMode mode,
                                   DeviationOptions opts) {
  if (samples.size() != ts.size()) {
    throw SizeMismatchError("SizeMismatch samples vs t_list: " + std::to_string(samples.size()) +
                            " vs " + std::to_string(ts.size()));
  }

  DeviationMode effective = mode;
  bool fallback = false;
  if (mode == DeviationMode::Exact) {
    for (const FiniteMetricSpace& s : samples) {
      if (static_cast<long long>(s.size()) * s.size() > kMaxSolverCells) {
        if (!opts.fallback_to_sandwich) {
          throw CapExceededError("CapExceeded sample with " + std::to_string(s.size()) +
                                 " points in Exact mode");
        }
        effective = DeviationMode::Sandwich;
        fallback = true;
        break;
      }
    }
  }

  // All (s, t) pairs with s earlier than t in the sample list.
  std::vector<std::pair<int, int>> index_pairs;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      index_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }

  std::vector<DeviationRow> rows(index_pairs.size());
  std::atomic<bool> budget_exhausted{false};
  parallel_chunks(static_cast<std::int64_t>(index_pairs.size()), opts.threads,
                  [&](std::int64_t begin, std::int64_t end) {
                    for (std::int64_t p = begin; p < end; ++p) {
                      const auto [i, j] = index_pairs[static_cast<std::size_t>(p)];
                      const FiniteMetricSpace& a = samples[i];
                      const FiniteMetricSpace& b = samples[j];
                      DeviationRow row;
                      row.s = ts[i];
                      row.t = ts[j];
                      row.target = speed * std::abs(ts[i] - ts[j]);
                      row.lower = gh_lower_diam(a, b);
                      // Explicit-correspondence upper bound: the identity on
                      // aligned samples, the full correspondence otherwise.
                      if (a.size() == b.size()) {
                        row.upper = distortion(Correspondence::identity(a.size()), a, b) / 2.0;
                      } else {
                        row.upper = distortion(Correspondence::full(a.size(), b.size()), a, b) / 2.0;
                      }
                      if (effective == DeviationMode::Exact) {
                        const GHCertificate cert = gh_exact(a, b, opts.solve);
                        if (cert.lower_proof == LowerProof::CallerBudgetExceeded) {
                          budget_exhausted.store(true, std::memory_order_relaxed);
                        }
                        row.exact = cert.value;
                        row.deviation = std::abs(*row.exact - row.target);
                      } else {
                        row.exact = std::nullopt;
                        row.deviation = std::max({row.lower - row.target, row.target - row.upper, 0.0});
                      }
                      rows[static_cast<std::size_t>(p)] = row;
                    }
                  });

  double max_dev = 0.0;
  for (const DeviationRow& row : rows) max_dev = std::max(max_dev, row.deviation);
  return DeviationReport{speed, std::move(rows), max_dev, fallback, budget_exhausted.load()};
}

std::string deviation_report_csv(const DeviationReport& report) {
  std::string out = "s,t,lower,upper,exact,target,deviation\n";
  for (const DeviationRow& row : report.rows) {
    out += format_real(row.s);
    out += ',';
    out += format_real(row.t);
    out += ',';
    out += format_real(row.lower);
    out += ',';
    out += format_real(row.upper);
    out += ',';
    if (row.exact) out += format_real(*row.exact);
    out += ',';
    out += format_real(row.target);
    out += ',';
    out += format_real(row.deviation);
    out += '\n';
  }
  return out;
}

}  // namespace gromov
