#include "gromov/rng.hpp"

#include "gromov/errors.hpp"

namespace gromov {

FiniteMetricSpace random_space(Lcg64& rng, int n, int lo_1024, int hi_1024) {
  if (n < 1) throw ParameterError("ParameterError space size must be >= 1");
  if (lo_1024 < 0 || hi_1024 < lo_1024 || hi_1024 > 2 * lo_1024) {
    throw ParameterError("ParameterError dyadic range must satisfy 0 <= lo <= hi <= 2*lo");
  }
  std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
  const std::uint64_t span = static_cast<std::uint64_t>(hi_1024 - lo_1024) + 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = static_cast<double>(lo_1024 + rng.next_below(span)) / 1024.0;
      dist[static_cast<std::size_t>(i) * n + j] = d;
      dist[static_cast<std::size_t>(j) * n + i] = d;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  // Entries in [lo, hi] with hi <= 2*lo satisfy the triangle inequality.
  return FiniteMetricSpace::unchecked(std::move(labels), std::move(dist));
}

FiniteMetricSpace perturb_space(Lcg64& rng, const FiniteMetricSpace& x, int amp_1024) {
  if (amp_1024 < 0) throw ParameterError("ParameterError negative amplitude");
  const int n = x.size();
  std::vector<double> dist = x.dist();
  const std::uint64_t span = 2ULL * amp_1024 + 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double delta =
          (static_cast<double>(rng.next_below(span)) - amp_1024) / 1024.0;
      dist[static_cast<std::size_t>(i) * n + j] += delta;
      dist[static_cast<std::size_t>(j) * n + i] += delta;
    }
  }
  return validate_metric(dist, x.labels());
}

Correspondence random_correspondence(Lcg64& rng, int n_x, int n_y) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n_x) + n_y);
  for (int i = 0; i < n_x; ++i) {
    pairs.emplace_back(i, static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_y))));
  }
  for (int j = 0; j < n_y; ++j) {
    pairs.emplace_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_x))), j);
  }
  return Correspondence(Relation(n_x, n_y, std::move(pairs)));
}

}  // namespace gromov
