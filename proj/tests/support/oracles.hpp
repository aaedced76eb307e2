#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gromov/metric_space.hpp"

// Brute-force oracles, deliberately independent of the library's search and
// counting paths. Everything here enumerates plainly and compares exactly.

namespace gromov::oracles {

// Pair list of the relation encoded by `mask` over the n_x * n_y grid
// (bit i*n_y+j set <=> pair (i, j) present), sorted.
std::vector<std::pair<int, int>> mask_pairs(std::uint64_t mask, int n_x, int n_y);

bool mask_is_correspondence(std::uint64_t mask, int n_x, int n_y);

// Distortion computed with its own double loop over the pair list.
double pairs_distortion(const std::vector<std::pair<int, int>>& pairs,
                        const FiniteMetricSpace& x, const FiniteMetricSpace& y);

// min over all correspondences (all 2^(n_x*n_y) relations filtered) of the
// distortion. Requires n_x * n_y <= 20 or so to stay sane.
double brute_force_min_distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

// All minimal correspondences by filtering every relation for coverage and
// non-removability of each pair.
std::vector<std::vector<std::pair<int, int>>> brute_force_minimal_correspondences(int n_x, int n_y);

// Plain full-box walk with exact integer comparison z.z * den^2 <= num^2.
std::int64_t naive_ball_count(int n, long long num, long long den);

}  // namespace gromov::oracles
