#pragma once

#include <cstdint>

#include "gromov/correspondence.hpp"
#include "gromov/metric_space.hpp"

namespace gromov {

// The reproducibility generator: a plain 64-bit linear congruential generator
// (Knuth's MMIX constants, documented in the README) so reruns in any
// language can match draw for draw. Modulo reduction is used as-is; the bias
// is irrelevant at these ranges and keeps the derivation trivial.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Random spaces live on the dyadic grid k/1024: any symmetric matrix with
// entries in [lo, hi] where hi <= 2*lo satisfies the triangle inequality, and
// dyadic entries keep sums, differences and halving exact in binary floating
// point. Draw order: entries (i, j) for i < j, row-major.
FiniteMetricSpace random_space(Lcg64& rng, int n, int lo_1024 = 1024, int hi_1024 = 2048);

// Adds an independent dyadic offset in [-amp, +amp]/1024 to every
// off-diagonal entry. The caller picks base range and amplitude so the result
// stays a metric; the output is re-validated.
FiniteMetricSpace perturb_space(Lcg64& rng, const FiniteMetricSpace& x, int amp_1024 = 64);

// Random correspondence: one random partner per left point, one per right
// point, de-duplicated.
Correspondence random_correspondence(Lcg64& rng, int n_x, int n_y);

}  // namespace gromov
