#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gromov/correspondence.hpp"

namespace gromov {

// How the reported value is known to be optimal (or not).
enum class LowerProof {
  ExhaustedSearch,       // the whole minimal-correspondence tree was explored
  DiameterBound,         // the witness meets the |diam X - diam Y| / 2 lower bound
  CallerBudgetExceeded,  // node budget ran out; value is the best upper bound found
};

const char* to_string(LowerProof proof);

// GH value plus the evidence: the witness correspondence achieving
// 2 * value, and how optimality was established.
struct GHCertificate {
  double value;
  Correspondence witness;
  LowerProof lower_proof;
  std::int64_t nodes_explored;
};

struct SolveOptions {
  // < 0: use default_node_budget().
  std::int64_t node_budget = -1;
};

// Default branch-and-bound budget, honoring GROMOV_LAB_MAX_NODES.
std::int64_t default_node_budget();

// Exact Gromov-Hausdorff distance between finite spaces by branch-and-bound
// over minimal correspondences. Requires size(x) * size(y) <= kMaxSolverCells.
// Among equal-distortion optima the lexicographically smallest witness is
// returned; identical inputs always yield identical certificates.
GHCertificate gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y, SolveOptions opts = {});

// |diam X - diam Y| / 2, the classical lower bound.
double gh_lower_diam(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

// Closed-form distance along the scaling curve t -> tX:
// |t1 - t2| * diam(X) / 2. The solver cross-check lives in the tests.
double gh_scaling_value(const FiniteMetricSpace& x, double t1, double t2);

// Lower bound on the distortion c of any correspondence between
// A' x_l1 X and B x_l1 Y implied by
//   c + 2w/(2n+1) + (2n/(2n+1)) diam Y >= (2n/(2n+1)) t,
// i.e. (2n (t - diam Y) - 2w) / (2n + 1), clamped at 0.
double product_bound_constraint(long long n, double w, double t, double diam_y);

struct TruncationPoint {
  int k;
  GHCertificate cert;
};

// Finite-truncation probe: A_k = {0, gap, ..., (k-1) gap};
// value_k = gh_exact(A_k x_l1 X, A_k x_l1 Y). Throws CapExceededError when a
// k pushes the product past the solver cap.
std::vector<TruncationPoint> truncation_lower_series(double gap, const std::vector<int>& k_list,
                                                     const FiniteMetricSpace& x,
                                                     const FiniteMetricSpace& y,
                                                     SolveOptions opts = {});

// -----------------------------------------------------------------------------
// Certificate text block: value, lower_proof, nodes_explored, then the witness
// in the correspondence file format.
// -----------------------------------------------------------------------------

std::string format_certificate(const GHCertificate& cert);
GHCertificate parse_certificate(std::istream& in);

}  // namespace gromov
