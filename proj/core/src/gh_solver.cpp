#include "gromov/gh_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <sstream>

#include "gromov/errors.hpp"
#include "gromov/limits.hpp"
#include "gromov/textio.hpp"

namespace gromov {

const char* to_string(LowerProof proof) {
  switch (proof) {
    case LowerProof::ExhaustedSearch: return "ExhaustedSearch";
    case LowerProof::DiameterBound: return "DiameterBound";
    case LowerProof::CallerBudgetExceeded: return "CallerBudgetExceeded";
  }
  return "?";
}

std::int64_t default_node_budget() {
  if (const char* env = std::getenv(kNodeBudgetEnvVar)) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return v;
  }
  return kDefaultNodeBudget;
}

double gh_lower_diam(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  return std::abs(x.diameter() - y.diameter()) / 2.0;
}

double gh_scaling_value(const FiniteMetricSpace& x, double t1, double t2) {
  if (t1 < 0.0) throw NegativeScaleError(t1);
  if (t2 < 0.0) throw NegativeScaleError(t2);
  return std::abs(t1 - t2) * x.diameter() / 2.0;
}

double product_bound_constraint(long long n, double w, double t, double diam_y) {
  if (n < 1) throw ParameterError("ParameterError n must be >= 1");
  if (w < 0.0 || t < 0.0 || diam_y < 0.0) {
    throw ParameterError("ParameterError arguments must be non-negative");
  }
  const double two_n = 2.0 * static_cast<double>(n);
  const double bound = (two_n * (t - diam_y) - 2.0 * w) / (two_n + 1.0);
  return std::max(0.0, bound);
}

// --- branch and bound --------------------------------------------------------
//
// Search space: minimal correspondences, via the same subset discipline as
// for_each_minimal_correspondence (multi-partner X points own their Y points
// exclusively), explored in lexicographic pair-list order. Pruning drops a
// branch only when its partial distortion strictly exceeds the incumbent, so
// every optimal correspondence is reached; the first optimum visited is the
// lexicographically smallest one. Search stops early when a search-found
// witness meets the diameter lower bound.

namespace {

struct Incumbent {
  double dis;
  std::vector<std::pair<int, int>> pairs;
  bool from_search = false;
};

struct BnbState {
  const FiniteMetricSpace* x;
  const FiniteMetricSpace* y;
  int n_x, n_y;
  double floor_dis;

  std::vector<std::pair<int, int>> partial;
  std::vector<double> max_stack;  // running distortion max per depth
  std::vector<int> cover;
  std::vector<char> closed;
  int covered = 0;
  int shareable = 0;

  Incumbent best;
  std::int64_t nodes = 0;
  std::int64_t budget = 0;
  bool out_of_budget = false;
  bool done = false;
};

double current_max(const BnbState& s) { return s.max_stack.empty() ? 0.0 : s.max_stack.back(); }

bool feasible_tail(const BnbState& s, int next_x) {
  const int remaining = s.n_x - next_x;
  const int unused = s.n_y - s.covered;
  if (remaining == 0) return unused == 0;
  return unused > 0 || s.shareable > 0;
}

void assign_from(BnbState& s, int xi);

void extend_subset(BnbState& s, int xi, int min_j, int subset_size, int first_j) {
  for (int j = min_j; j < s.n_y && !s.done && !s.out_of_budget; ++j) {
    if (s.closed[j]) continue;
    if (subset_size >= 1) {
      if (s.cover[j] != 0) continue;
      if (s.cover[first_j] != 1) continue;
    }

    // Distortion of the new pair against everything already placed.
    double new_max = current_max(s);
    bool pruned = false;
    for (const auto& [xa, ja] : s.partial) {
      const double gap = std::abs(s.x->at(xi, xa) - s.y->at(j, ja));
      if (gap > new_max) {
        new_max = gap;
        if (new_max > s.best.dis) {
          pruned = true;
          break;
        }
      }
    }
    if (pruned) continue;

    if (s.nodes == s.budget) {
      s.out_of_budget = true;
      return;
    }
    ++s.nodes;

    s.partial.emplace_back(xi, j);
    s.max_stack.push_back(new_max);
    if (s.cover[j]++ == 0) {
      ++s.covered;
      ++s.shareable;
    }
    bool closed_first = false, closed_j = false;
    if (subset_size + 1 >= 2) {
      if (!s.closed[j]) {
        s.closed[j] = 1;
        --s.shareable;
        closed_j = true;
      }
      if (subset_size + 1 == 2 && !s.closed[first_j]) {
        s.closed[first_j] = 1;
        --s.shareable;
        closed_first = true;
      }
    }

    extend_subset(s, xi, j + 1, subset_size + 1, subset_size == 0 ? j : first_j);

    if (closed_j) {
      s.closed[j] = 0;
      ++s.shareable;
    }
    if (closed_first) {
      s.closed[first_j] = 0;
      ++s.shareable;
    }
    if (--s.cover[j] == 0) {
      --s.covered;
      --s.shareable;
    }
    s.max_stack.pop_back();
    s.partial.pop_back();
  }
  if (s.done || s.out_of_budget || subset_size == 0) return;
  if (feasible_tail(s, xi + 1)) assign_from(s, xi + 1);
}

void assign_from(BnbState& s, int xi) {
  if (s.done || s.out_of_budget) return;
  if (xi == s.n_x) {
    if (s.covered != s.n_y) return;
    const double dis = current_max(s);
    if (dis < s.best.dis || (dis == s.best.dis && !s.best.from_search)) {
      s.best.dis = dis;
      s.best.pairs = s.partial;
      s.best.from_search = true;
      if (s.best.dis <= s.floor_dis) s.done = true;
    }
    return;
  }
  extend_subset(s, xi, 0, 0, -1);
}

// Deterministic warm start: the full correspondence, and a greedy one-pass
// assignment padded to coverage. Only the value seeds the pruning bound; the
// returned witness is replaced by the first search-found optimum.
Incumbent initial_incumbent(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const int n_x = x.size();
  const int n_y = y.size();

  Correspondence full = Correspondence::full(n_x, n_y);
  Incumbent best{distortion(full, x, y), full.pairs(), false};

  // Greedy: each X point takes the Y point (uncovered ones first) with the
  // smallest incremental distortion, then uncovered Y points are attached to
  // their best X point.
  std::vector<std::pair<int, int>> pairs;
  std::vector<char> used_y(n_y, 0);
  auto incremental = [&](int xi, int j) {
    double m = 0.0;
    for (const auto& [xa, ja] : pairs) {
      m = std::max(m, std::abs(x.at(xi, xa) - y.at(j, ja)));
    }
    return m;
  };
  for (int i = 0; i < n_x; ++i) {
    int best_j = -1;
    double best_gap = 0.0;
    bool any_unused = false;
    for (int j = 0; j < n_y; ++j) any_unused |= !used_y[j];
    for (int j = 0; j < n_y; ++j) {
      if (any_unused && used_y[j]) continue;
      const double gap = incremental(i, j);
      if (best_j < 0 || gap < best_gap) {
        best_j = j;
        best_gap = gap;
      }
    }
    pairs.emplace_back(i, best_j);
    used_y[best_j] = 1;
  }
  for (int j = 0; j < n_y; ++j) {
    if (used_y[j]) continue;
    int best_i = 0;
    double best_gap = incremental(0, j);
    for (int i = 1; i < n_x; ++i) {
      const double gap = incremental(i, j);
      if (gap < best_gap) {
        best_gap = gap;
        best_i = i;
      }
    }
    pairs.emplace_back(best_i, j);
  }
  Correspondence greedy{Relation(n_x, n_y, std::move(pairs))};
  const double greedy_dis = distortion(greedy, x, y);
  if (greedy_dis < best.dis) best = Incumbent{greedy_dis, greedy.pairs(), false};
  return best;
}

}  // namespace

GHCertificate gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y, SolveOptions opts) {
  const int n_x = x.size();
  const int n_y = y.size();
  if (static_cast<long long>(n_x) * n_y > kMaxSolverCells) {
    throw CapExceededError("CapExceeded solver grid " + std::to_string(n_x) + "x" +
                           std::to_string(n_y) + " (cap " + std::to_string(kMaxSolverCells) +
                           " cells)");
  }

  BnbState s;
  s.x = &x;
  s.y = &y;
  s.n_x = n_x;
  s.n_y = n_y;
  s.floor_dis = std::abs(x.diameter() - y.diameter());
  s.cover.assign(n_y, 0);
  s.closed.assign(n_y, 0);
  s.best = initial_incumbent(x, y);
  s.budget = opts.node_budget >= 0 ? opts.node_budget : default_node_budget();

  assign_from(s, 0);

  LowerProof proof = LowerProof::ExhaustedSearch;
  if (s.out_of_budget) {
    proof = LowerProof::CallerBudgetExceeded;
  } else if (s.done) {
    proof = LowerProof::DiameterBound;
  }
  Correspondence witness{Relation(n_x, n_y, s.best.pairs)};
  return GHCertificate{s.best.dis / 2.0, std::move(witness), proof, s.nodes};
}

std::vector<TruncationPoint> truncation_lower_series(double gap, const std::vector<int>& k_list,
                                                     const FiniteMetricSpace& x,
                                                     const FiniteMetricSpace& y,
                                                     SolveOptions opts) {
  if (!(gap > 0.0)) throw ParameterError("ParameterError gap must be positive");
  std::vector<TruncationPoint> out;
  out.reserve(k_list.size());
  for (int k : k_list) {
    if (k < 1) throw ParameterError("ParameterError k must be >= 1");
    const long long cells =
        static_cast<long long>(k) * x.size() * static_cast<long long>(k) * y.size();
    if (cells > kMaxSolverCells) {
      throw CapExceededError("CapExceeded truncation k=" + std::to_string(k) + " needs " +
                             std::to_string(cells) + " solver cells");
    }
    std::vector<double> anchor;
    anchor.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) anchor.push_back(gap * i);
    const FiniteMetricSpace a_k = from_reals(PointSet1D::from(std::move(anchor)));
    out.push_back(TruncationPoint{k, gh_exact(l1_product(a_k, x), l1_product(a_k, y), opts)});
  }
  return out;
}

// --- certificate io ----------------------------------------------------------

std::string format_certificate(const GHCertificate& cert) {
  std::string out;
  out += "value " + format_real(cert.value) + "\n";
  out += "lower_proof " + std::string(to_string(cert.lower_proof)) + "\n";
  out += "nodes_explored " + std::to_string(cert.nodes_explored) + "\n";
  out += format_correspondence(cert.witness);
  return out;
}

GHCertificate parse_certificate(std::istream& in) {
  std::string key;
  double value = 0.0;
  std::string proof_name;
  std::int64_t nodes = 0;
  if (!(in >> key >> value) || key != "value") throw ParseError("ParseError expected 'value'");
  if (!(in >> key >> proof_name) || key != "lower_proof") {
    throw ParseError("ParseError expected 'lower_proof'");
  }
  if (!(in >> key >> nodes) || key != "nodes_explored") {
    throw ParseError("ParseError expected 'nodes_explored'");
  }
  LowerProof proof;
  if (proof_name == "ExhaustedSearch") {
    proof = LowerProof::ExhaustedSearch;
  } else if (proof_name == "DiameterBound") {
    proof = LowerProof::DiameterBound;
  } else if (proof_name == "CallerBudgetExceeded") {
    proof = LowerProof::CallerBudgetExceeded;
  } else {
    throw ParseError("ParseError unknown lower_proof '" + proof_name + "'");
  }
  Correspondence witness = parse_correspondence(in);
  return GHCertificate{value, std::move(witness), proof, nodes};
}

}  // namespace gromov
