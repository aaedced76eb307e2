#include "gromov/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

#include "gromov/errors.hpp"
#include "gromov/limits.hpp"
#include "gromov/textio.hpp"

namespace gromov {

Relation::Relation(int n_x, int n_y, std::vector<std::pair<int, int>> pairs)
    : n_x_(n_x), n_y_(n_y), pairs_(std::move(pairs)) {
  if (n_x_ < 1 || n_y_ < 1) throw ParameterError("ParameterError relation sides must be nonempty");
  if (pairs_.empty()) throw ParameterError("ParameterError relation must contain a pair");
  for (const auto& [i, j] : pairs_) {
    if (i < 0 || i >= n_x_ || j < 0 || j >= n_y_) {
      throw IndexOutOfRangeError("IndexOutOfRange (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") for sizes (" + std::to_string(n_x_) +
                                 ", " + std::to_string(n_y_) + ")");
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Correspondence::Correspondence(Relation rel)
    : rel_(std::move(rel)), cover_x_(rel_.n_x(), 0), cover_y_(rel_.n_y(), 0) {
  for (const auto& [i, j] : rel_.pairs()) {
    ++cover_x_[i];
    ++cover_y_[j];
  }
  for (int i = 0; i < rel_.n_x(); ++i) {
    if (cover_x_[i] == 0) {
      throw ParameterError("ParameterError not a correspondence: X index " + std::to_string(i) +
                           " uncovered");
    }
  }
  for (int j = 0; j < rel_.n_y(); ++j) {
    if (cover_y_[j] == 0) {
      throw ParameterError("ParameterError not a correspondence: Y index " + std::to_string(j) +
                           " uncovered");
    }
  }
}

bool Correspondence::removable(int pair_index) const {
  const auto& [i, j] = rel_.pairs()[pair_index];
  return cover_x_[i] > 1 && cover_y_[j] > 1;
}

bool Correspondence::is_minimal() const {
  for (int p = 0; p < static_cast<int>(rel_.size()); ++p) {
    if (removable(p)) return false;
  }
  return true;
}

Correspondence Correspondence::identity(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n);
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return Correspondence(Relation(n, n, std::move(pairs)));
}

Correspondence Correspondence::full(int n_x, int n_y) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n_x) * n_y);
  for (int i = 0; i < n_x; ++i) {
    for (int j = 0; j < n_y; ++j) pairs.emplace_back(i, j);
  }
  return Correspondence(Relation(n_x, n_y, std::move(pairs)));
}

double distortion(const Relation& rel, const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  double ceiling) {
  if (rel.n_x() > x.size() || rel.n_y() > y.size()) {
    throw IndexOutOfRangeError("IndexOutOfRange relation larger than its spaces");
  }
  const auto& pairs = rel.pairs();
  double worst = 0.0;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    const auto& [xa, ya] = pairs[a];
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto& [xb, yb] = pairs[b];
      const double gap = std::abs(x.at(xa, xb) - y.at(ya, yb));
      if (gap > worst) {
        worst = gap;
        if (worst > ceiling) return worst;
      }
    }
  }
  return worst;
}

double distortion(const Correspondence& corr, const FiniteMetricSpace& x,
                  const FiniteMetricSpace& y, double ceiling) {
  return distortion(corr.relation(), x, y, ceiling);
}

Correspondence product_correspondence(const Correspondence& r1, const Correspondence& r2) {
  const long long cells_1 = static_cast<long long>(r1.n_x()) * r2.n_x();
  const long long cells_2 = static_cast<long long>(r1.n_y()) * r2.n_y();
  if (cells_1 > kMaxSpaceSize || cells_2 > kMaxSpaceSize) {
    throw SizeOverflowError("SizeOverflow product correspondence sides " +
                            std::to_string(cells_1) + " x " + std::to_string(cells_2));
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(r1.pairs().size() * r2.pairs().size());
  for (const auto& [a1, a2] : r1.pairs()) {
    for (const auto& [b1, b2] : r2.pairs()) {
      pairs.emplace_back(a1 * r2.n_x() + b1, a2 * r2.n_y() + b2);
    }
  }
  return Correspondence(
      Relation(static_cast<int>(cells_1), static_cast<int>(cells_2), std::move(pairs)));
}

double hausdorff_distance(const std::vector<int>& subset_i, const std::vector<int>& subset_j,
                          const FiniteMetricSpace& z) {
  if (subset_i.empty() || subset_j.empty()) throw EmptySubsetError("EmptySubset");
  for (int v : subset_i) {
    if (v < 0 || v >= z.size()) throw IndexOutOfRangeError("IndexOutOfRange " + std::to_string(v));
  }
  for (int v : subset_j) {
    if (v < 0 || v >= z.size()) throw IndexOutOfRangeError("IndexOutOfRange " + std::to_string(v));
  }
  double worst = 0.0;
  auto one_sided = [&](const std::vector<int>& from, const std::vector<int>& to) {
    for (int a : from) {
      double best = std::numeric_limits<double>::infinity();
      for (int b : to) best = std::min(best, z.at(a, b));
      worst = std::max(worst, best);
    }
  };
  one_sided(subset_i, subset_j);
  one_sided(subset_j, subset_i);
  return worst;
}

// --- minimal-correspondence enumeration -------------------------------------
//
// A correspondence is minimal iff no pair has coverage >= 2 on both sides,
// i.e. every multi-partner X point owns its Y points exclusively. The search
// assigns each X point a nonempty Y subset under that constraint; subsets are
// tried in the order that makes the emitted pair lists globally lexicographic
// ({0,1,2} before {0,1} before {0,2} before {0} before {1,2} ...).

namespace {

struct EnumState {
  int n_x, n_y;
  const std::function<bool(const Correspondence&)>* visit;
  std::vector<std::pair<int, int>> partial;
  std::vector<int> cover;     // per Y index
  std::vector<char> closed;   // Y owned by a multi-partner X point
  int covered = 0;            // #Y with cover > 0
  int shareable = 0;          // #Y with cover > 0 and not closed
  bool stopped = false;
};

bool feasible_tail(const EnumState& s, int next_x) {
  const int remaining = s.n_x - next_x;
  const int unused = s.n_y - s.covered;
  if (remaining == 0) return unused == 0;
  return unused > 0 || s.shareable > 0;
}

void assign_from(EnumState& s, int xi);

// Extends the open subset of xi (elements already pushed on s.partial) with
// candidates j >= min_j, then closes it.
void extend_subset(EnumState& s, int xi, int min_j, int subset_size, int first_j) {
  for (int j = min_j; j < s.n_y && !s.stopped; ++j) {
    if (s.closed[j]) continue;
    if (subset_size >= 1) {
      // Growing past a singleton forces exclusivity of every element.
      if (s.cover[j] != 0) continue;
      if (s.cover[first_j] != 1) continue;
    }
    s.partial.emplace_back(xi, j);
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
    s.partial.pop_back();
  }
  if (s.stopped || subset_size == 0) return;
  if (feasible_tail(s, xi + 1)) assign_from(s, xi + 1);
}

void assign_from(EnumState& s, int xi) {
  if (s.stopped) return;
  if (xi == s.n_x) {
    if (s.covered == s.n_y) {
      Correspondence corr{Relation(s.n_x, s.n_y, s.partial)};
      if (!(*s.visit)(corr)) s.stopped = true;
    }
    return;
  }
  extend_subset(s, xi, 0, 0, -1);
}

}  // namespace

void for_each_minimal_correspondence(int n_x, int n_y,
                                     const std::function<bool(const Correspondence&)>& visit) {
  if (n_x < 1 || n_y < 1) throw ParameterError("ParameterError sizes must be >= 1");
  if (static_cast<long long>(n_x) * n_y > kMaxEnumerationCells) {
    throw CapExceededError("CapExceeded enumeration grid " + std::to_string(n_x) + "x" +
                           std::to_string(n_y) + " (cap " + std::to_string(kMaxEnumerationCells) +
                           " cells)");
  }
  EnumState s;
  s.n_x = n_x;
  s.n_y = n_y;
  s.visit = &visit;
  s.cover.assign(n_y, 0);
  s.closed.assign(n_y, 0);
  assign_from(s, 0);
}

std::vector<Correspondence> enumerate_minimal_correspondences(int n_x, int n_y) {
  std::vector<Correspondence> out;
  for_each_minimal_correspondence(n_x, n_y, [&](const Correspondence& corr) {
    out.push_back(corr);
    return true;
  });
  return out;
}

// --- correspondence file io --------------------------------------------------

std::string format_correspondence(const Correspondence& corr) {
  std::string out = std::to_string(corr.n_x()) + " " + std::to_string(corr.n_y()) + "\n";
  for (const auto& [i, j] : corr.pairs()) {
    out += std::to_string(i);
    out += ' ';
    out += std::to_string(j);
    out += '\n';
  }
  return out;
}

Correspondence parse_correspondence(std::istream& in) {
  int n_x = 0, n_y = 0;
  if (!(in >> n_x >> n_y)) throw ParseError("ParseError missing correspondence sizes");
  std::vector<std::pair<int, int>> pairs;
  int i, j;
  while (in >> i >> j) pairs.emplace_back(i, j);
  if (pairs.empty()) throw ParseError("ParseError correspondence has no pairs");
  return Correspondence(Relation(n_x, n_y, std::move(pairs)));
}

Correspondence read_correspondence_file(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  return parse_correspondence(in);
}

void write_correspondence_file(const std::filesystem::path& path, const Correspondence& corr) {
  write_text_file_atomic(path, format_correspondence(corr));
}

}  // namespace gromov
