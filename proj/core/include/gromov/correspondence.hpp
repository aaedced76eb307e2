#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gromov/metric_space.hpp"

namespace gromov {

// A nonempty set of index pairs between {0..n_x-1} and {0..n_y-1}, stored as
// a sorted, de-duplicated pair list.
class Relation {
 public:
  Relation(int n_x, int n_y, std::vector<std::pair<int, int>> pairs);

  int n_x() const { return n_x_; }
  int n_y() const { return n_y_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

 private:
  int n_x_, n_y_;
  std::vector<std::pair<int, int>> pairs_;
};

// A relation whose projections cover both index sets. Per-side coverage
// counts are kept so removability of a pair is an O(1) query.
class Correspondence {
 public:
  explicit Correspondence(Relation rel);

  const Relation& relation() const { return rel_; }
  const std::vector<std::pair<int, int>>& pairs() const { return rel_.pairs(); }
  int n_x() const { return rel_.n_x(); }
  int n_y() const { return rel_.n_y(); }

  int cover_x(int i) const { return cover_x_[i]; }
  int cover_y(int j) const { return cover_y_[j]; }

  // pair_index into pairs(). A pair is removable iff dropping it keeps both
  // projections surjective.
  bool removable(int pair_index) const;
  bool is_minimal() const;

  static Correspondence identity(int n);
  static Correspondence full(int n_x, int n_y);

 private:
  Relation rel_;
  std::vector<int> cover_x_, cover_y_;
};

// sup over pairs of pairs of | d_X(x,x') - d_Y(y,y') |. Stops early once the
// running maximum exceeds `ceiling` (the value returned is then only a lower
// bound on the true distortion, still > ceiling).
double distortion(const Relation& rel, const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  double ceiling = std::numeric_limits<double>::infinity());
double distortion(const Correspondence& corr, const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  double ceiling = std::numeric_limits<double>::infinity());

// Cartesian product of correspondences, indexed consistently with
// l1_product's row-major scheme.
Correspondence product_correspondence(const Correspondence& r1, const Correspondence& r2);

// Hausdorff distance between two nonempty index subsets of one space.
double hausdorff_distance(const std::vector<int>& subset_i, const std::vector<int>& subset_j,
                          const FiniteMetricSpace& z);

// Streams exactly the minimal correspondences (no pair removable) in
// lexicographic order of their sorted pair lists. The visitor returns false
// to stop. Single consumer; every correspondence between the two index sets
// contains at least one streamed element as a subset.
void for_each_minimal_correspondence(int n_x, int n_y,
                                     const std::function<bool(const Correspondence&)>& visit);
std::vector<Correspondence> enumerate_minimal_correspondences(int n_x, int n_y);

// -----------------------------------------------------------------------------
// Correspondence file format: line 1 = "n_x n_y", then one "i j" pair per line.
// -----------------------------------------------------------------------------

std::string format_correspondence(const Correspondence& corr);
Correspondence parse_correspondence(std::istream& in);
Correspondence read_correspondence_file(const std::filesystem::path& path);
void write_correspondence_file(const std::filesystem::path& path, const Correspondence& corr);

}  // namespace gromov
