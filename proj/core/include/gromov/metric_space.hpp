#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace gromov {

// A finite metric space: labelled points plus a symmetric distance matrix.
//
// Zero distance between distinct points is deliberately allowed
// (pseudometric-degenerate matrices), so that scaling a space by 0 stays a
// total operation. Every other operation treats such spaces as valid input.
//
// Instances are immutable after construction and safe to share across
// threads.
class FiniteMetricSpace {
 public:
  // Trusted constructor for matrices that are valid by construction
  // (products, scalings, ...). Use validate_metric() for untrusted input.
  static FiniteMetricSpace unchecked(std::vector<std::string> labels, std::vector<double> dist);

  int size() const { return n_; }
  double at(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<double>& dist() const { return dist_; }
  double diameter() const { return diameter_; }

 private:
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> dist);

  int n_;
  std::vector<std::string> labels_;
  std::vector<double> dist_;
  double diameter_;
};

// Finite subset of the real line, kept strictly increasing.
struct PointSet1D {
  std::vector<double> points;

  // Throws ParameterError unless `points` is nonempty and strictly increasing.
  static PointSet1D from(std::vector<double> points);
};

// Checks all metric axioms (diagonal, symmetry, non-negativity, triangle
// inequality within kEps) and throws MetricValidationError naming the first
// offending indices. `matrix` is row-major n*n.
FiniteMetricSpace validate_metric(const std::vector<double>& matrix, std::vector<std::string> labels);
FiniteMetricSpace validate_metric(const std::vector<std::vector<double>>& rows, std::vector<std::string> labels);

// Metric induced from the real line; labels are the formatted coordinates.
FiniteMetricSpace from_reals(const PointSet1D& points);

double diameter(const FiniteMetricSpace& x);

// Multiplies every distance by t >= 0. t = 0 collapses to the zero matrix on
// the same label set.
FiniteMetricSpace scale(const FiniteMetricSpace& x, double t);

// l1 (Manhattan) product: points are (x, y) pairs in row-major order over
// (X index, Y index), labelled "xLabel|yLabel"; distances add coordinatewise.
FiniteMetricSpace l1_product(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

// Adds c > 0 to every off-diagonal entry. The result always satisfies the
// triangle inequality.
FiniteMetricSpace add_constant(const FiniteMetricSpace& x, double c);

struct IsometryCheck {
  bool isometric = false;
  // First violating pair in lexicographic (i, j) order, with both distances,
  // when not isometric.
  int i = -1;
  int j = -1;
  double dist_x = 0.0;
  double dist_y = 0.0;
};

// Tests whether `pairing` (X index -> Y index, bijective) is an isometry
// within kEps.
IsometryCheck check_isometry(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                             const std::vector<int>& pairing);

// -----------------------------------------------------------------------------
// Matrix file format: line 1 = n, line 2 = n whitespace-free labels,
// lines 3..n+2 = matrix rows. Writers emit 12 significant digits.
// -----------------------------------------------------------------------------

FiniteMetricSpace parse_matrix(std::istream& in);
FiniteMetricSpace read_matrix_file(const std::filesystem::path& path);
std::string format_matrix(const FiniteMetricSpace& x);
void write_matrix_file(const std::filesystem::path& path, const FiniteMetricSpace& x);

}  // namespace gromov
