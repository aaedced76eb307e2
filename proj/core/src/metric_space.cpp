#include "gromov/metric_space.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <utility>

#include "gromov/errors.hpp"
#include "gromov/limits.hpp"
#include "gromov/textio.hpp"

namespace gromov {

namespace {

void check_space_size(std::size_t n) {
  if (n < 1) throw ParameterError("ParameterError empty space");
  if (n > static_cast<std::size_t>(kMaxSpaceSize)) {
    throw SizeOverflowError("SizeOverflow " + std::to_string(n) + " points (cap " +
                            std::to_string(kMaxSpaceSize) + ")");
  }
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> dist)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)), dist_(std::move(dist)) {
  double d = 0.0;
  for (double v : dist_) d = std::max(d, v);
  diameter_ = d;
}

FiniteMetricSpace FiniteMetricSpace::unchecked(std::vector<std::string> labels,
                                               std::vector<double> dist) {
  check_space_size(labels.size());
  if (dist.size() != labels.size() * labels.size()) {
    throw SizeMismatchError("SizeMismatch matrix is not n*n");
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

PointSet1D PointSet1D::from(std::vector<double> points) {
  if (points.empty()) throw ParameterError("ParameterError empty point set");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1] < points[i])) {
      throw ParameterError("ParameterError points not strictly increasing at index " +
                           std::to_string(i));
    }
  }
  return PointSet1D{std::move(points)};
}

FiniteMetricSpace validate_metric(const std::vector<double>& matrix,
                                  std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  check_space_size(n);
  if (matrix.size() != n * n) throw SizeMismatchError("SizeMismatch matrix is not n*n");

  auto at = [&](std::size_t i, std::size_t j) { return matrix[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(at(i, i)) > kEps) {
      throw MetricValidationError(MetricValidationError::Kind::NonZeroDiagonal,
                                  static_cast<int>(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) < -kEps) {
        throw MetricValidationError(MetricValidationError::Kind::NegativeEntry,
                                    static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(at(i, j) - at(j, i)) > kEps) {
        throw MetricValidationError(MetricValidationError::Kind::Asymmetric, static_cast<int>(i),
                                    static_cast<int>(j));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        if (at(i, k) > at(i, j) + at(j, k) + kEps) {
          throw MetricValidationError(MetricValidationError::Kind::TriangleViolation,
                                      static_cast<int>(i), static_cast<int>(j),
                                      static_cast<int>(k));
        }
      }
    }
  }
  return FiniteMetricSpace::unchecked(std::move(labels), matrix);
}

FiniteMetricSpace validate_metric(const std::vector<std::vector<double>>& rows,
                                  std::vector<std::string> labels) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw SizeMismatchError("SizeMismatch matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_metric(flat, std::move(labels));
}

FiniteMetricSpace from_reals(const PointSet1D& points) {
  const std::size_t n = points.points.size();
  check_space_size(n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (double p : points.points) labels.push_back(format_real(p));
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[i * n + j] = std::abs(points.points[i] - points.points[j]);
    }
  }
  return FiniteMetricSpace::unchecked(std::move(labels), std::move(dist));
}

double diameter(const FiniteMetricSpace& x) { return x.diameter(); }

FiniteMetricSpace scale(const FiniteMetricSpace& x, double t) {
  if (t < 0.0) throw NegativeScaleError(t);
  std::vector<double> dist = x.dist();
  for (double& v : dist) v *= t;
  return FiniteMetricSpace::unchecked(x.labels(), std::move(dist));
}

FiniteMetricSpace l1_product(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const std::size_t nx = static_cast<std::size_t>(x.size());
  const std::size_t ny = static_cast<std::size_t>(y.size());
  if (nx * ny > static_cast<std::size_t>(kMaxSpaceSize)) {
    throw SizeOverflowError("SizeOverflow product has " + std::to_string(nx * ny) +
                            " points (cap " + std::to_string(kMaxSpaceSize) + ")");
  }
  const std::size_t n = nx * ny;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      labels.push_back(x.label(static_cast<int>(i)) + "|" + y.label(static_cast<int>(j)));
    }
  }
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const std::size_t p = i * ny + j;
      for (std::size_t i2 = 0; i2 < nx; ++i2) {
        for (std::size_t j2 = 0; j2 < ny; ++j2) {
          const std::size_t q = i2 * ny + j2;
          dist[p * n + q] =
              x.at(static_cast<int>(i), static_cast<int>(i2)) + y.at(static_cast<int>(j), static_cast<int>(j2));
        }
      }
    }
  }
  return FiniteMetricSpace::unchecked(std::move(labels), std::move(dist));
}

FiniteMetricSpace add_constant(const FiniteMetricSpace& x, double c) {
  if (!(c > 0.0)) throw NonPositiveConstantError(c);
  const int n = x.size();
  std::vector<double> dist = x.dist();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) dist[static_cast<std::size_t>(i) * n + j] += c;
    }
  }
  return FiniteMetricSpace::unchecked(x.labels(), std::move(dist));
}

IsometryCheck check_isometry(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                             const std::vector<int>& pairing) {
  const int n = x.size();
  if (y.size() != n || static_cast<int>(pairing.size()) != n) {
    throw SizeMismatchError("SizeMismatch |X| = " + std::to_string(n) +
                            ", |Y| = " + std::to_string(y.size()) +
                            ", |pairing| = " + std::to_string(pairing.size()));
  }
  std::vector<char> seen(n, 0);
  for (int v : pairing) {
    if (v < 0 || v >= n || seen[v]) {
      throw NonBijectivePairingError("NonBijectivePairing value " + std::to_string(v));
    }
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = x.at(i, j);
      const double dy = y.at(pairing[i], pairing[j]);
      if (std::abs(dx - dy) > kEps) {
        return IsometryCheck{false, i, j, dx, dy};
      }
    }
  }
  return IsometryCheck{true, -1, -1, 0.0, 0.0};
}

// --- matrix file io ---------------------------------------------------------

FiniteMetricSpace parse_matrix(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) throw ParseError("ParseError missing point count");
  if (n < 1 || n > kMaxSpaceSize) {
    throw ParseError("ParseError bad point count " + std::to_string(n));
  }
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (auto& label : labels) {
    if (!(in >> label)) throw ParseError("ParseError missing label");
  }
  std::vector<double> dist(static_cast<std::size_t>(n) * n);
  for (auto& v : dist) {
    if (!(in >> v)) throw ParseError("ParseError missing matrix entry");
  }
  return validate_metric(dist, std::move(labels));
}

FiniteMetricSpace read_matrix_file(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  try {
    return parse_matrix(in);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " in " + path.string());
  }
}

std::string format_matrix(const FiniteMetricSpace& x) {
  std::string out = std::to_string(x.size());
  out += '\n';
  for (int i = 0; i < x.size(); ++i) {
    if (i) out += ' ';
    out += x.label(i);
  }
  out += '\n';
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < x.size(); ++j) {
      if (j) out += ' ';
      out += format_real(x.at(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_matrix_file(const std::filesystem::path& path, const FiniteMetricSpace& x) {
  write_text_file_atomic(path, format_matrix(x));
}

}  // namespace gromov
