#include "gromov/lattice.hpp"

#include <atomic>
#include <cmath>
#include <numeric>

#include "gromov/errors.hpp"
#include "gromov/limits.hpp"
#include "gromov/parallel.hpp"
#include "gromov/textio.hpp"

namespace gromov {

namespace {

using i128 = __int128;

void check_rational_range(long long num, long long den) {
  if (den <= 0) throw ParameterError("ParameterError rational denominator must be positive");
  if (std::llabs(num) > kMaxRationalNum || den > kMaxRationalDen) {
    throw CapExceededError("CapExceeded rational " + std::to_string(num) + "/" +
                           std::to_string(den));
  }
}

// Largest integer u with u * u <= v.
long long isqrt_floor(unsigned long long v) {
  if (v == 0) return 0;
  auto u = static_cast<unsigned long long>(std::sqrt(static_cast<double>(v)));
  while (u > 0 && u * u > v) --u;
  while ((u + 1) * (u + 1) <= v) ++u;
  return static_cast<long long>(u);
}

}  // namespace

Rational Rational::make(long long num, long long den) {
  if (den == 0) throw ParameterError("ParameterError rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(std::llabs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  check_rational_range(num, den);
  return Rational{num, den};
}

Rational Rational::parse(const std::string& token) {
  if (token.empty()) throw ParseError("ParseError empty rational");
  std::size_t pos = 0;
  long long sign = 1;
  if (token[pos] == '+' || token[pos] == '-') {
    if (token[pos] == '-') sign = -1;
    ++pos;
  }
  auto digits = [&](long long& out) {
    std::size_t start = pos;
    out = 0;
    while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9') {
      out = out * 10 + (token[pos] - '0');
      if (out > kMaxRationalNum * 1000) throw CapExceededError("CapExceeded rational " + token);
      ++pos;
    }
    return pos > start;
  };
  long long whole = 0;
  if (!digits(whole)) throw ParseError("ParseError bad rational '" + token + "'");
  if (pos == token.size()) return make(sign * whole, 1);
  if (token[pos] == '/') {
    ++pos;
    long long den = 0;
    if (!digits(den) || pos != token.size() || den == 0) {
      throw ParseError("ParseError bad rational '" + token + "'");
    }
    return make(sign * whole, den);
  }
  if (token[pos] == '.') {
    ++pos;
    const std::size_t frac_start = pos;
    long long frac = 0;
    if (!digits(frac) || pos != token.size()) {
      throw ParseError("ParseError bad rational '" + token + "'");
    }
    const std::size_t frac_digits = pos - frac_start;
    if (frac_digits > 9) throw ParseError("ParseError too many fraction digits in '" + token + "'");
    long long den = 1;
    for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
    return make(sign * (whole * den + frac), den);
  }
  throw ParseError("ParseError bad rational '" + token + "'");
}

Rational Rational::from_double_micro(double v) {
  if (!std::isfinite(v)) throw ParameterError("ParameterError non-finite radius");
  const double scaled = v * 1e6;
  if (std::abs(scaled) > static_cast<double>(kMaxRationalNum)) {
    throw CapExceededError("CapExceeded radius " + format_real(v));
  }
  return make(std::llround(scaled), 1'000'000);
}

long long Rational::floor_value() const {
  if (num >= 0) return num / den;
  return -((-num + den - 1) / den);
}

Rational operator+(const Rational& a, const Rational& b) {
  // Raw values fit in 64 bits (nums <= 2e9 * 1e6, dens <= 1e12); make()
  // reduces and re-checks the caps.
  const i128 num = static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den;
  const i128 den = static_cast<i128>(a.den) * b.den;
  return Rational::make(static_cast<long long>(num), static_cast<long long>(den));
}

Rational operator*(const Rational& a, const Rational& b) {
  const long long g1 = std::gcd(std::llabs(a.num), b.den);
  const long long g2 = std::gcd(std::llabs(b.num), a.den);
  const i128 num = static_cast<i128>(a.num / g1) * (b.num / g2);
  const i128 den = static_cast<i128>(a.den / g2) * (b.den / g1);
  if (num > kMaxRationalNum || num < -kMaxRationalNum || den > kMaxRationalDen) {
    throw CapExceededError("CapExceeded rational product");
  }
  return Rational::make(static_cast<long long>(num), static_cast<long long>(den));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw ParameterError("ParameterError division by zero rational");
  const long long sign = b.num < 0 ? -1 : 1;
  return a * Rational{sign * b.den, std::llabs(b.num)};
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
}

std::string format_rational(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

// --- ball counting -----------------------------------------------------------
//
// Count of z in Z^n with z.z <= r^2, i.e. z.z * den^2 <= num^2 in exact
// integers. The box is walked coordinate by coordinate; at each level the
// admissible range {-m..m} comes from the exact residual m = isqrt(T) / den,
// and the innermost level contributes 2m+1 directly.

namespace {

struct BallJob {
  int n;
  i128 p2;         // num^2
  i128 q2;         // den^2
  long long den;
};

// Largest m >= 0 with m^2 * q2 <= residual, residual = p2 - s * q2 >= 0.
long long level_range(const BallJob& job, i128 residual) {
  const long long u = isqrt_floor(static_cast<unsigned long long>(residual));
  return u / job.den;
}

std::int64_t count_from_level(const BallJob& job, int level, i128 sum_squares) {
  const i128 residual = job.p2 - sum_squares * job.q2;
  if (residual < 0) return 0;
  const long long m = level_range(job, residual);
  if (level == job.n - 1) return 2 * m + 1;
  std::int64_t total = count_from_level(job, level + 1, sum_squares);
  for (long long z = 1; z <= m; ++z) {
    total += 2 * count_from_level(job, level + 1, sum_squares + static_cast<i128>(z) * z);
  }
  return total;
}

}  // namespace

std::int64_t ball_count(int n, const Rational& r, int threads) {
  if (n < 1 || n > kMaxLatticeDim) {
    throw DimensionCapExceededError("DimensionCapExceeded n = " + std::to_string(n) + " (cap " +
                                    std::to_string(kMaxLatticeDim) + ")");
  }
  if (r.num < 0) throw ParameterError("ParameterError radius must be non-negative");
  check_rational_range(r.num, r.den);

  const long long radius_floor = r.num / r.den;
  // Work estimate: the outer n-1 coordinates span at most 2*floor+1 values each.
  double est = 1.0;
  for (int level = 0; level + 1 < n; ++level) est *= 2.0 * static_cast<double>(radius_floor) + 1.0;
  if (est > static_cast<double>(kMaxLatticeWork)) {
    throw CapExceededError("CapExceeded ball_count box for n = " + std::to_string(n) +
                           ", r = " + format_rational(r));
  }

  const BallJob job{n, static_cast<i128>(r.num) * r.num, static_cast<i128>(r.den) * r.den, r.den};
  if (n == 1) return count_from_level(job, 0, 0);

  const long long m0 = level_range(job, job.p2);
  threads = resolve_thread_count(threads);
  if (threads <= 1 || m0 < 64) return count_from_level(job, 0, 0);

  // Split the non-negative range of the first coordinate; z and -z are
  // mirrored, z = 0 counted once. Integer accumulation is exact, so the
  // result does not depend on the partitioning.
  std::atomic<std::int64_t> total{0};
  parallel_chunks(m0 + 1, threads, [&](std::int64_t begin, std::int64_t end) {
    std::int64_t local = 0;
    for (std::int64_t z = begin; z < end; ++z) {
      const std::int64_t c = count_from_level(job, 1, static_cast<i128>(z) * z);
      local += z == 0 ? c : 2 * c;
    }
    total.fetch_add(local, std::memory_order_relaxed);
  });
  return total.load();
}

std::int64_t ball_count(int n, double r, int threads) {
  return ball_count(n, Rational::from_double_micro(r), threads);
}

// --- ratio series and witnesses ----------------------------------------------

LatticeReport ratio_series(int n, const Rational& lambda, const Rational& c,
                           const std::vector<Rational>& ts, int threads) {
  if (!(Rational{1, 1} < lambda)) {
    throw ParameterError("ParameterError lambda must exceed 1, got " + format_rational(lambda));
  }
  if (c.num < 0) throw ParameterError("ParameterError c must be non-negative");
  LatticeReport report{n, lambda, c, {}, std::nullopt};
  report.rows.reserve(ts.size());
  const Rational shift = c / lambda;
  for (const Rational& t : ts) {
    if (t.num < 0) throw ParameterError("ParameterError t must be non-negative");
    const std::int64_t count = ball_count(n, lambda * t, threads);
    const std::int64_t count_prime = ball_count(n, t + shift, threads);
    const double ratio =
        count_prime > 0 ? static_cast<double>(count) / static_cast<double>(count_prime) : 0.0;
    report.rows.push_back(LatticeRow{t, count, count_prime, ratio});
  }
  return report;
}

std::optional<Rational> witness_radius(int n, const Rational& lambda, const Rational& c,
                                       const std::vector<Rational>& t_grid, int threads) {
  if (t_grid.empty()) throw ParameterError("ParameterError empty witness grid");
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i - 1] < t_grid[i])) {
      throw ParameterError("ParameterError witness grid must be increasing");
    }
  }
  if (!(Rational{1, 1} < lambda)) {
    throw ParameterError("ParameterError lambda must exceed 1, got " + format_rational(lambda));
  }
  const Rational shift = c / lambda;
  for (const Rational& t : t_grid) {
    if (ball_count(n, lambda * t, threads) > ball_count(n, t + shift, threads)) return t;
  }
  return std::nullopt;
}

LatticeReport witness_report(int n, const Rational& lambda, const Rational& c,
                             const std::vector<Rational>& t_grid, int threads) {
  LatticeReport report = ratio_series(n, lambda, c, t_grid, threads);
  for (const LatticeRow& row : report.rows) {
    if (row.count > row.count_prime) {
      report.witness_t = row.t;
      break;
    }
  }
  return report;
}

// --- lattice windows -----------------------------------------------------------

FiniteMetricSpace zn_window(int n, int k) {
  if (n < 1 || n > kMaxLatticeDim) {
    throw DimensionCapExceededError("DimensionCapExceeded n = " + std::to_string(n));
  }
  if (k < 0) throw ParameterError("ParameterError k must be >= 0");
  const long long side = 2LL * k + 1;
  if (side > kMaxSpaceSize) {
    throw CapExceededError("CapExceeded window side " + std::to_string(side));
  }
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= side;
    if (total > kMaxSpaceSize) {
      throw CapExceededError("CapExceeded window (" + std::to_string(side) + ")^" +
                             std::to_string(n));
    }
  }

  // Points in lexicographic order, first coordinate most significant.
  std::vector<std::vector<int>> points;
  points.reserve(static_cast<std::size_t>(total));
  std::vector<int> coord(n, -k);
  for (;;) {
    points.push_back(coord);
    int level = n - 1;
    while (level >= 0 && coord[level] == k) coord[level--] = -k;
    if (level < 0) break;
    ++coord[level];
  }

  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const auto& p : points) {
    std::string label = "(";
    for (int i = 0; i < n; ++i) {
      if (i) label += ',';
      label += std::to_string(p[i]);
    }
    label += ')';
    labels.push_back(std::move(label));
  }

  const std::size_t m = points.size();
  std::vector<double> dist(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      long long sq = 0;
      for (int i = 0; i < n; ++i) {
        const long long d = points[a][i] - points[b][i];
        sq += d * d;
      }
      const double d = std::sqrt(static_cast<double>(sq));
      dist[a * m + b] = d;
      dist[b * m + a] = d;
    }
  }
  return FiniteMetricSpace::unchecked(std::move(labels), std::move(dist));
}

// --- csv -----------------------------------------------------------------------

std::string lattice_report_csv(const LatticeReport& report) {
  std::string out = "t,N,Nprime,ratio\n";
  for (const LatticeRow& row : report.rows) {
    out += format_real(row.t.to_double());
    out += ',';
    out += std::to_string(row.count);
    out += ',';
    out += std::to_string(row.count_prime);
    out += ',';
    out += format_real(row.ratio);
    out += '\n';
  }
  if (report.witness_t) {
    out += "witness_t,";
    out += format_real(report.witness_t->to_double());
    out += ",,\n";
  }
  return out;
}

}  // namespace gromov
