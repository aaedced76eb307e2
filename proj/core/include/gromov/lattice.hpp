#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gromov/metric_space.hpp"

namespace gromov {

// Exact rational, reduced, den > 0. Radius comparisons in the lattice
// counters are done as z.z * den^2 <= num^2 in integer arithmetic, so counts
// near shell boundaries are bit-exact.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long num, long long den);
  // Accepts "7", "7/2", "3.5" (at most 9 fractional digits).
  static Rational parse(const std::string& token);
  // Documented rounding for floating input: nearest multiple of 1e-6.
  static Rational from_double_micro(double v);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  long long floor_value() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b);
};

std::string format_rational(const Rational& r);

// Exact number of integer points z in Z^n with Euclidean norm <= r, by box
// enumeration with exact integer comparisons. n <= kMaxLatticeDim. The outer
// coordinate range may be partitioned across `threads` workers; the integer
// accumulation keeps the result identical for any worker count.
std::int64_t ball_count(int n, const Rational& r, int threads = 1);
std::int64_t ball_count(int n, double r, int threads = 1);

struct LatticeRow {
  Rational t;
  std::int64_t count;        // N(t)  = #(Z^n ball of radius lambda * t)
  std::int64_t count_prime;  // N'(t) = #(Z^n ball of radius t + c / lambda)
  double ratio;              // count / count_prime
};

// Counting report for the Z^n scaling experiments.
struct LatticeReport {
  int n;
  Rational lambda;
  Rational c;
  std::vector<LatticeRow> rows;
  std::optional<Rational> witness_t;
};

// One row per t: N = ball_count(n, lambda * t), N' = ball_count(n, t + c/lambda).
// Requires lambda > 1. The trailing ratios approach lambda^n.
LatticeReport ratio_series(int n, const Rational& lambda, const Rational& c,
                           const std::vector<Rational>& ts, int threads = 1);

// Smallest grid t with N(t) > N'(t), if any. Such a t rules out a bijective
// correspondence of distortion <= c between Z^n and lambda Z^n.
std::optional<Rational> witness_radius(int n, const Rational& lambda, const Rational& c,
                                       const std::vector<Rational>& t_grid, int threads = 1);

// ratio_series plus the witness footer, for reporting.
LatticeReport witness_report(int n, const Rational& lambda, const Rational& c,
                             const std::vector<Rational>& t_grid, int threads = 1);

// The window {-k..k}^n of Z^n with the Euclidean metric, points in
// lexicographic order, labels "(c1,...,cn)".
FiniteMetricSpace zn_window(int n, int k);

// CSV: header t,N,Nprime,ratio; one row per t; footer row "witness_t,<t>,,"
// when a witness was found.
std::string lattice_report_csv(const LatticeReport& report);

}  // namespace gromov
