// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion pins its tolerances and seeds; the brute-force oracles live
// in tests/support and are independent of the library's search paths.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gromov/experiment.hpp"
#include "gromov/geodesy.hpp"
#include "gromov/gh_solver.hpp"
#include "gromov/lattice.hpp"
#include "gromov/limits.hpp"
#include "gromov/rng.hpp"
#include "gromov/textio.hpp"
#include "support/oracles.hpp"

using namespace gromov;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%2d] %s  %s (%.2fs)%s%s\n", number, ok ? "PASS" : "FAIL", name.c_str(), seconds,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

double elapsed_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  // 1. Solver oracle equivalence on 200 random pairs with <= 3 points each.
  criterion(1, "solver oracle equivalence (200 pairs, exact)", [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    Lcg64 rng(1001);
    int mismatches = 0;
    for (int round = 0; round < 200; ++round) {
      const int n_x = 1 + static_cast<int>(rng.next_below(3));
      const int n_y = 1 + static_cast<int>(rng.next_below(3));
      const FiniteMetricSpace x = random_space(rng, n_x);
      const FiniteMetricSpace y = random_space(rng, n_y);
      if (gh_exact(x, y).value != oracles::brute_force_min_distortion(x, y) / 2.0) ++mismatches;
    }
    const double seconds = elapsed_since(start);
    detail = std::to_string(mismatches) + " mismatches";
    return mismatches == 0 && seconds < 10.0;
  });

  // 2. Scaling geodesic formula at 1e-9 for 50 random X and t in {0,.5,1,2}.
  criterion(2, "scaling geodesic |t1-t2|/2 * diam within 1e-9", [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    Lcg64 rng(2002);
    const std::vector<double> ts{0.0, 0.5, 1.0, 2.0};
    double worst = 0.0;
    for (int round = 0; round < 50; ++round) {
      const FiniteMetricSpace x = random_space(rng, 1 + static_cast<int>(rng.next_below(4)));
      for (double t1 : ts) {
        for (double t2 : ts) {
          const double got = gh_exact(scale(x, t1), scale(x, t2)).value;
          worst = std::max(worst, std::abs(got - gh_scaling_value(x, t1, t2)));
        }
      }
    }
    const double seconds = elapsed_since(start);
    detail = "max |gh - formula| = " + format_real(worst);
    return worst <= 1e-9 && seconds < 60.0;
  });

  // 3. Distortion subadditivity, 500 random quadruples, exact comparison.
  criterion(3, "distortion subadditivity of products (500 quadruples, exact)",
            [](std::string& detail) {
              Lcg64 rng(3003);
              int violations = 0;
              for (int round = 0; round < 500; ++round) {
                const int na = 1 + static_cast<int>(rng.next_below(3));
                const int nb = 1 + static_cast<int>(rng.next_below(3));
                const FiniteMetricSpace a1 = random_space(rng, na);
                const FiniteMetricSpace a2 = random_space(rng, na);
                const FiniteMetricSpace b1 = random_space(rng, nb);
                const FiniteMetricSpace b2 = random_space(rng, nb);
                const Correspondence r1 = random_correspondence(rng, na, na);
                const Correspondence r2 = random_correspondence(rng, nb, nb);
                const double lhs = distortion(product_correspondence(r1, r2), l1_product(a1, b1),
                                              l1_product(a2, b2));
                const double rhs = distortion(r1, a1, a2) + distortion(r2, b1, b2);
                if (lhs > rhs) ++violations;
              }
              detail = std::to_string(violations) + " violations";
              return violations == 0;
            });

  // 4. Product GH upper bound with product sizes <= 8.
  criterion(4, "product gh upper bound (perturbed pairs, 1e-9)", [](std::string& detail) {
    Lcg64 rng(4004);
    int violations = 0;
    for (int round = 0; round < 50; ++round) {
      const int na = 2 + static_cast<int>(rng.next_below(3));                // 2..4
      const int nb = na == 2 ? 2 + static_cast<int>(rng.next_below(3)) : 2;  // na*nb <= 8
      const FiniteMetricSpace a1 = random_space(rng, na, 1536, 2048);
      const FiniteMetricSpace a2 = perturb_space(rng, a1, 64);
      const FiniteMetricSpace b1 = random_space(rng, nb);
      const FiniteMetricSpace b2 = random_space(rng, nb);
      const double bound = gh_exact(a1, a2).value + gh_exact(b1, b2).value;
      const double got = gh_exact(l1_product(a1, b1), l1_product(a2, b2)).value;
      if (got > bound + 1e-9) ++violations;
    }
    detail = std::to_string(violations) + " violations";
    return violations == 0;
  });

  // 5. Truncation lower series sandwiched at 0.5 for k = 1, 2, 3.
  criterion(5, "truncation series = 0.5 +- 1e-9 for k=1,2,3", [](std::string& detail) {
    const FiniteMetricSpace x = from_reals(PointSet1D::from({0, 1}));
    const FiniteMetricSpace y = from_reals(PointSet1D::from({0}));
    const auto series = truncation_lower_series(1000.0, {1, 2, 3}, x, y);
    bool ok = series.size() == 3;
    std::string values;
    for (const TruncationPoint& point : series) {
      ok = ok && std::abs(point.cert.value - 0.5) <= 1e-9;
      if (!values.empty()) values += " ";
      values += format_real(point.cert.value);
    }
    // The explicit product-correspondence upper bound.
    const double upper = gh_exact(x, y).value;
    ok = ok && std::abs(upper - 0.5) <= 1e-9;
    detail = "values: " + values + ", upper " + format_real(upper);
    return ok;
  });

  // 6. d_GH triangle inequality on 100 random triples of <= 3-point spaces.
  criterion(6, "gh triangle inequality (100 triples, 2e-9)", [](std::string& detail) {
    Lcg64 rng(6006);
    int violations = 0;
    for (int round = 0; round < 100; ++round) {
      const FiniteMetricSpace x = random_space(rng, 1 + static_cast<int>(rng.next_below(3)));
      const FiniteMetricSpace y = random_space(rng, 1 + static_cast<int>(rng.next_below(3)));
      const FiniteMetricSpace z = random_space(rng, 1 + static_cast<int>(rng.next_below(3)));
      if (gh_exact(x, z).value > gh_exact(x, y).value + gh_exact(y, z).value + 2e-9) ++violations;
    }
    detail = std::to_string(violations) + " violations";
    return violations == 0;
  });

  // 7. Lattice counts: pinned constants and the 2d area asymptotic at t = 500.
  criterion(7, "ball counts 13 / 5 and area ratio at t=500 within 5%", [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const std::int64_t thirteen = ball_count(2, Rational{2, 1});
    const std::int64_t five = ball_count(2, Rational{1, 1});
    const std::int64_t big = ball_count(2, Rational{500, 1});
    const double ratio = static_cast<double>(big) / (3.14159265358979323846 * 500.0 * 500.0);
    const double seconds = elapsed_since(start);
    detail = "N(2)=" + std::to_string(thirteen) + " N(1)=" + std::to_string(five) +
             " area ratio " + format_real(ratio);
    return thirteen == 13 && five == 5 && std::abs(ratio - 1.0) <= 0.05 && seconds < 5.0;
  });

  // 8. Witness radii with exact recomputation.
  criterion(8, "witness radii: (l=2,c=3) -> t=2 with 9>7; (l=2,c=0) -> t=1",
            [](std::string& detail) {
              std::vector<Rational> grid;
              for (long long t = 1; t <= 10; ++t) grid.push_back(Rational{t, 1});
              const auto slack = witness_radius(1, Rational{2, 1}, Rational{3, 1}, grid);
              const auto tight = witness_radius(1, Rational{2, 1}, Rational{0, 1}, grid);
              const std::int64_t n_at_2 = ball_count(1, Rational{4, 1});
              const std::int64_t n_prime_at_2 = ball_count(1, Rational{7, 2});
              detail = "N(2)=" + std::to_string(n_at_2) + " N'(2)=" + std::to_string(n_prime_at_2);
              return slack && *slack == Rational{2, 1} && n_at_2 == 9 && n_prime_at_2 == 7 &&
                     n_at_2 > n_prime_at_2 && tight && *tight == Rational{1, 1};
            });

  // 9. Ratio convergence: within 1% of 2 at t=1000 (n=1), within 5% of 4 at t=500 (n=2).
  criterion(9, "ratio convergence to lambda^n", [](std::string& detail) {
    const LatticeReport one =
        ratio_series(1, Rational{2, 1}, Rational{0, 1}, {Rational{1000, 1}});
    const LatticeReport two =
        ratio_series(2, Rational{2, 1}, Rational{0, 1}, {Rational{500, 1}});
    const double r1 = one.rows[0].ratio;
    const double r2 = two.rows[0].ratio;
    detail = "n=1: " + format_real(r1) + ", n=2: " + format_real(r2);
    return std::abs(r1 - 2.0) / 2.0 <= 0.01 && std::abs(r2 - 4.0) / 4.0 <= 0.05;
  });

  // 10. Determinism: byte-identical CSV bodies across reruns and thread counts.
  criterion(10, "seeded experiments byte-identical across thread counts", [](std::string& detail) {
    const fs::path base = fs::temp_directory_path() / "gromov_lab_acceptance";
    std::error_code ec;
    fs::remove_all(base, ec);
    const std::vector<std::string> configs{
        "kind = ScalingGeodesic\nrandom_n = 4\nts = 0 0.5 1 2\nseed = 21\n",
        "kind = ProductUpper\ntrials = 8\nna = 2\nnb = 3\nseed = 22\n",
        "kind = LatticeRatio\nn = 2\nlambda = 2\nts = 50 100\nseed = 23\n",
        "kind = LatticeWitness\nn = 1\nlambda = 2\nc = 3\ntmax = 10\nseed = 24\n",
        "kind = TruncationLower\ngap = 1000\nks = 1 2 3\nseed = 25\n",
        "kind = IsometryExample\nseed = 26\n",
    };
    int mismatched = 0;
    for (std::size_t c = 0; c < configs.size(); ++c) {
      std::string bodies[2];
      for (int run = 0; run < 2; ++run) {
        std::istringstream in(configs[c]);
        ExperimentConfig config = ExperimentConfig::parse(in);
        config.threads = run == 0 ? 1 : 16;
        config.out_dir = base / (std::to_string(c) + "_" + std::to_string(run));
        const ExperimentResult result = run_experiment(config);
        if (result.exit_code != 0) {
          ++mismatched;
          break;
        }
        bodies[run] = read_text_file(result.outputs[0]);
      }
      if (!bodies[0].empty() && bodies[0] != bodies[1]) ++mismatched;
    }
    fs::remove_all(base, ec);
    detail = std::to_string(mismatched) + " mismatched experiment(s) of " +
             std::to_string(configs.size());
    return mismatched == 0;
  });

  std::printf("ACCEPTANCE: %d/10 criteria passed\n", 10 - failures);
  return failures;
}
