#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "gromov/correspondence.hpp"
#include "gromov/errors.hpp"
#include "gromov/rng.hpp"
#include "support/oracles.hpp"

using namespace gromov;

namespace {

FiniteMetricSpace line(std::vector<double> points) {
  return from_reals(PointSet1D::from(std::move(points)));
}

}  // namespace

TEST_CASE("relation validates indices and rejects emptiness") {
  CHECK_THROWS_AS(Relation(2, 2, {}), ParameterError);
  CHECK_THROWS_AS(Relation(2, 2, {{0, 2}}), IndexOutOfRangeError);
  CHECK_THROWS_AS(Relation(2, 2, {{-1, 0}}), IndexOutOfRangeError);

  const Relation rel(2, 2, {{1, 1}, {0, 0}, {1, 1}});
  CHECK(rel.pairs() == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
}

TEST_CASE("correspondence requires coverage of both sides") {
  CHECK_THROWS_AS(Correspondence(Relation(2, 2, {{0, 0}})), ParameterError);
  CHECK_THROWS_AS(Correspondence(Relation(2, 2, {{0, 0}, {1, 0}})), ParameterError);
  CHECK_NOTHROW(Correspondence(Relation(2, 2, {{0, 0}, {1, 1}})));
}

TEST_CASE("distortion of the identity on a space with itself is zero") {
  const FiniteMetricSpace x = line({0, 1, 3});
  CHECK(distortion(Correspondence::identity(3), x, x) == 0.0);
}

TEST_CASE("distortion of the full relation against a point is the diameter") {
  const FiniteMetricSpace x = line({0, 1});
  const FiniteMetricSpace point = line({0});
  CHECK(distortion(Correspondence::full(2, 1), x, point) == 1.0);
}

TEST_CASE("distortion of the stretch bijection is the stretch") {
  // 0 -> 0, 1 -> 3 between {0,1} and {0,3}: the single off-diagonal pair of
  // pairs contributes |1 - 3| = 2.
  const Correspondence stretched{Relation(2, 2, {{0, 0}, {1, 1}})};
  CHECK(distortion(stretched, line({0, 1}), line({0, 3})) == 2.0);
}

TEST_CASE("distortion is monotone under relation inclusion") {
  Lcg64 rng(29);
  for (int round = 0; round < 50; ++round) {
    const int n_x = 2 + static_cast<int>(rng.next_below(3));
    const int n_y = 2 + static_cast<int>(rng.next_below(3));
    const FiniteMetricSpace x = random_space(rng, n_x);
    const FiniteMetricSpace y = random_space(rng, n_y);
    const Correspondence big = random_correspondence(rng, n_x, n_y);
    // Shrink: keep a random nonempty prefix of the pair list.
    const std::size_t keep = 1 + rng.next_below(big.pairs().size());
    std::vector<std::pair<int, int>> subset(big.pairs().begin(),
                                            big.pairs().begin() + static_cast<long>(keep));
    const Relation small(n_x, n_y, std::move(subset));
    CHECK(distortion(small, x, y) <= distortion(big.relation(), x, y));
  }
}

TEST_CASE("distortion of any correspondence dominates the diameter gap") {
  Lcg64 rng(31);
  for (int round = 0; round < 50; ++round) {
    const int n_x = 1 + static_cast<int>(rng.next_below(4));
    const int n_y = 1 + static_cast<int>(rng.next_below(4));
    const FiniteMetricSpace x = random_space(rng, n_x);
    const FiniteMetricSpace y = random_space(rng, n_y);
    const Correspondence corr = random_correspondence(rng, n_x, n_y);
    CHECK(distortion(corr, x, y) >= std::abs(x.diameter() - y.diameter()));
  }
}

TEST_CASE("distortion early-exits above the ceiling") {
  const FiniteMetricSpace x = line({0, 1});
  const FiniteMetricSpace y = line({0, 100});
  const double d = distortion(Correspondence::identity(2), x, y, 0.5);
  CHECK(d > 0.5);  // exact value not guaranteed once the ceiling trips
}

TEST_CASE("product correspondence has product cardinality") {
  const Correspondence r1 = Correspondence::full(2, 1);    // 2 pairs
  const Correspondence r2 = Correspondence::full(1, 3);    // 3 pairs
  const Correspondence prod = product_correspondence(r1, r2);
  CHECK(prod.pairs().size() == 6);
  CHECK(prod.n_x() == 2);
  CHECK(prod.n_y() == 3);
}

TEST_CASE("product correspondence distortion worked example") {
  // R1 = identity on {0,1} (dis 0), R2 = bijection {0,1} -> {0,2} (dis 1):
  // dis(R1 x R2) = 1 on the 4-point products.
  const FiniteMetricSpace a = line({0, 1});
  const FiniteMetricSpace b1 = line({0, 1});
  const FiniteMetricSpace b2 = line({0, 2});
  const Correspondence r1 = Correspondence::identity(2);
  const Correspondence r2{Relation(2, 2, {{0, 0}, {1, 1}})};
  CHECK(distortion(r1, a, a) == 0.0);
  CHECK(distortion(r2, b1, b2) == 1.0);

  const Correspondence prod = product_correspondence(r1, r2);
  CHECK(distortion(prod, l1_product(a, b1), l1_product(a, b2)) == 1.0);
}

TEST_CASE("product correspondence is subadditive in distortion") {
  Lcg64 rng(37);
  for (int round = 0; round < 100; ++round) {
    const int na = 1 + static_cast<int>(rng.next_below(3));
    const int nb = 1 + static_cast<int>(rng.next_below(3));
    const FiniteMetricSpace a1 = random_space(rng, na);
    const FiniteMetricSpace a2 = random_space(rng, na);
    const FiniteMetricSpace b1 = random_space(rng, nb);
    const FiniteMetricSpace b2 = random_space(rng, nb);
    const Correspondence r1 = random_correspondence(rng, na, na);
    const Correspondence r2 = random_correspondence(rng, nb, nb);

    // Construction re-checks the correspondence invariant (coverage).
    const Correspondence prod = product_correspondence(r1, r2);
    const double lhs = distortion(prod, l1_product(a1, b1), l1_product(a2, b2));
    const double rhs = distortion(r1, a1, a2) + distortion(r2, b1, b2);
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("hausdorff distance basics") {
  const FiniteMetricSpace z = line({0, 1, 2});
  CHECK(hausdorff_distance({0, 1}, {0, 1}, z) == 0.0);
  CHECK(hausdorff_distance({0}, {0, 1}, line({0, 2})) == 2.0);
  CHECK(hausdorff_distance({0, 1}, {2}, z) == 2.0);
  CHECK_THROWS_AS(hausdorff_distance({}, {0}, z), EmptySubsetError);
  CHECK_THROWS_AS(hausdorff_distance({0}, {3}, z), IndexOutOfRangeError);
}

TEST_CASE("hausdorff distance vanishes exactly on equal subsets") {
  const FiniteMetricSpace z = line({0, 1, 4, 9});
  Lcg64 rng(41);
  for (int round = 0; round < 50; ++round) {
    std::vector<int> subset_i, subset_j;
    for (int v = 0; v < 4; ++v) {
      if (rng.next_below(2)) subset_i.push_back(v);
      if (rng.next_below(2)) subset_j.push_back(v);
    }
    if (subset_i.empty() || subset_j.empty()) continue;
    const bool equal_sets = subset_i == subset_j;  // both sorted by construction
    CHECK((hausdorff_distance(subset_i, subset_j, z) == 0.0) == equal_sets);
  }
}

TEST_CASE("minimal correspondences: forced and bijective cases") {
  CHECK(enumerate_minimal_correspondences(2, 1).size() == 1);
  const auto two_by_two = enumerate_minimal_correspondences(2, 2);
  REQUIRE(two_by_two.size() == 2);
  CHECK(two_by_two[0].pairs() == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK(two_by_two[1].pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
}

TEST_CASE("minimal correspondences match the brute-force filter") {
  for (auto [n_x, n_y] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 2}}) {
    const auto expected = oracles::brute_force_minimal_correspondences(n_x, n_y);
    const auto got = enumerate_minimal_correspondences(n_x, n_y);
    REQUIRE(got.size() == expected.size());
    std::vector<std::vector<std::pair<int, int>>> got_pairs;
    got_pairs.reserve(got.size());
    for (const auto& corr : got) got_pairs.push_back(corr.pairs());
    auto sorted = got_pairs;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == got_pairs);  // emitted in lexicographic order
    std::vector<std::vector<std::pair<int, int>>> expected_sorted = expected;
    std::sort(expected_sorted.begin(), expected_sorted.end());
    CHECK(got_pairs == expected_sorted);
  }
}

TEST_CASE("every correspondence contains an emitted minimal one") {
  const int n_x = 3, n_y = 3;
  const auto minimal = enumerate_minimal_correspondences(n_x, n_y);
  for (std::uint64_t mask = 1; mask < (1ULL << (n_x * n_y)); ++mask) {
    if (!oracles::mask_is_correspondence(mask, n_x, n_y)) continue;
    const auto pairs = oracles::mask_pairs(mask, n_x, n_y);
    const bool contains_minimal = std::any_of(
        minimal.begin(), minimal.end(), [&](const Correspondence& corr) {
          return std::includes(pairs.begin(), pairs.end(), corr.pairs().begin(),
                               corr.pairs().end());
        });
    CHECK(contains_minimal);
  }
}

TEST_CASE("minimal enumeration honors the early-stop visitor and the cap") {
  int seen = 0;
  for_each_minimal_correspondence(3, 3, [&](const Correspondence&) { return ++seen < 4; });
  CHECK(seen == 4);
  CHECK_THROWS_AS(enumerate_minimal_correspondences(9, 9), CapExceededError);
}

TEST_CASE("correspondence files round-trip") {
  const Correspondence corr{Relation(3, 2, {{0, 0}, {1, 1}, {2, 1}})};
  std::istringstream in(format_correspondence(corr));
  const Correspondence back = parse_correspondence(in);
  CHECK(back.pairs() == corr.pairs());
  CHECK(back.n_x() == 3);
  CHECK(back.n_y() == 2);
}
