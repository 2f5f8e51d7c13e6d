#include "ambig/tableaux.hpp"

#include <algorithm>
#include <complex>
#include <random>
#include <set>
#include <vector>

#include "ambig/rational.hpp"
#include "doctest.h"

using namespace ambig;
using namespace ambig::tableaux;

namespace {

// Independent count oracle: the number of semistandard fillings of the shape
// attached to positions r equals prod_{i<k} (r_k - r_i) / (k - i). Evaluated
// in exact rationals; the result must come out integral.
std::uint64_t count_oracle(const std::vector<long>& r) {
  Rat p(1);
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t k = i + 1; k < r.size(); ++k)
      p *= rat(r[k] - r[i], static_cast<long>(k - i));
  return static_cast<std::uint64_t>(rat_to_long(p));
}

std::vector<int> flatten(const Tableau& t) {
  std::vector<int> f;
  for (const auto& row : t.rows) f.insert(f.end(), row.begin(), row.end());
  return f;
}

}  // namespace

TEST_CASE("shape attaches to positions by subtracting the staircase") {
  CHECK(shape_of({1, 2, 5}) == Shape{1, 1, 3});
  CHECK(shape_of({0, 1, 3, 4}) == Shape{0, 0, 1, 1});
  CHECK(shape_of({0, 1, 2, 3}) == Shape{0, 0, 0, 0});
}

TEST_CASE("enumeration of shape (1,1,3) with entries up to 3") {
  auto ts = enumerate_ssyt({1, 1, 3}, 3);
  REQUIRE(ts.size() == 6);
  // Row-major lexicographic order; first column is forced to 1,2,3.
  std::vector<std::vector<int>> expect = {
      {1, 1, 1, 2, 3}, {1, 1, 2, 2, 3}, {1, 1, 3, 2, 3},
      {1, 2, 2, 2, 3}, {1, 2, 3, 2, 3}, {1, 3, 3, 2, 3}};
  for (size_t i = 0; i < ts.size(); ++i) {
    REQUIRE(ts[i].rows.size() == 3);
    CHECK(ts[i].rows[0].size() == 3);
    CHECK(ts[i].rows[1].size() == 1);
    CHECK(ts[i].rows[2].size() == 1);
    CHECK(flatten(ts[i]) == expect[i]);
  }
}

TEST_CASE("all-zero shape yields the single empty tableau") {
  auto ts = enumerate_ssyt({0, 0, 0, 0}, 4);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].rows.empty());
  CHECK(weight_of(ts[0], 4) == std::vector<long>{0, 0, 0, 0});
}

TEST_CASE("two-box column shape lists all index pairs") {
  auto ts = enumerate_ssyt({0, 0, 1, 1}, 4);
  REQUIRE(ts.size() == 6);
  std::set<std::pair<int, int>> pairs;
  for (const auto& t : ts) {
    REQUIRE(t.rows.size() == 2);
    REQUIRE(t.rows[0].size() == 1);
    REQUIRE(t.rows[1].size() == 1);
    CHECK(t.rows[0][0] < t.rows[1][0]);
    pairs.emplace(t.rows[0][0], t.rows[1][0]);
  }
  CHECK(pairs.size() == 6);  // all {i<j} within {1..4}
}

TEST_CASE("counts match the published table for arrays inside (0..5)") {
  struct Row {
    std::vector<long> r;
    std::uint64_t n;
  };
  const std::vector<Row> table = {
      {{0, 2}, 2},          {{0, 3}, 3},          {{0, 4}, 4},
      {{0, 5}, 5},          {{0, 1, 3}, 3},       {{0, 1, 4}, 6},
      {{0, 1, 5}, 10},      {{0, 2, 3}, 3},       {{0, 2, 4}, 8},
      {{0, 2, 5}, 15},      {{0, 3, 4}, 6},       {{0, 3, 5}, 15},
      {{0, 4, 5}, 10},      {{0, 1, 2, 4}, 4},    {{0, 1, 2, 5}, 10},
      {{0, 1, 3, 4}, 6},    {{0, 1, 3, 5}, 20},   {{0, 1, 4, 5}, 20},
      {{0, 2, 3, 4}, 4},    {{0, 2, 3, 5}, 15},   {{0, 2, 4, 5}, 20},
      {{0, 3, 4, 5}, 10},   {{0, 1, 2, 3, 5}, 5}, {{0, 1, 2, 4, 5}, 10},
      {{0, 1, 3, 4, 5}, 10}, {{0, 2, 3, 4, 5}, 5}};
  for (const auto& row : table) {
    const int m = static_cast<int>(row.r.size());
    CAPTURE(row.r);
    CHECK(count_oracle(row.r) == row.n);
    CHECK(ssyt_count(shape_of(row.r), m) == row.n);
    CHECK(enumerate_ssyt(shape_of(row.r), m).size() == row.n);
  }
  CHECK(ssyt_count(shape_of({0, 1, 2, 3}), 4) == 1);
}

TEST_CASE("weights count symbol occurrences and share a common row sum") {
  // Worked filling of shape (1,3,4): rows (1,1,2,3 / 2,3,3 / 3).
  Tableau t{{{1, 1, 2, 3}, {2, 3, 3}, {3}}};
  CHECK(weight_of(t, 3) == std::vector<long>{2, 2, 4});

  auto alpha = weight_matrix({1, 1, 3}, 3);
  REQUIRE(alpha.size() == 6);
  for (const auto& row : alpha) {
    long s = 0;
    for (long v : row) s += v;
    CHECK(s == 5);  // sum of the parts
  }
}

TEST_CASE("schur evaluation matches the closed form for shape (1,1,3)") {
  auto alpha = weight_matrix({1, 1, 3}, 3);
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::complex<double>> z(3);
    for (auto& v : z) v = {dist(gen), dist(gen)};
    auto [z1, z2, z3] = std::tuple{z[0], z[1], z[2]};
    auto expect = z1 * z2 * z3 *
                  (z1 * z1 + z1 * z2 + z2 * z2 + z1 * z3 + z2 * z3 + z3 * z3);
    auto got = schur_eval(alpha, z);
    CHECK(std::abs(got - expect) <= 1e-10 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("schur evaluation is symmetric under argument permutation") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (const Shape& lambda : {Shape{1, 1, 3}, Shape{0, 0, 1, 1}, Shape{0, 2, 3}}) {
    const int m = static_cast<int>(lambda.size());
    auto alpha = weight_matrix(lambda, m);
    std::vector<std::complex<double>> z(m);
    for (auto& v : z) v = {dist(gen), dist(gen)};
    auto base = schur_eval(alpha, z);
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    do {
      std::vector<std::complex<double>> zp(m);
      for (int i = 0; i < m; ++i) zp[i] = z[perm[i]];
      auto got = schur_eval(alpha, zp);
      CHECK(std::abs(got - base) <= 1e-10 * std::max(1.0, std::abs(base)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("weight rows permute consistently with relabeled entries") {
  SUBCASE("identity maps to identity") {
    auto alpha = weight_matrix({0, 0, 1, 1}, 4);
    auto gamma = permute_weight_rows(alpha, {0, 1, 2, 3});
    for (int l = 0; l < 6; ++l) CHECK(gamma[l] == l);
  }
  SUBCASE("swap of the first two symbols on the pair shape") {
    auto alpha = weight_matrix({0, 0, 1, 1}, 4);
    auto gamma = permute_weight_rows(alpha, {1, 0, 2, 3});
    // Rows are pairs {i<j}; swapping symbols 1,2 maps {1,3}<->{2,3} etc.
    for (size_t l = 0; l < alpha.size(); ++l)
      for (int m = 0; m < 4; ++m) {
        int pre = (m == 0) ? 1 : (m == 1) ? 0 : m;
        CHECK(alpha[static_cast<size_t>(gamma[l])][static_cast<size_t>(m)] ==
              alpha[l][static_cast<size_t>(pre)]);
      }
  }
  SUBCASE("every permutation admits a row permutation on shape (1,1,3)") {
    auto alpha = weight_matrix({1, 1, 3}, 3);
    std::vector<int> tau = {0, 1, 2};
    do {
      auto gamma = permute_weight_rows(alpha, tau);
      std::vector<int> tau_inv(3);
      for (int i = 0; i < 3; ++i) tau_inv[tau[i]] = i;
      std::set<int> seen;
      for (size_t l = 0; l < alpha.size(); ++l) {
        seen.insert(gamma[l]);
        for (int m = 0; m < 3; ++m)
          CHECK(alpha[static_cast<size_t>(gamma[l])][static_cast<size_t>(m)] ==
                alpha[l][static_cast<size_t>(tau_inv[m])]);
      }
      CHECK(seen.size() == alpha.size());
    } while (std::next_permutation(tau.begin(), tau.end()));
  }
}
