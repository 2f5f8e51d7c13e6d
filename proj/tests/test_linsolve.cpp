#include "ambig/linsolve.hpp"

#include <random>

#include "doctest.h"

namespace ls = ambig::linsolve;
using ambig::Rat;
using ambig::rat;

namespace {

ls::Ineq ineq(std::vector<Rat> coeffs, Rat bound, bool strict) {
  return ls::Ineq{std::move(coeffs), std::move(bound), strict};
}

bool satisfies(const std::vector<ls::Ineq>& system,
               const std::vector<Rat>& point) {
  for (const auto& q : system) {
    Rat lhs = 0;
    for (std::size_t j = 0; j < point.size(); ++j)
      lhs += q.coeffs[j] * point[j];
    if (q.strict ? !(lhs < q.bound) : !(lhs <= q.bound)) return false;
  }
  return true;
}

// Independent feasibility witness search: scan a fine rational grid. Finding
// a point proves feasibility; not finding one proves nothing.
bool grid_witness(const std::vector<ls::Ineq>& system, int dim, int span,
                  int denom) {
  std::vector<Rat> point(dim);
  long steps = 2L * span * denom;
  if (dim == 1) {
    for (long a = -steps; a <= steps; ++a) {
      point[0] = rat(a, denom);
      if (satisfies(system, point)) return true;
    }
    return false;
  }
  REQUIRE(dim == 2);
  for (long a = -steps; a <= steps; ++a)
    for (long b = -steps; b <= steps; ++b) {
      point[0] = rat(a, denom);
      point[1] = rat(b, denom);
      if (satisfies(system, point)) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("echelon pivots, redundancy, and inconsistency are reported") {
  ls::LinearSystem sys(2);
  using R = ls::LinearSystem::AddResult;
  CHECK(sys.add_equation({rat(1), rat(1)}, rat(3)) == R::kNewPivot);
  CHECK(sys.add_equation({rat(1), rat(-1)}, rat(1)) == R::kNewPivot);
  CHECK(sys.add_equation({rat(2), rat(2)}, rat(6)) == R::kRedundant);
  CHECK(sys.add_equation({rat(1), rat(1)}, rat(4)) == R::kInconsistent);
  CHECK(sys.rank() == 2);
  auto fam = sys.solve();
  REQUIRE(fam.dim() == 0);
  CHECK(fam.origin == std::vector<Rat>{rat(2), rat(1)});
}

TEST_CASE("rollback restores the exact pre-mark state") {
  ls::LinearSystem sys(3);
  sys.add_equation({rat(1), rat(0), rat(0)}, rat(5));
  auto m = sys.mark();
  sys.add_equation({rat(0), rat(1), rat(0)}, rat(7));
  sys.add_equation({rat(0), rat(0), rat(1)}, rat(9));
  CHECK(sys.rank() == 3);
  sys.rollback(m);
  CHECK(sys.rank() == 1);
  // the freed columns accept fresh, different pivots
  CHECK(sys.add_equation({rat(0), rat(1), rat(1)}, rat(0)) ==
        ls::LinearSystem::AddResult::kNewPivot);
  auto fam = sys.solve();
  CHECK(fam.dim() == 1);
  auto p = fam.at({rat(4)});
  CHECK(p[0] == rat(5));
  CHECK(p[1] + p[2] == rat(0));
}

TEST_CASE("underdetermined systems expose an affine family") {
  ls::LinearSystem sys(3);
  sys.add_equation({rat(1), rat(1), rat(1)}, rat(1));
  auto fam = sys.solve();
  REQUIRE(fam.dim() == 2);
  CHECK(fam.free_vars == std::vector<int>{1, 2});
  for (const auto& params :
       {std::vector<Rat>{rat(0), rat(0)}, std::vector<Rat>{rat(2), rat(-3)},
        std::vector<Rat>{rat(1, 7), rat(5, 3)}}) {
    auto p = fam.at(params);
    CHECK(p[0] + p[1] + p[2] == rat(1));
    CHECK(p[1] == params[0]);
    CHECK(p[2] == params[1]);
  }
}

TEST_CASE("reduce rewrites expressions over the free variables only") {
  ls::LinearSystem sys(4);
  sys.add_equation({rat(1), rat(0), rat(1), rat(0)}, rat(2));  // x0 = 2 - x2
  sys.add_equation({rat(0), rat(1), rat(0), rat(1)}, rat(3));  // x1 = 3 - x3
  std::vector<Rat> coeffs;
  Rat constant;
  sys.reduce({rat(1), rat(1), rat(0), rat(0)}, rat(5), coeffs, constant);
  CHECK(coeffs == std::vector<Rat>{rat(0), rat(0), rat(-1), rat(-1)});
  CHECK(constant == rat(10));
  // pivot introduced after another row referenced its column
  ls::LinearSystem chain(3);
  chain.add_equation({rat(1), rat(0), rat(2)}, rat(4));  // pivot x0, uses x2
  chain.add_equation({rat(0), rat(0), rat(1)}, rat(1));  // pivot x2
  chain.reduce({rat(1), rat(0), rat(0)}, rat(0), coeffs, constant);
  CHECK(coeffs == std::vector<Rat>{rat(0), rat(0), rat(0)});
  CHECK(constant == rat(2));
}

TEST_CASE("normalization produces primitive integer coefficients") {
  auto q = ls::normalized(ineq({rat(2, 3), rat(-4, 9)}, rat(5, 6), true));
  CHECK(q.coeffs == std::vector<Rat>{rat(3), rat(-2)});
  CHECK(q.bound == rat(15, 4));
  CHECK(q.strict);
  auto z = ls::normalized(ineq({rat(0), rat(0)}, rat(1, 2), false));
  CHECK(z.coeffs == std::vector<Rat>{rat(0), rat(0)});
  CHECK(z.bound == rat(1, 2));
}

TEST_CASE("feasibility separates open and closed boundary cases") {
  // x >= 1 and x <= 1 pin a single point
  std::vector<ls::Ineq> pinned = {ineq({rat(-1)}, rat(-1), false),
                                  ineq({rat(1)}, rat(1), false)};
  CHECK(ls::feasible(pinned, 1));
  auto point = ls::sample_point(pinned, 1);
  REQUIRE(point.has_value());
  CHECK((*point)[0] == rat(1));

  // x >= 1 and x < 1 is empty, as is the doubly strict pair
  CHECK_FALSE(ls::feasible({ineq({rat(-1)}, rat(-1), false),
                            ineq({rat(1)}, rat(1), true)},
                           1));
  CHECK_FALSE(ls::feasible({ineq({rat(-1)}, rat(-1), true),
                            ineq({rat(1)}, rat(1), true)},
                           1));
}

TEST_CASE("strict triangle admits a strictly interior sample") {
  std::vector<ls::Ineq> tri = {
      ineq({rat(-1), rat(0)}, rat(0), true),   // x > 0
      ineq({rat(0), rat(-1)}, rat(0), true),   // y > 0
      ineq({rat(1), rat(1)}, rat(1), true),    // x + y < 1
  };
  CHECK(ls::feasible(tri, 2));
  auto p = ls::sample_point(tri, 2);
  REQUIRE(p.has_value());
  CHECK((*p)[0] > 0);
  CHECK((*p)[1] > 0);
  CHECK((*p)[0] + (*p)[1] < 1);

  auto blocked = tri;
  blocked.push_back(ineq({rat(-1), rat(-1)}, rat(-2), false));  // x + y >= 2
  CHECK_FALSE(ls::feasible(blocked, 2));
  CHECK_FALSE(ls::sample_point(blocked, 2).has_value());
}

TEST_CASE("coordinate ranges carry strictness and unboundedness") {
  std::vector<ls::Ineq> box = {
      ineq({rat(-1), rat(0)}, rat(0), true),  // x > 0
      ineq({rat(1), rat(0)}, rat(1), true),   // x < 1
      ineq({rat(-1), rat(1)}, rat(0), true),  // y < x
      ineq({rat(0), rat(-1)}, rat(0), false), // y >= 0
  };
  auto rx = ls::coordinate_range(box, 2, 0);
  REQUIRE(rx.has_value());
  CHECK(rx->lo == rat(0));
  CHECK(rx->lo_strict);
  CHECK(rx->hi == rat(1));
  CHECK(rx->hi_strict);

  auto ry = ls::coordinate_range(box, 2, 1);
  REQUIRE(ry.has_value());
  CHECK(ry->lo == rat(0));
  CHECK_FALSE(ry->lo_strict);
  CHECK(ry->hi == rat(1));
  CHECK(ry->hi_strict);

  std::vector<ls::Ineq> ray = {ineq({rat(-1)}, rat(0), true)};  // x > 0
  auto rr = ls::coordinate_range(ray, 1, 0);
  REQUIRE(rr.has_value());
  CHECK(rr->lo == rat(0));
  CHECK(rr->lo_strict);
  CHECK(rr->hi_unbounded);

  CHECK_FALSE(ls::coordinate_range({ineq({rat(1), rat(0)}, rat(-1), false),
                                    ineq({rat(-1), rat(0)}, rat(0), false)},
                                   2, 1)
                  .has_value());
}

TEST_CASE("ordering chains behave like the electrical-angle window") {
  // -1/2 < x0 < x1 < x2 <= 1/2 ; x0 + x2 = 0 folded in by substitution
  // as x2 = -x0, leaving two variables.
  std::vector<ls::Ineq> chain = {
      ineq({rat(-1), rat(0)}, rat(1, 2), true),   // x0 > -1/2
      ineq({rat(1), rat(-1)}, rat(0), true),      // x0 < x1
      ineq({rat(1), rat(1)}, rat(0), true),       // x1 < -x0
      ineq({rat(-1), rat(0)}, rat(1, 2), false),  // -x0 <= 1/2
  };
  CHECK(ls::feasible(chain, 2));
  auto r0 = ls::coordinate_range(chain, 2, 0);
  REQUIRE(r0.has_value());
  CHECK(r0->lo == rat(-1, 2));
  CHECK(r0->lo_strict);
  CHECK(r0->hi == rat(0));
  CHECK(r0->hi_strict);
  auto r1 = ls::coordinate_range(chain, 2, 1);
  REQUIRE(r1.has_value());
  CHECK(r1->lo == rat(-1, 2));
  CHECK(r1->hi == rat(1, 2));
  CHECK(r1->hi_strict);
}

TEST_CASE("redundant inequalities are dropped, tight ones kept") {
  std::vector<ls::Ineq> sys = {
      ineq({rat(1)}, rat(1), true),    // x < 1
      ineq({rat(1)}, rat(2), false),   // x <= 2, implied
      ineq({rat(1)}, rat(1), false),   // x <= 1, implied by x < 1
      ineq({rat(-1)}, rat(0), false),  // x >= 0
  };
  auto kept = ls::irredundant(sys, 1);
  REQUIRE(kept.size() == 2);
  bool has_upper = false, has_lower = false;
  for (const auto& q : kept) {
    if (q.coeffs[0] > 0) {
      has_upper = true;
      CHECK(q.bound == rat(1));
      CHECK(q.strict);
    } else {
      has_lower = true;
      CHECK(q.bound == rat(0));
    }
  }
  CHECK(has_upper);
  CHECK(has_lower);
}

TEST_CASE("implicit equalities are detected across combined bounds") {
  // x + y <= 1 and x + y >= 1 squeeze a diagonal
  std::vector<ls::Ineq> sys = {
      ineq({rat(1), rat(1)}, rat(1), false),
      ineq({rat(-1), rat(-1)}, rat(-1), false),
      ineq({rat(0), rat(1)}, rat(1), true),
      ineq({rat(0), rat(-1)}, rat(0), true),
  };
  REQUIRE(ls::feasible(sys, 2));
  auto eqs = ls::implicit_equalities(sys, 2);
  REQUIRE(eqs.size() == 2);  // both weak faces are forced to equality
  for (const auto& q : eqs) CHECK_FALSE(q.strict);
  auto none = ls::implicit_equalities(
      {ineq({rat(1), rat(0)}, rat(1), false),
       ineq({rat(-1), rat(0)}, rat(0), false)},
      2);
  CHECK(none.empty());
}

TEST_CASE("randomized systems agree with a grid witness oracle") {
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> bound(-4, 4);
  std::uniform_int_distribution<int> strictness(0, 1);
  std::uniform_int_distribution<int> count(2, 6);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<ls::Ineq> sys;
    int rows = count(rng);
    for (int r = 0; r < rows; ++r) {
      std::vector<Rat> c = {rat(coeff(rng)), rat(coeff(rng))};
      sys.push_back(ineq(std::move(c), rat(bound(rng), 2), strictness(rng)));
    }
    bool fm = ls::feasible(sys, 2);
    auto sample = ls::sample_point(sys, 2);
    CHECK(fm == sample.has_value());
    if (sample) {
      CHECK(satisfies(sys, *sample));
      ++feasible_seen;
    } else {
      // denominators in play are 1 and 2 with coefficients <= 3, so an
      // empty 1/8 grid over [-8, 8] squared corroborates emptiness
      CHECK_FALSE(grid_witness(sys, 2, 8, 8));
      ++infeasible_seen;
    }
  }
  CHECK(feasible_seen > 10);
  CHECK(infeasible_seen > 10);
}

TEST_CASE("five-variable chains keep exact strict interior points") {
  // 0 < t0 < t1 < t2 < t3 < t4 < 1 plus a coupling t0 + t4 <= 3/4
  std::vector<ls::Ineq> sys;
  auto unit = [](int i, int dim, Rat v) {
    std::vector<Rat> c(dim, rat(0));
    c[i] = v;
    return c;
  };
  const int dim = 5;
  sys.push_back(ineq(unit(0, dim, rat(-1)), rat(0), true));
  for (int i = 0; i + 1 < dim; ++i) {
    std::vector<Rat> c(dim, rat(0));
    c[i] = 1;
    c[i + 1] = -1;
    sys.push_back(ineq(std::move(c), rat(0), true));
  }
  sys.push_back(ineq(unit(dim - 1, dim, rat(1)), rat(1), true));
  std::vector<Rat> couple(dim, rat(0));
  couple[0] = 1;
  couple[4] = 1;
  sys.push_back(ineq(std::move(couple), rat(3, 4), false));

  REQUIRE(ls::feasible(sys, dim));
  auto p = ls::sample_point(sys, dim);
  REQUIRE(p.has_value());
  CHECK(satisfies(sys, *p));
  for (int i = 0; i + 1 < dim; ++i) CHECK((*p)[i] < (*p)[i + 1]);
  auto r4 = ls::coordinate_range(sys, dim, 4);
  REQUIRE(r4.has_value());
  CHECK(r4->lo == rat(0));  // infimum from the chain, never attained
  CHECK(r4->lo_strict);
  CHECK(r4->hi == rat(3, 4));
  CHECK(r4->hi_strict);  // t4 <= 3/4 - t0 with t0 > 0 keeps it open
}
