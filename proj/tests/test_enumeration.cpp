#include "ambig/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "ambig/array_core.hpp"
#include "ambig/tableaux.hpp"

namespace en = ambig::enumeration;
namespace core = ambig::core;
namespace ls = ambig::linsolve;
using ambig::Rat;
using ambig::rat;

namespace {

core::LinearArray arr0134() { return core::make_array({0, 1, 3, 4}); }

std::vector<ls::Ineq> open_box(const Rat& lo, const Rat& hi) {
  return {ls::Ineq{{Rat(-1)}, -lo, true}, ls::Ineq{{Rat(1)}, hi, true}};
}

std::string line_key(std::vector<Rat> consts, std::vector<Rat> dir,
                     const Rat& lo, const Rat& hi) {
  return en::canonical_key(en::class_from_family(
      std::move(consts), {std::move(dir)}, open_box(lo, hi)));
}

std::string point_key(std::vector<Rat> pt) {
  return en::canonical_key(en::class_from_family(std::move(pt), {}, {}));
}

// The four families of the (0,1,3,4) array, written down independently of
// the search: for each, every member is rank-deficient.
//   pair_family: {-1/2, s, 0, -s}; the columns at s and -s are conjugate and
//     the -1/2 and 0 columns are real, so the four columns satisfy one real
//     linear relation.
//   stretch_family: {-1/2, s, 1/2+2s, 1/2+s}.
//   free_angle_family: {-1/2, -1/6, 1/6, s}; the first three angles already
//     have dependent steering vectors, any fourth angle completes a class.
//   triple_family: {-1/2, t, t+1/3, t+2/3}; three angles a third of a turn
//     apart have both their first and second elementary symmetric functions
//     vanish, so any fourth angle (here the pinned one) completes a class.
std::string pair_family_key() {
  return line_key({rat(-1, 2), Rat(0), Rat(0), Rat(0)},
                  {Rat(0), Rat(1), Rat(0), Rat(-1)}, rat(-1, 2), Rat(0));
}
std::string stretch_family_key() {
  return line_key({rat(-1, 2), Rat(0), rat(1, 2), rat(1, 2)},
                  {Rat(0), Rat(1), Rat(2), Rat(1)}, rat(-1, 2), Rat(0));
}
std::string free_angle_family_key() {
  return line_key({rat(-1, 2), rat(-1, 6), rat(1, 6), Rat(0)},
                  {Rat(0), Rat(0), Rat(0), Rat(1)}, rat(-1, 2), rat(1, 2));
}
std::string triple_family_key() {
  return line_key({rat(-1, 2), Rat(0), rat(1, 3), rat(2, 3)},
                  {Rat(0), Rat(1), Rat(1), Rat(1)}, rat(-1, 2), rat(-1, 6));
}

// The eight isolated ambiguities of (0,1,3,4), in turns.
std::set<std::string> discrete_keys_0134() {
  using V = std::vector<Rat>;
  std::set<std::string> keys;
  for (const V& pt : {
           V{rat(-1, 2), rat(-7, 15), rat(-4, 15), rat(1, 10)},
           V{rat(-1, 2), rat(-7, 15), rat(-1, 15), rat(3, 10)},
           V{rat(-1, 2), rat(-3, 10), rat(-4, 15), rat(2, 15)},
           V{rat(-1, 2), rat(-3, 10), rat(1, 15), rat(7, 15)},
           V{rat(-1, 2), rat(-2, 15), rat(1, 15), rat(1, 10)},
           V{rat(-1, 2), rat(-2, 15), rat(4, 15), rat(3, 10)},
           V{rat(-1, 2), rat(-1, 10), rat(-1, 15), rat(2, 15)},
           V{rat(-1, 2), rat(-1, 10), rat(4, 15), rat(7, 15)},
       })
    keys.insert(point_key(pt));
  return keys;
}

std::set<std::string> key_set(const std::vector<en::AmbiguityClass>& classes) {
  std::set<std::string> keys;
  for (const auto& cls : classes) keys.insert(en::canonical_key(cls));
  REQUIRE(keys.size() == classes.size());
  return keys;
}

std::vector<double> to_radians(const std::vector<Rat>& turns) {
  std::vector<double> out(turns.size());
  for (std::size_t i = 0; i < turns.size(); ++i)
    out[i] = 2.0 * std::numbers::pi * ambig::rat_to_double(turns[i]);
  return out;
}

}  // namespace

TEST_CASE("linear feasibility reproduces the rotation-pair family") {
  // three length-2 sums assigned across the six weight rows; the solved
  // family must be exactly {-1/2, s, 0, -s}
  en::Configuration cfg;
  cfg.parts = {2, 2, 2};
  cfg.sum_index = {0, 0, 0};
  cfg.block_of_slot = {0, 1, 2, 0, 1, 2};
  cfg.root_of_slot = {0, 0, 0, 1, 1, 1};
  cfg.x = {-1, -1, -1, -1, 0, 0};
  cfg.z = {0, 0, 0, 0, 1, 1};
  auto sol = en::solve_linear_feasibility(arr0134(), cfg);
  REQUIRE(sol.has_value());
  REQUIRE(sol->family.dim() == 1);
  // vars are phi_2, phi_3, phi_4, then the three rotations
  CHECK(sol->family.origin[1] == 0);
  CHECK(sol->family.directions[0][1] == 0);
  CHECK(sol->family.origin[2] == -sol->family.origin[0]);
  CHECK(sol->family.directions[0][2] == -sol->family.directions[0][0]);
  std::vector<Rat> pc = {rat(-1, 2), sol->family.origin[0],
                         sol->family.origin[1], sol->family.origin[2]};
  std::vector<Rat> pd = {Rat(0), sol->family.directions[0][0],
                         sol->family.directions[0][1],
                         sol->family.directions[0][2]};
  auto cls = en::class_from_family(pc, {pd}, sol->domain);
  CHECK(en::canonical_key(cls) == pair_family_key());
}

TEST_CASE("contradictory and out-of-range configurations") {
  en::Configuration cfg;
  cfg.parts = {2, 2, 2};
  cfg.sum_index = {0, 0, 0};
  cfg.block_of_slot = {0, 0, 1, 1, 2, 2};
  cfg.root_of_slot = {0, 1, 0, 1, 0, 1};
  cfg.x = {1, 0, 0, 0, 0, 0};
  cfg.z = {0, 0, 0, 0, 0, 0};
  // rows 0+5 and 1+4 add up to the same left side but different right sides
  CHECK_FALSE(en::solve_linear_feasibility(arr0134(), cfg).has_value());

  en::Configuration ok;
  ok.parts = {2, 2, 2};
  ok.sum_index = {0, 0, 0};
  ok.block_of_slot = {0, 1, 2, 0, 1, 2};
  ok.root_of_slot = {0, 0, 0, 1, 1, 1};
  ok.x = {-1, -1, -1, -1, 0, 0};
  ok.z = {0, 0, 0, 0, 1, 1};

  en::Configuration bad = ok;
  bad.z[0] = 1;  // carry on a zero phase can never happen
  CHECK_FALSE(en::solve_linear_feasibility(arr0134(), bad).has_value());

  bad = ok;
  bad.z[0] = 2;
  CHECK_THROWS_AS(en::solve_linear_feasibility(arr0134(), bad),
                  std::invalid_argument);
  bad = ok;
  bad.root_of_slot[0] = 7;
  CHECK_THROWS_AS(en::solve_linear_feasibility(arr0134(), bad),
                  std::invalid_argument);
  bad = ok;
  bad.x.pop_back();
  CHECK_THROWS_AS(en::solve_linear_feasibility(arr0134(), bad),
                  std::invalid_argument);
}

TEST_CASE("partition 2+2+2 yields the two rotation-pair families") {
  auto rep = en::enumerate_partition(arr0134(), {2, 2, 2}, {}, {});
  CHECK(rep.complete);
  CHECK(rep.classes.size() == 2);
  auto keys = key_set(rep.classes);
  CHECK(keys.count(pair_family_key()) == 1);
  CHECK(keys.count(stretch_family_key()) == 1);
  // three equal parts: distinguishing the blocks multiplies the count by 3!
  CHECK(rep.config_count_ordered == rep.config_count * 6);

  en::Options raw;
  raw.prune = false;
  auto unpruned = en::enumerate_partition(arr0134(), {2, 2, 2}, {}, raw);
  CHECK(unpruned.config_count == rep.config_count_ordered);
  CHECK(unpruned.config_count == unpruned.config_count_ordered);
  CHECK(key_set(unpruned.classes) == keys);
}

TEST_CASE("partition 3+3 yields the free-angle family and the floating triple") {
  auto rep = en::enumerate_partition(arr0134(), {3, 3}, {}, {});
  CHECK(rep.complete);
  auto keys = key_set(rep.classes);
  CHECK(keys.count(free_angle_family_key()) == 1);
  CHECK(keys.count(triple_family_key()) == 1);
  CHECK(rep.classes.size() == 2);
  CHECK(rep.config_count_ordered == rep.config_count * 2);
}

TEST_CASE("partition 6 yields exactly the eight isolated ambiguities") {
  auto rep = en::enumerate_partition(arr0134(), {6}, {}, {});
  CHECK(rep.complete);
  CHECK(rep.config_count == 8);
  CHECK(rep.config_count_ordered == 8);
  REQUIRE(rep.classes.size() == 8);
  for (const auto& cls : rep.classes) CHECK(cls.discrete());
  CHECK(key_set(rep.classes) == discrete_keys_0134());
}

TEST_CASE("full enumeration of (0,1,3,4)") {
  auto rep = en::enumerate_all(arr0134(), {}, {});
  CHECK(rep.N == 6);
  REQUIRE(rep.partitions.size() == 3);
  CHECK(rep.partitions[0].parts == std::vector<int>{2, 2, 2});
  CHECK(rep.partitions[1].parts == std::vector<int>{3, 3});
  CHECK(rep.partitions[2].parts == std::vector<int>{6});

  REQUIRE(rep.merged_classes.size() == 12);
  std::set<std::string> parametric, discrete;
  for (const auto& cls : rep.merged_classes) {
    CHECK(cls.verified);
    CHECK_FALSE(cls.provenance.empty());
    (cls.discrete() ? discrete : parametric).insert(en::canonical_key(cls));
  }
  CHECK(parametric == std::set<std::string>{pair_family_key(),
                                            stretch_family_key(),
                                            free_angle_family_key(),
                                            triple_family_key()});
  CHECK(discrete == discrete_keys_0134());
  // none of the eight isolated points sits inside any of the four families
  for (const auto& cls : rep.merged_classes) CHECK_FALSE(cls.subsumed);

  CHECK(en::check_uniform_coverage(arr0134(), rep));
}

TEST_CASE("ULA has no ambiguities to enumerate") {
  auto rep = en::enumerate_all(core::make_array({0, 1, 2, 3}), {}, {});
  CHECK(rep.N == 1);
  CHECK(rep.partitions.empty());
  CHECK(rep.merged_classes.empty());
}

TEST_CASE("pruning does not change the class catalog") {
  for (const auto& positions : {std::vector<long>{0, 1, 3},
                                std::vector<long>{0, 2, 3},
                                std::vector<long>{0, 1, 3, 4}}) {
    auto arr = core::make_array(positions);
    auto base = en::enumerate_all(arr, {}, {});

    en::Options raw;
    raw.prune = false;
    auto full = en::enumerate_all(arr, {}, raw);

    en::Options orbit;
    orbit.root_orbit_prune = true;
    auto reduced = en::enumerate_all(arr, {}, orbit);

    REQUIRE(base.partitions.size() == full.partitions.size());
    for (std::size_t i = 0; i < base.partitions.size(); ++i) {
      CHECK(key_set(base.partitions[i].classes) ==
            key_set(full.partitions[i].classes));
      CHECK(key_set(base.partitions[i].classes) ==
            key_set(reduced.partitions[i].classes));
      // unordered count times the orderings of equal parts = ordered count
      CHECK(base.partitions[i].config_count_ordered ==
            full.partitions[i].config_count);
    }
    CHECK(key_set(base.merged_classes) == key_set(full.merged_classes));
    CHECK(key_set(base.merged_classes) == key_set(reduced.merged_classes));
  }
}

TEST_CASE("any fixed angle ordering finds the same classes") {
  auto arr = arr0134();
  auto base = en::enumerate_all(arr, {}, {});
  for (const auto& chain :
       {std::vector<int>{0, 2, 1, 3}, std::vector<int>{0, 3, 1, 2},
        std::vector<int>{0, 3, 2, 1}}) {
    en::Options opt;
    opt.chain_order = chain;
    auto rep = en::enumerate_all(arr, {}, opt);
    CHECK(key_set(rep.merged_classes) == key_set(base.merged_classes));
  }
  en::Options bad;
  bad.chain_order = {1, 0, 2, 3};  // the pinned angle must come first
  CHECK_THROWS_AS(en::enumerate_all(arr, {}, bad), std::invalid_argument);
  bad.chain_order = {0, 1, 2};
  CHECK_THROWS_AS(en::enumerate_all(arr, {}, bad), std::invalid_argument);
  bad.chain_order = {0, 1, 1, 2};
  CHECK_THROWS_AS(en::enumerate_all(arr, {}, bad), std::invalid_argument);
}

TEST_CASE("canonicalize collapses reparameterizations and is idempotent") {
  // same line as the rotation-pair family, traversed backwards and shifted
  auto alt = en::class_from_family(
      {rat(-1, 2), Rat(1), Rat(0), Rat(-1)},
      {{Rat(0), Rat(-1), Rat(0), Rat(1)}}, open_box(rat(1, 2), rat(3, 2)));
  CHECK(en::canonical_key(alt) == pair_family_key());
  auto again = en::canonicalize(alt);
  CHECK(en::canonical_key(again) == pair_family_key());

  // scaled parameter: s' = 2s
  auto scaled = en::class_from_family(
      {rat(-1, 2), Rat(0), Rat(0), Rat(0)},
      {{Rat(0), rat(1, 2), Rat(0), rat(-1, 2)}}, open_box(Rat(-1), Rat(0)));
  CHECK(en::canonical_key(scaled) == pair_family_key());

  auto free_angle = en::class_from_family(
      {rat(-1, 2), rat(-1, 6), rat(1, 6), Rat(0)},
      {{Rat(0), Rat(0), Rat(0), Rat(1)}}, open_box(rat(-1, 2), rat(1, 2)));
  // punctured at the two collisions with the fixed angles
  REQUIRE(free_angle.parameter_domains.size() == 1);
  CHECK(free_angle.parameter_domains[0].size() == 3);
  CHECK(en::canonical_key(en::canonicalize(free_angle)) ==
        en::canonical_key(free_angle));

  auto pt = en::class_from_family(
      {rat(1, 10), rat(-1, 2), rat(2, 5)}, {}, {});
  CHECK(pt.phi_const == std::vector<Rat>{rat(-1, 2), rat(1, 10), rat(2, 5)});
  CHECK(en::canonical_key(en::canonicalize(pt)) == en::canonical_key(pt));

  CHECK_THROWS_AS(en::class_from_family({Rat(0), Rat(0), Rat(1)}, {}, {}),
                  std::invalid_argument);
}

TEST_CASE("two-parameter families get a unique reduced form") {
  std::vector<Rat> consts = {rat(-1, 2), rat(-1, 4), Rat(0), rat(1, 4)};
  std::vector<std::vector<Rat>> dirs = {{Rat(0), Rat(1), Rat(0), Rat(1)},
                                        {Rat(0), Rat(0), Rat(1), Rat(1)}};
  std::vector<ls::Ineq> dom = {
      ls::Ineq{{Rat(-1), Rat(0)}, rat(1, 10), true},
      ls::Ineq{{Rat(1), Rat(0)}, rat(1, 10), true},
      ls::Ineq{{Rat(0), Rat(-1)}, rat(1, 10), true},
      ls::Ineq{{Rat(0), Rat(1)}, rat(1, 10), true},
  };
  auto base = en::class_from_family(consts, dirs, dom);
  CHECK(base.param_count() == 2);
  REQUIRE(base.parameter_domains.size() == 2);
  for (const auto& ivs : base.parameter_domains) REQUIRE(ivs.size() == 1);

  // mix the direction rows and shift the origin along the first direction
  std::vector<std::vector<Rat>> mixed = {
      {Rat(0), Rat(1), Rat(1), Rat(2)},   // d1 + d2
      {Rat(0), Rat(0), Rat(-2), Rat(-2)}  // -2 d2
  };
  std::vector<Rat> moved = consts;
  for (int m = 0; m < 4; ++m) moved[m] += rat(1, 20) * dirs[0][m];
  // same plane: a point moved + a*(d1+d2) + b*(-2 d2) sits at s = 1/20 + a,
  // t = a - 2b of the original chart, so the square |s|,|t| < 1/10 becomes
  std::vector<ls::Ineq> dom2 = {
      ls::Ineq{{Rat(1), Rat(0)}, rat(1, 20), true},
      ls::Ineq{{Rat(-1), Rat(0)}, rat(3, 20), true},
      ls::Ineq{{Rat(1), Rat(-2)}, rat(1, 10), true},
      ls::Ineq{{Rat(-1), Rat(2)}, rat(1, 10), true},
  };
  auto redone = en::class_from_family(moved, mixed, dom2);
  CHECK(en::canonical_key(redone) == en::canonical_key(base));
  CHECK(en::canonical_key(en::canonicalize(base)) ==
        en::canonical_key(base));

  CHECK_THROWS_AS(
      en::class_from_family(consts,
                            {dirs[0], dirs[0]},  // dependent rows
                            dom),
      std::invalid_argument);
}

TEST_CASE("membership respects domains and punctures") {
  auto pair_cls = en::class_from_family(
      {rat(-1, 2), Rat(0), Rat(0), Rat(0)},
      {{Rat(0), Rat(1), Rat(0), Rat(-1)}}, open_box(rat(-1, 2), Rat(0)));
  CHECK(en::class_contains(pair_cls,
                           {rat(-1, 2), rat(-1, 4), Rat(0), rat(1, 4)}));
  // order of the queried angles must not matter
  CHECK(en::class_contains(pair_cls,
                           {rat(1, 4), Rat(0), rat(-1, 2), rat(-1, 4)}));
  CHECK_FALSE(en::class_contains(pair_cls,
                                 {rat(-1, 2), rat(-1, 4), Rat(0), rat(1, 5)}));

  auto free_angle = en::class_from_family(
      {rat(-1, 2), rat(-1, 6), rat(1, 6), Rat(0)},
      {{Rat(0), Rat(0), Rat(0), Rat(1)}}, open_box(rat(-1, 2), rat(1, 2)));
  CHECK(en::class_contains(free_angle,
                           {rat(-1, 2), rat(-1, 6), rat(1, 6), rat(3, 10)}));
  CHECK(en::class_contains(free_angle,
                           {rat(-1, 2), rat(-1, 6), rat(1, 6), rat(49, 100)}));
  CHECK(en::class_contains(free_angle,
                           {rat(-1, 2), rat(-1, 6), rat(1, 6), rat(-1, 3)}));
  CHECK_FALSE(en::class_contains(
      free_angle, {rat(-1, 2), rat(-1, 6), rat(1, 6), rat(1, 2)}));
  // parking the free angle on a fixed one lands exactly on a puncture
  CHECK_FALSE(en::class_contains(
      free_angle, {rat(-1, 2), rat(-1, 6), rat(1, 6), rat(-1, 6)}));
  CHECK_FALSE(en::class_contains(
      free_angle, {rat(-1, 2), rat(-1, 6), rat(1, 6), rat(3, 5)}));
}

TEST_CASE("uniform grid ambiguities") {
  auto u = en::uniform_ambiguities(arr0134());
  REQUIRE(u.size() == 1);
  CHECK(u[0] == std::vector<Rat>{rat(-1, 2), rat(-1, 4), Rat(0), rat(1, 4)});

  CHECK(en::uniform_ambiguities(core::make_array({0, 1, 2, 3})).empty());

  auto big = core::make_array({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12});
  auto ub = en::uniform_ambiguities(big);
  REQUIRE(ub.size() == 1);
  std::vector<Rat> expect(12);
  for (int c = 0; c < 12; ++c) expect[c] = rat(-1, 2) + rat(c, 12);
  CHECK(ub[0] == expect);

  CHECK_THROWS_AS(
      en::uniform_ambiguities(core::make_array({0, 1, 5}, rat(1, 2))),
      std::invalid_argument);
}

TEST_CASE("the uniform point lies in the rotation-pair family") {
  auto rep = en::enumerate_all(arr0134(), {}, {});
  const std::vector<Rat> uniform{rat(-1, 2), rat(-1, 4), Rat(0), rat(1, 4)};
  bool in_pair = false;
  for (const auto& cls : rep.merged_classes)
    if (en::canonical_key(cls) == pair_family_key())
      in_pair = en::class_contains(cls, uniform);
  CHECK(in_pair);
}

TEST_CASE("rotating all angles preserves ambiguity") {
  auto rep = en::enumerate_all(arr0134(), {}, {});
  const double tol = core::default_tol();
  int tested = 0;
  for (const auto& cls : rep.merged_classes) {
    if (tested >= 4) break;
    std::vector<Rat> sample = cls.phi_const;
    if (!cls.discrete()) {
      const auto& iv = cls.parameter_domains[0].front();
      const Rat mid = (iv.lo + iv.hi) / 2;
      for (std::size_t m = 0; m < sample.size(); ++m)
        sample[m] += cls.phi_dir[0][m] * mid;
    }
    auto rad = to_radians(sample);
    for (double mu : {0.37, -1.2}) {
      auto rotated = rad;
      for (double& x : rotated) x += mu;
      auto v = core::is_ambiguous(arr0134(), rotated, tol);
      CHECK(v.status == core::CheckStatus::kOk);
      CHECK(v.ambiguous);
    }
    ++tested;
  }
  CHECK(tested == 4);
}

TEST_CASE("symmetry-reduced skeletons") {
  auto skel = en::symmetry_reduced_search(arr0134(), {2, 2, 2});
  CHECK(skel.size() == 15);
  std::set<std::string> seen;
  for (const auto& cfg : skel) {
    CHECK(cfg.x.empty());
    CHECK(cfg.z.empty());
    REQUIRE(cfg.block_of_slot.size() == 6);
    std::vector<std::set<int>> roots(3);
    for (int l = 0; l < 6; ++l) {
      REQUIRE(cfg.block_of_slot[l] >= 0);
      REQUIRE(cfg.block_of_slot[l] < 3);
      CHECK(roots[cfg.block_of_slot[l]].insert(cfg.root_of_slot[l]).second);
    }
    for (const auto& r : roots) CHECK(r == std::set<int>{0, 1});
    std::string sig;
    for (int l = 0; l < 6; ++l) {
      sig += char('0' + cfg.block_of_slot[l]);
      sig += char('0' + cfg.root_of_slot[l]);
    }
    CHECK(seen.insert(sig).second);
  }
}

TEST_CASE("budgets flag incomplete partitions") {
  en::Budget tiny;
  tiny.max_nodes = 50;
  auto rep = en::enumerate_partition(arr0134(), {6}, tiny, {});
  CHECK_FALSE(rep.complete);
  CHECK(rep.nodes <= 51);

  en::Budget timed;
  timed.max_seconds = 1e-9;
  auto rep2 = en::enumerate_partition(arr0134(), {2, 2, 2}, timed, {});
  CHECK_FALSE(rep2.complete);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(en::enumerate_partition(arr0134(), {2, 2}, {}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(en::enumerate_partition(arr0134(), {3, 2, 1}, {}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(en::enumerate_partition(arr0134(), {3, 2}, {}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(en::enumerate_partition(arr0134(), {}, {}, {}),
                  std::invalid_argument);
}

TEST_CASE("verification tripwire rejects a planted non-ambiguity") {
  std::vector<Rat> fake{rat(-1, 2), rat(-1, 3), rat(1, 4), rat(2, 5)};
  auto verdict = core::is_ambiguous(arr0134(), to_radians(fake));
  REQUIRE(verdict.status == core::CheckStatus::kOk);
  REQUIRE_FALSE(verdict.ambiguous);  // the plant really is unambiguous

  en::EnumerationReport rep;
  rep.array = arr0134();
  rep.N = 6;
  en::AmbiguityClass bogus;
  bogus.phi_const = fake;
  rep.merged_classes.push_back(bogus);
  CHECK_THROWS_AS(en::verify_classes(rep.array, rep),
                  en::VerificationError);
}

TEST_CASE("reports are deterministic and schema-stable") {
  auto rep1 = en::enumerate_all(arr0134(), {}, {});
  auto rep2 = en::enumerate_all(arr0134(), {}, {});
  en::Options threaded;
  threaded.jobs = 4;
  auto rep3 = en::enumerate_all(arr0134(), {}, threaded);
  const std::string j1 = en::report_json(rep1);
  CHECK(j1 == en::report_json(rep2));
  CHECK(j1 == en::report_json(rep3));

  auto j = nlohmann::json::parse(j1);
  REQUIRE(j.is_object());
  CHECK(j.size() == 5);
  CHECK(j["array"] == nlohmann::json({0, 1, 3, 4}));
  CHECK(j["baseline"] == "1");
  CHECK(j["N"] == 6);
  REQUIRE(j["partitions"].is_array());
  REQUIRE(j["partitions"].size() == 3);
  const auto& p0 = j["partitions"][0];
  CHECK(p0.size() == 4);
  CHECK(p0["parts"] == nlohmann::json({2, 2, 2}));
  CHECK(p0["config_count"].is_number_integer());
  CHECK(p0["complete"] == true);
  REQUIRE(p0["classes"].is_array());
  const auto& c0 = p0["classes"][0];
  CHECK(c0.size() == 4);
  CHECK((c0["kind"] == "parametric" || c0["kind"] == "discrete"));
  REQUIRE(c0["phi_turns_affine"].is_array());
  CHECK(c0["phi_turns_affine"].size() == 4);  // one row per sensor
  CHECK(c0["phi_turns_affine"][0].size() == 2);  // constant plus one slope
  CHECK(c0["phi_turns_affine"][0][0].is_string());
  CHECK(c0["verified"] == true);
  REQUIRE(c0["parameter_domains"].is_array());
  REQUIRE(c0["parameter_domains"].size() == 1);
  const auto& iv = c0["parameter_domains"][0][0];
  CHECK(iv.size() == 4);
  CHECK(iv["lo"].is_string());
  CHECK(iv["hi"].is_string());
  CHECK(iv["lo_open"].is_boolean());
  CHECK(iv["hi_open"].is_boolean());
  CHECK(j["merged_classes"].size() == 12);
  // discrete classes carry no parameter block
  bool saw_discrete = false;
  for (const auto& c : j["merged_classes"])
    if (c["kind"] == "discrete") {
      saw_discrete = true;
      CHECK(c["parameter_domains"].empty());
      CHECK(c["phi_turns_affine"][0].size() == 1);
    }
  CHECK(saw_discrete);
}
