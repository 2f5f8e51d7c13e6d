#include "ambig/rational.hpp"

#include "doctest.h"

using namespace ambig;

TEST_CASE("rational parsing accepts reduced and unreduced forms") {
  CHECK(parse_rat("3/4") == rat(3, 4));
  CHECK(parse_rat("6/8") == rat(3, 4));
  CHECK(parse_rat("-2/6") == rat(-1, 3));
  CHECK(parse_rat("7") == rat(7));
  CHECK(parse_rat(" 1/2 ") == rat(1, 2));
  CHECK(parse_rat("0/5") == rat(0));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS(parse_rat(""));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("a/b"));
  CHECK_THROWS(parse_rat("1/2/3"));
  CHECK_THROWS(parse_rat("1.5"));
}

TEST_CASE("rat_str prints canonical p/q with positive denominator") {
  CHECK(rat_str(rat(3, 4)) == "3/4");
  CHECK(rat_str(rat(-3, 4)) == "-3/4");
  CHECK(rat_str(rat(3, -4)) == "-3/4");
  CHECK(rat_str(rat(8, 2)) == "4");
  CHECK(rat_str(rat(0, 9)) == "0");
  CHECK(parse_rat(rat_str(rat(-22, 7))) == rat(-22, 7));
}

TEST_CASE("floor and mod1 handle negatives") {
  CHECK(rat_floor(rat(7, 2)) == rat(3));
  CHECK(rat_floor(rat(-7, 2)) == rat(-4));
  CHECK(rat_floor(rat(5)) == rat(5));
  CHECK(mod1(rat(-1, 4)) == rat(3, 4));
  CHECK(mod1(rat(9, 4)) == rat(1, 4));
  CHECK(mod1(rat(-3)) == rat(0));
}

TEST_CASE("integral conversion and common denominators") {
  CHECK(rat_to_long(rat(42)) == 42);
  CHECK_THROWS(rat_to_long(rat(1, 2)));
  std::vector<Rat> v{rat(1, 6), rat(3, 10), rat(2)};
  CHECK(common_denominator(v) == 30);
  CHECK(common_denominator({rat(5)}) == 1);
  CHECK(rat_to_double(rat(1, 4)) == doctest::Approx(0.25));
}
