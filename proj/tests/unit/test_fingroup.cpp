#include "doctest.h"
#include "orbiloop/fingroup.hpp"

using namespace orbiloop;

namespace {
// S3 as lexicographically sorted permutations of {0,1,2}, composed left after right.
std::vector<std::vector<Elem>> s3_table() {
  return {{0, 1, 2, 3, 4, 5}, {1, 0, 4, 5, 2, 3}, {2, 3, 0, 1, 5, 4},
          {3, 2, 5, 4, 0, 1}, {4, 5, 1, 0, 3, 2}, {5, 4, 3, 2, 1, 0}};
}
}  // namespace

TEST_CASE("cyclic groups") {
  const FiniteGroup c4 = make_cyclic(4);
  CHECK(c4.order() == 4);
  CHECK(c4.identity() == 0);
  CHECK(c4.mul(3, 2) == 1);
  CHECK(c4.inv(1) == 3);
  CHECK(c4.element_order(2) == 2);
  CHECK(c4.is_abelian());
  CHECK(c4.cyclic_generator() == Elem{1});
  CHECK(c4.label() == "cyclic:4");
  CHECK(make_cyclic(1).order() == 1);
  CHECK_THROWS_AS(make_cyclic(0), InputError);
  CHECK_THROWS_AS(make_cyclic(65), InputError);
  CHECK_NOTHROW(make_cyclic(64));
}

TEST_CASE("table validation names witnesses") {
  CHECK_NOTHROW(make_from_table(s3_table()));
  CHECK_THROWS_WITH_AS(make_from_table({{1, 0}, {0, 0}}), doctest::Contains("identity"), ValidationError);
  CHECK_THROWS_WITH_AS(make_from_table({{0, 1}, {1, 1}}), doctest::Contains("inverse"), ValidationError);
  // Latin square with identity 0 that is not associative.
  const std::vector<std::vector<Elem>> bad = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_WITH_AS(make_from_table(bad), doctest::Contains("associativity fails at"), ValidationError);
  CHECK_THROWS_AS(make_from_table({{0, 1}, {1}}), InputError);
}

TEST_CASE("identity need not be index 0") {
  const FiniteGroup g = make_from_table({{1, 0}, {0, 1}});
  CHECK(g.identity() == 1);
  CHECK(g.inv(0) == 0);
}

TEST_CASE("S3 conjugacy classes") {
  const FiniteGroup s3 = make_from_table(s3_table());
  CHECK_FALSE(s3.is_abelian());
  CHECK_FALSE(s3.cyclic_generator().has_value());
  const auto p = conjugacy_classes(s3);
  REQUIRE(p.classes.size() == 3);
  CHECK(p.classes[0] == std::vector<Elem>{0});
  CHECK(p.classes[1] == std::vector<Elem>{1, 2, 5});
  CHECK(p.classes[2] == std::vector<Elem>{3, 4});
  CHECK(p.class_of[5] == 1);
}

TEST_CASE("direct products") {
  const FiniteGroup g = make_product(make_cyclic(2), make_cyclic(3));
  CHECK(g.order() == 6);
  CHECK(g.is_abelian());
  CHECK(g.element_order(1 * 3 + 1) == 6);
  CHECK(g.cyclic_generator().has_value());
  const FiniteGroup k = make_product(make_cyclic(2), make_cyclic(2));
  CHECK_FALSE(k.cyclic_generator().has_value());
  CHECK(conjugacy_classes(k).classes.size() == 4);
  CHECK_THROWS_AS(make_product(make_cyclic(8), make_cyclic(9)), InputError);
}

TEST_CASE("equality compares tables") {
  CHECK(make_cyclic(3) == make_cyclic(3));
  CHECK_FALSE(make_cyclic(3) == make_cyclic(4));
  CHECK(make_cyclic(6) == make_from_table(make_cyclic(6).table()));
}
