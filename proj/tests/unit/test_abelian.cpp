#include "doctest.h"
#include "orbiloop/abelian.hpp"

using namespace orbiloop;

TEST_CASE("mixed-radix encoding") {
  const FiniteAbelianGroup a({2, 4});
  CHECK(a.order() == 8);
  CHECK(a.encode({1, 2}) == 6);
  CHECK(a.decode(6) == FiniteAbelianGroup::Tuple{1, 2});
  CHECK(a.add(a.encode({1, 3}), a.encode({1, 2})) == a.encode({0, 1}));
  CHECK(a.neg(a.encode({1, 1})) == a.encode({1, 3}));
  CHECK(a.times(3, a.encode({1, 1})) == a.encode({1, 3}));
  CHECK(a.name(6) == "(1,2)");
  CHECK(a.parse("(1,2)") == 6);
  CHECK(a.parse("1,2") == 6);
  CHECK(FiniteAbelianGroup({5}).name(3) == "3");
  CHECK_THROWS_AS(a.parse("(2,0)"), InputError);
  CHECK_THROWS_AS(FiniteAbelianGroup({0}), InputError);
}

TEST_CASE("element orders") {
  CHECK(element_order(abelian_make({2, 3}), abelian_make({2, 3}).encode({1, 1})) == 6);
  const auto z24 = abelian_make({2, 4});
  CHECK(element_order(z24, z24.encode({1, 2})) == 2);
  CHECK(element_order(z24, z24.encode({1, 1})) == 4);
  CHECK(element_order(z24, 0) == 1);
}

TEST_CASE("unit embeddings into the CP^1 model over F2") {
  const auto h = cpl_minimal_model(1, 2);
  const auto z2 = abelian_make({2});
  const auto phi = embedding_make(z2, h, {h.parse_element("1+eps")});
  CHECK(phi(0) == h.unit_element());
  CHECK(phi(1) == h.parse_element("1+eps"));
  CHECK(phi.kernel_size() == 1);
  CHECK(multiply(h, phi(1), phi(1)) == h.unit_element());
  // 1+eps has order 2, which does not divide 3.
  CHECK_THROWS_WITH_AS(embedding_make(abelian_make({3}), h, {h.parse_element("1+eps")}),
                       doctest::Contains("does not divide"), ValidationError);
  CHECK_THROWS_AS(embedding_make(z2, h, {}), InputError);
  // Not a unit at all.
  CHECK_THROWS_AS(embedding_make(z2, h, {h.parse_element("eps")}), ValidationError);
  const auto triv = trivial_embedding(abelian_make({4}), h);
  CHECK(triv.kernel_size() == 4);
}

TEST_CASE("unit embedding into the circle model respects degree") {
  const auto h = circle_model(3, 2);
  CHECK_THROWS_AS(embedding_make(abelian_make({2}), h, {h.parse_element("at^0")}), ValidationError);
  CHECK_NOTHROW(embedding_make(abelian_make({1}), h, {h.unit_element()}));
}
