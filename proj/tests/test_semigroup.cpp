#include <doctest.h>

#include <limits>
#include <string>

#include "ebs/oracle.hpp"
#include "ebs/semigroup.hpp"
#include "free_word.hpp"

using namespace ebs;

using testing::reduce_word;

TEST_CASE("multiply follows the three cases") {
  CHECK(multiply(Element{2, 3}, Element{5, 7}) == Element{4, 7});
  CHECK(multiply(Element{3, 5}, Element{2, 9}) == Element{3, 12});
  CHECK(multiply(Element{0, 0}, Element{0, 4}) == Element{0, 4});
  CHECK(multiply(Element{2, 3}, Element::zero()).is_zero());
  CHECK(multiply(Element::zero(), Element{2, 3}).is_zero());
  // (2,3)(5,7) read in the corner C[0] is q^2p^3 q^5p^7.
  CHECK(to_bicyclic(0, Element{4, 7}) == reduce_word(2, 3, 5, 7));
}

TEST_CASE("inversion, idempotents") {
  CHECK(invert(Element{3, 5}) == Element{5, 3});
  CHECK(invert(Element::zero()).is_zero());
  const Element x{2, 7};
  CHECK(x * invert(x) * x == x);

  CHECK(is_idempotent(Element{4, 4}));
  CHECK_FALSE(is_idempotent(Element{4, 5}));
  CHECK(Element{4, 5} * Element{4, 5} == Element{4, 6});
  CHECK(is_idempotent(Element::zero()));
}

TEST_CASE("natural order") {
  CHECK(leq(Element::zero(), Element{7, -2}));
  CHECK(leq(Element{2, 5}, Element{1, 4}));
  CHECK(leq_algebraic(Element{2, 5}, Element{1, 4}));
  CHECK_FALSE(leq(Element{2, 5}, Element{3, 6}));
  CHECK_FALSE(leq(Element{1, 1}, Element::zero()));
  CHECK_FALSE(leq_algebraic(Element{1, 1}, Element::zero()));
}

TEST_CASE("corners and the bicyclic monoid") {
  CHECK(corner_contains(0, Element{3, 5}));
  CHECK_FALSE(corner_contains(4, Element{3, 5}));
  CHECK(corner_contains(-10, Element::zero()));

  CHECK(to_bicyclic(2, Element{3, 5}) == BicyclicWord{1, 3});
  CHECK(to_bicyclic(7, Element{7, 7}) == BicyclicWord::identity());
  CHECK(to_bicyclic(0, Element::zero()).is_zero());
  CHECK_THROWS_AS(to_bicyclic(4, Element{3, 5}), DomainError);
  CHECK_THROWS_AS(BicyclicWord(-1, 0), DomainError);

  CHECK(bicyclic_multiply({1, 2}, {3, 4}) == BicyclicWord{2, 4});
  CHECK(bicyclic_multiply({1, 2}, {3, 4}) == reduce_word(1, 2, 3, 4));
  CHECK(bicyclic_multiply(BicyclicWord::identity(), {5, 1}) == BicyclicWord{5, 1});
  CHECK(bicyclic_multiply({2, 5}, {1, 0}) == BicyclicWord{2, 4});
  CHECK(bicyclic_multiply({2, 5}, {1, 0}) == reduce_word(2, 5, 1, 0));
  CHECK(bicyclic_multiply({2, 5}, BicyclicWord::zero()).is_zero());
}

TEST_CASE("bicyclic_multiply agrees with free reduction") {
  for (Int i = 0; i <= 4; ++i)
    for (Int j = 0; j <= 4; ++j)
      for (Int k = 0; k <= 4; ++k)
        for (Int l = 0; l <= 4; ++l)
          CHECK(bicyclic_multiply({i, j}, {k, l}) == reduce_word(i, j, k, l));
}

TEST_CASE("shift automorphisms and cyclic quotients") {
  CHECK(shift_automorphism(3, Element{1, -2}) == Element{4, 1});
  CHECK(shift_automorphism(0, Element{9, -4}) == Element{9, -4});
  CHECK(shift_automorphism(2, Element{2, 3} * Element{5, 7}) == Element{6, 9});
  CHECK(shift_automorphism(2, Element{2, 3}) * shift_automorphism(2, Element{5, 7}) == Element{6, 9});

  CHECK(difference_hom(Element{2, 5}) == -3);
  CHECK(difference_hom(Element{4, 4}) == 0);
  CHECK(difference_hom(Element{2, 3} * Element{5, 7}) == -3);
  CHECK_THROWS_AS(difference_hom(Element::zero()), DomainError);

  CHECK(quotient_mod(3, Element{2, 5}) == 0);
  CHECK(quotient_mod(1, Element{-8, 13}) == 0);
  CHECK(quotient_mod(4, Element{0, 1}) == 3);
  CHECK_THROWS_AS(quotient_mod(0, Element{0, 1}), DomainError);
  CHECK_THROWS_AS(quotient_mod(3, Element::zero()), DomainError);
}

TEST_CASE("overflow is reported") {
  constexpr Int kMax = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(shift_automorphism(1, Element{kMax, 0}), OverflowError);
  CHECK_THROWS_AS(difference_hom(Element{kMax, -1}), OverflowError);
  CHECK_THROWS_AS(multiply(Element{kMax, -1}, Element{1, 0}), OverflowError);
}

TEST_CASE("element literals") {
  CHECK(parse_element("0").is_zero());
  CHECK(parse_element("(2,-3)") == Element{2, -3});
  CHECK(parse_element(" ( +2 , -3 ) ") == Element{2, -3});
  CHECK(parse_element("(-9223372036854775808,0)").a() == std::numeric_limits<Int>::min());
  CHECK_THROWS_AS(parse_element("(1,2"), ParseError);
  CHECK_THROWS_AS(parse_element("1"), ParseError);
  CHECK_THROWS_AS(parse_element("(1,2)x"), ParseError);
  CHECK_THROWS_AS(parse_element("(99999999999999999999,0)"), ParseError);
  CHECK(parse_pair_list("(1,1),(0,3)") == std::vector<Pair>{{1, 1}, {0, 3}});
  CHECK_THROWS_AS(parse_pair_list("(1,1),0"), ParseError);
  for (const Element& x : oracle::enumerate(oracle::Window{2})) {
    CHECK(parse_element(to_string(x)) == x);
  }
}

TEST_CASE("shifts are bijective homomorphisms on a window") {
  const auto elems = oracle::enumerate(oracle::Window{3});
  for (Int k = -3; k <= 3; ++k) {
    for (const auto& x : elems) {
      CHECK(shift_automorphism(-k, shift_automorphism(k, x)) == x);
      for (const auto& y : elems) {
        CHECK(shift_automorphism(k, x * y) == shift_automorphism(k, x) * shift_automorphism(k, y));
      }
    }
  }
}

TEST_CASE("idempotents commute and inverses are unique") {
  const auto elems = oracle::enumerate(oracle::Window{3});
  for (const auto& e : elems) {
    CHECK(is_idempotent(e) == (e * e == e));
    for (const auto& f : elems) {
      if (is_idempotent(e) && is_idempotent(f)) CHECK(e * f == f * e);
    }
  }
  for (const auto& x : elems) {
    int count = 0;
    for (const auto& w : elems) {
      if (x * w * x == x && w * x * w == w) ++count;
    }
    CHECK(count == 1);
  }
}
