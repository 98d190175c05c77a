#include "doctest.h"

#include <stdexcept>

#include "rank3kit/perm.hpp"

using rank3kit::Perm;

TEST_CASE("identity and basic accessors") {
  Perm id(5);
  CHECK(id.degree() == 5);
  CHECK(id.is_identity());
  for (int i = 0; i < 5; ++i) CHECK(id(i) == i);
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({-1, 0, 1}), std::invalid_argument);
}

TEST_CASE("composition is left-to-right") {
  // a = (0 1 2), b = (0 1).  (a*b) means apply a first, then b:
  // 0 -a-> 1 -b-> 0, 1 -a-> 2 -b-> 2, 2 -a-> 0 -b-> 1.
  Perm a({1, 2, 0});
  Perm b({1, 0, 2});
  Perm ab = a * b;
  CHECK(ab(0) == 0);
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 1);
  Perm ba = b * a;
  CHECK(ba(0) == 2);
  CHECK(ba(1) == 1);
  CHECK(ba(2) == 0);
}

TEST_CASE("inverse and power") {
  Perm a({1, 2, 3, 0});  // 4-cycle
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.pow(4).is_identity());
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(6) == a * a);
  CHECK(a.order() == 4);
}

TEST_CASE("order is lcm of cycle lengths") {
  // (0 1 2)(3 4): order 6.
  Perm p({1, 2, 0, 4, 3});
  CHECK(p.order() == 6);
  auto cyc = p.cycles();
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0] == std::vector<int>{0, 1, 2});
  CHECK(cyc[1] == std::vector<int>{3, 4});
}

TEST_CASE("fixed points") {
  Perm p({0, 2, 1, 3});
  CHECK(p.fixed_points() == std::vector<int>{0, 3});
}

TEST_CASE("conjugation relabels cycles") {
  // p = (0 1), g = (0 2): g^-1 p g should be... with our convention
  // conjugated_by(g) maps x -> g(p(g^-1(x))), i.e. the cycle (g(0) g(1)).
  Perm p({1, 0, 2});
  Perm g({2, 1, 0});
  Perm c = p.conjugated_by(g);
  CHECK(c(2) == 1);
  CHECK(c(1) == 2);
  CHECK(c(0) == 0);
  // Conjugation identity: p^g == g^-1 * p * g under left-to-right products.
  CHECK(c == g.inverse() * p * g);
}
