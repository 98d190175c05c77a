#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "rank3kit/group_algorithms.hpp"
#include "rank3kit/perm.hpp"
#include "rank3kit/perm_group.hpp"

using namespace rank3kit;

namespace {

PermGroup symmetric(int n) {
  std::vector<int> cyc(n), tr(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n, tr[i] = i;
  tr[0] = 1;
  tr[1] = 0;
  return PermGroup(n, {Perm(cyc), Perm(tr)});
}

PermGroup cyclic(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup(n, {Perm(cyc)});
}

// Independent rank oracle: count orbits on ordered pairs by brute force
// over all group elements.
int pair_orbit_count(const PermGroup &g) {
  auto elems = g.elements(100000);
  int n = g.degree();
  std::vector<int> seen(n * n, 0);
  int count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (seen[a * n + b]) continue;
      ++count;
      for (const Perm &p : elems) seen[p(a) * n + p(b)] = 1;
    }
  return count;
}

} // namespace

TEST_CASE("orbits and transitivity") {
  PermGroup g(6, {Perm({1, 2, 0, 3, 4, 5}), Perm({0, 1, 2, 4, 3, 5})});
  auto orbs = g.orbits();
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0] == std::vector<int>{0, 1, 2});
  CHECK(orbs[1] == std::vector<int>{3, 4});
  CHECK(orbs[2] == std::vector<int>{5});
  CHECK_FALSE(g.is_transitive());
  CHECK_THROWS_AS(g.rank(), std::invalid_argument);
  CHECK(symmetric(5).is_transitive());
}

TEST_CASE("point stabilizer orders") {
  PermGroup s5 = symmetric(5);
  CHECK(s5.order() == 120);
  CHECK(s5.point_stabilizer(0).order() == 24);
  CHECK(s5.point_stabilizer(3).order() == 24);
  CHECK(s5.pointwise_stabilizer({0, 1}).order() == 6);
}

TEST_CASE("rank matches the pair-orbit oracle") {
  // S5 is 2-transitive: rank 2.  C6 regular: rank 6.  D8 on 4 points: rank 3.
  PermGroup d8(4, {Perm({1, 2, 3, 0}), Perm({1, 0, 3, 2})});
  for (const PermGroup *g : {&d8}) {
    CHECK(g->rank() == pair_orbit_count(*g));
  }
  CHECK(symmetric(5).rank() == 2);
  CHECK(symmetric(5).rank() == pair_orbit_count(symmetric(5)));
  CHECK(cyclic(6).rank() == 6);
  CHECK(cyclic(6).rank() == pair_orbit_count(cyclic(6)));
  CHECK(d8.rank() == 3);
  CHECK(d8.subdegrees() == std::vector<long long>{1, 1, 2});
}

TEST_CASE("semiregular and regular detection") {
  CHECK(cyclic(7).is_regular());
  CHECK(cyclic(7).is_semiregular());
  CHECK_FALSE(symmetric(4).is_semiregular());
  // C2 acting on 4 points in two 2-cycles: semiregular, not transitive.
  PermGroup g(4, {Perm({1, 0, 3, 2})});
  CHECK(g.is_semiregular());
  CHECK_FALSE(g.is_regular());
}

TEST_CASE("abelian detection") {
  CHECK(cyclic(12).is_abelian());
  CHECK_FALSE(symmetric(3).is_abelian());
  PermGroup v4(4, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
  CHECK(v4.is_abelian());
}

TEST_CASE("conjugacy class representatives of S4") {
  // S4 has 5 classes with sizes 1, 6, 3, 8, 6.
  PermGroup s4 = symmetric(4);
  auto reps = conjugacy_class_representatives(s4);
  CHECK(reps.size() == 5);
  std::multiset<long long> orders;
  for (const Perm &r : reps) orders.insert(r.order());
  CHECK(orders == std::multiset<long long>{1, 2, 2, 3, 4});
}

TEST_CASE("derived subgroup chain of S4") {
  PermGroup s4 = symmetric(4);
  PermGroup a4 = derived_subgroup(s4);
  CHECK(a4.order() == 12);
  PermGroup v4 = derived_subgroup(a4);
  CHECK(v4.order() == 4);
  CHECK(derived_subgroup(v4).order() == 1);
}

TEST_CASE("normal closure") {
  PermGroup s4 = symmetric(4);
  // Closure of a transposition is all of S4; of a double transposition, V4.
  CHECK(normal_closure(s4, {Perm({1, 0, 2, 3})}).order() == 24);
  CHECK(normal_closure(s4, {Perm({1, 0, 3, 2})}).order() == 4);
  CHECK(normal_closure(s4, {Perm({1, 2, 0, 3})}).order() == 12);
}

TEST_CASE("centralizer") {
  PermGroup s4 = symmetric(4);
  // Centralizer of a 4-cycle in S4 is the cyclic group it generates.
  PermGroup c = centralizer(s4, {Perm({1, 2, 3, 0})});
  CHECK(c.order() == 4);
  // Center of S4 is trivial.
  CHECK(centralizer(s4, s4.generators()).order() == 1);
}

TEST_CASE("all normal subgroups of S4") {
  PermGroup s4 = symmetric(4);
  auto normals = all_normal_subgroups(s4);
  std::multiset<unsigned long long> orders;
  for (const auto &n : normals) orders.insert(n.order());
  CHECK(orders == std::multiset<unsigned long long>{1, 4, 12, 24});
}

TEST_CASE("all subgroups of S3 and D8") {
  PermGroup s3 = symmetric(3);
  std::vector<Perm> elems;
  auto subs = all_subgroups(s3, elems);
  CHECK(elems.size() == 6);
  CHECK(subs.size() == 6); // 1, three C2, C3, S3
  PermGroup d8(4, {Perm({1, 2, 3, 0}), Perm({1, 0, 3, 2})});
  std::vector<Perm> d8_elems;
  CHECK(all_subgroups(d8, d8_elems).size() == 10);
}
