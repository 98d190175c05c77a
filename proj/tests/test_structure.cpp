#include "doctest.h"

#include <set>
#include <vector>

#include "rank3kit/group_algorithms.hpp"
#include "rank3kit/perm.hpp"
#include "rank3kit/perm_group.hpp"
#include "rank3kit/structure.hpp"

using namespace rank3kit;

namespace {

PermGroup symmetric(int n) {
  std::vector<int> cyc(n), tr(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n, tr[i] = i;
  tr[0] = 1;
  tr[1] = 0;
  return PermGroup(n, {Perm(cyc), Perm(tr)});
}

PermGroup alternating5() {
  return PermGroup(5, {Perm({1, 2, 3, 4, 0}), Perm({1, 2, 0, 3, 4})});
}

PermGroup dihedral8() {
  return PermGroup(4, {Perm({1, 2, 3, 0}), Perm({1, 0, 3, 2})});
}

PermGroup cyclic4() { return PermGroup(4, {Perm({1, 2, 3, 0})}); }

// A5 x A5 in product action on 25 points (i, j) -> 5*i + j.
PermGroup a5_times_a5() {
  PermGroup a5 = alternating5();
  std::vector<Perm> gens;
  for (int side = 0; side < 2; ++side)
    for (const Perm &s : a5.generators()) {
      std::vector<int> img(25);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          img[5 * i + j] = side == 0 ? 5 * s(i) + j : 5 * i + s(j);
      gens.emplace_back(img);
    }
  return PermGroup(25, gens);
}

// Direct oracle for semiprimitivity: enumerate ALL normal subgroups.
bool semiprimitive_oracle(const PermGroup &g) {
  for (const PermGroup &n : all_normal_subgroups(g, 5000))
    if (!n.is_transitive() && !n.is_semiregular()) return false;
  return true;
}

} // namespace

TEST_CASE("primitivity") {
  CHECK(is_primitive(alternating5()));
  CHECK(is_primitive(symmetric(5)));
  CHECK_FALSE(is_primitive(dihedral8()));
  CHECK_FALSE(is_primitive(cyclic4()));
}

TEST_CASE("semiprimitive basics") {
  CHECK(is_semiprimitive(alternating5()));
  CHECK(is_semiprimitive(cyclic4())); // every subgroup semiregular
  CHECK_FALSE(is_semiprimitive(dihedral8()));
  CHECK(is_semiprimitive(symmetric(4))); // primitive, hence semiprimitive
}

TEST_CASE("semiprimitive agrees with the all-normal-subgroups oracle") {
  std::vector<PermGroup> corpus = {
      symmetric(3), symmetric(4),    symmetric(5), alternating5(),
      dihedral8(),  cyclic4(),       a5_times_a5(),
      PermGroup(6, {Perm({1, 2, 0, 4, 5, 3}), Perm({3, 4, 5, 0, 1, 2})}),
      PermGroup(8, {Perm({1, 2, 3, 4, 5, 6, 7, 0}), Perm({0, 3, 2, 1, 4, 7, 6, 5})}),
  };
  for (const auto &g : corpus)
    CHECK(is_semiprimitive(g) == semiprimitive_oracle(g));
}

TEST_CASE("quasiprimitive") {
  CHECK(is_quasiprimitive(alternating5()));
  CHECK_FALSE(is_quasiprimitive(cyclic4()));
  CHECK_FALSE(is_quasiprimitive(dihedral8()));
  CHECK(is_quasiprimitive(symmetric(5)));
}

TEST_CASE("minimal normal subgroups") {
  auto s4_min = minimal_normal_subgroups(symmetric(4));
  REQUIRE(s4_min.size() == 1);
  CHECK(s4_min[0].order() == 4); // Klein group
  auto prod_min = minimal_normal_subgroups(a5_times_a5());
  REQUIRE(prod_min.size() == 2);
  CHECK(prod_min[0].order() == 60);
  CHECK(prod_min[1].order() == 60);
}

TEST_CASE("innately transitive") {
  // A4 on 4 points: Klein subgroup regular.
  PermGroup a4(4, {Perm({1, 2, 0, 3}), Perm({1, 0, 3, 2})});
  CHECK(is_innately_transitive(a4));
  CHECK(is_innately_transitive(alternating5()));
  CHECK_FALSE(is_innately_transitive(dihedral8()));
}

TEST_CASE("implication chain holds across a corpus") {
  std::vector<PermGroup> corpus = {symmetric(4), symmetric(5), alternating5(),
                                   dihedral8(), cyclic4(), a5_times_a5()};
  for (const auto &g : corpus) {
    StructureFlags f = structure_flags(g); // ctor asserts the chain
    if (f.primitive) CHECK(f.quasiprimitive);
    if (f.quasiprimitive) CHECK(f.innately_transitive);
    if (f.innately_transitive) CHECK(f.semiprimitive);
  }
}

TEST_CASE("socle and type") {
  // AGL_1(5) on 5 points: x -> 2x + b mod 5.
  PermGroup agl15(5, {Perm({1, 2, 3, 4, 0}), Perm({0, 2, 4, 1, 3})});
  CHECK(agl15.order() == 20);
  SocleInfo affine = socle_and_type(agl15, true);
  CHECK(affine.type == SocleType::affine);
  CHECK(affine.socle.order() == 5);
  CHECK(affine.socle.is_regular());
  CHECK(affine.socle.is_abelian());

  SocleInfo as = socle_and_type(symmetric(6), true);
  CHECK(as.type == SocleType::almost_simple);
  CHECK(as.socle.order() == 360);

  // Intransitive socle of C4: type other.
  SocleInfo other = socle_and_type(cyclic4());
  CHECK(other.type == SocleType::other);
  CHECK_THROWS_AS(socle_and_type(cyclic4(), true), std::invalid_argument);
}

TEST_CASE("largest normal p-subgroup") {
  CHECK(largest_normal_p_subgroup(symmetric(4), 2).order() == 4);
  CHECK(largest_normal_p_subgroup(symmetric(4), 3).order() == 1);
  CHECK(largest_normal_p_subgroup(dihedral8(), 2).order() == 8);
  CHECK(largest_normal_p_subgroup(alternating5(), 5).order() == 1);
}
