#include "doctest.h"

#include <random>
#include <vector>

#include "rank3kit/perm.hpp"
#include "rank3kit/perm_group.hpp"
#include "rank3kit/small_group.hpp"

using namespace rank3kit;

namespace {

PermGroup cyclic(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup(n, {Perm(cyc)});
}

// Elementary abelian 2^3 as a regular group on 8 points (bitmask XOR).
PermGroup elem_abelian8() {
  std::vector<Perm> gens;
  for (int b : {1, 2, 4}) {
    std::vector<int> img(8);
    for (int x = 0; x < 8; ++x) img[x] = x ^ b;
    gens.emplace_back(img);
  }
  return PermGroup(8, gens);
}

// Quaternion group Q8 as the regular action on itself:
// elements 1,-1,i,-i,j,-j,k,-k indexed 0..7.
SmallGroupTable quaternion8() {
  // Build from 2x2 matrices over Z/? easier: explicit regular perms.
  // i: 1->i, i->-1, -1->-i, -i->1; j->k? use the multiplication rules.
  // Index: 1=0, -1=1, i=2, -i=3, j=4, -j=5, k=6, -k=7.
  auto mul = [](int a, int b) {
    auto dec = [](int x) { // returns {unit in 0..3 (1,i,j,k), sign}
      int unit = x / 2, sign = x % 2 ? -1 : 1;
      return std::pair<int, int>{unit, sign};
    };
    auto [ua, sa] = dec(a);
    auto [ub, sb] = dec(b);
    // Quaternion unit table: 1,i,j,k.
    static const int unit_mul[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    int unit = unit_mul[ua][ub];
    int sign = sa * sb * sign_mul[ua][ub];
    return 2 * unit + (sign == 1 ? 0 : 1);
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) table[a][b] = mul(a, b);
  return SmallGroupTable(table);
}

PermGroup alternating4() {
  return PermGroup(4, {Perm({1, 2, 0, 3}), Perm({1, 0, 3, 2})});
}

// Extraspecial group of order 27, exponent 3: triples (a,b,c) over F_3 with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), regular action on 27 points.
PermGroup extraspecial27() {
  auto idx = [](int a, int b, int c) { return 9 * a + 3 * b + c; };
  std::vector<Perm> gens;
  for (auto [ga, gb, gc] : {std::tuple{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
    std::vector<int> img(27);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          img[idx(a, b, c)] =
              idx((a + ga) % 3, (b + gb) % 3, (c + gc + a * gb) % 3);
    gens.emplace_back(img);
  }
  return PermGroup(27, gens);
}

} // namespace

TEST_CASE("table construction and round trip") {
  SmallGroupTable t = SmallGroupTable::from_group(cyclic(6));
  CHECK(t.order() == 6);
  CHECK(t.exponent() == 6);
  CHECK(t.is_abelian());
  SmallGroupTable back = SmallGroupTable::parse(t.to_text());
  CHECK(back.table() == t.table());
}

TEST_CASE("table validation rejects non-groups") {
  // Latin square violation (repeated row entry).
  std::vector<std::vector<int>> bad = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS((SmallGroupTable(bad)), std::invalid_argument);
  // Latin square but not associative: there is no such 2x2; use a 5x5
  // quasigroup (subtraction mod 5 has no identity).
  std::vector<std::vector<int>> sub(5, std::vector<int>(5));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) sub[a][b] = ((a - b) % 5 + 5) % 5;
  CHECK_THROWS_AS((SmallGroupTable(sub)), std::invalid_argument);
}

TEST_CASE("lemma 2.6 table: elementary abelian 2^3") {
  auto r = automorphism_orbit_count(SmallGroupTable::from_group(elem_abelian8()));
  CHECK(r.orbit_count == 2);
  CHECK(r.cls == RegularNormalClass::elementary_abelian);
  CHECK(r.aut_order == 168); // |GL_3(2)|
}

TEST_CASE("lemma 2.6 table: cyclic of order 9") {
  auto r = automorphism_orbit_count(SmallGroupTable::from_group(cyclic(9)));
  CHECK(r.orbit_count == 3);
  CHECK(r.cls == RegularNormalClass::homocyclic_p2);
  CHECK(r.aut_order == 6);
}

TEST_CASE("lemma 2.6 table: quaternion group") {
  auto r = automorphism_orbit_count(quaternion8());
  CHECK(r.orbit_count == 3);
  CHECK(r.cls == RegularNormalClass::special_2_exp4);
  CHECK(r.aut_order == 24);
}

TEST_CASE("lemma 2.6 table: alternating group A4") {
  auto r = automorphism_orbit_count(SmallGroupTable::from_group(alternating4()));
  CHECK(r.orbit_count == 3);
  CHECK(r.cls == RegularNormalClass::frobenius_pq);
  CHECK(r.aut_order == 24); // Aut(A4) = S4
}

TEST_CASE("lemma 2.6 table: extraspecial 27 of exponent 3") {
  auto t = SmallGroupTable::from_group(extraspecial27());
  CHECK(t.exponent() == 3);
  CHECK_FALSE(t.is_abelian());
  auto r = automorphism_orbit_count(t);
  CHECK(r.orbit_count == 3);
  CHECK(r.cls == RegularNormalClass::special_p_expp);
}

TEST_CASE("lemma 2.6 table: cyclic of order 8 is none-of-listed") {
  auto r = automorphism_orbit_count(SmallGroupTable::from_group(cyclic(8)));
  CHECK(r.orbit_count == 4);
  CHECK(r.cls == RegularNormalClass::none_of_listed);
}

TEST_CASE("automorphisms are genuine and closed") {
  SmallGroupTable t = quaternion8();
  auto auts = automorphism_group(t);
  for (const auto &phi : auts)
    for (int a = 0; a < t.order(); ++a)
      for (int b = 0; b < t.order(); ++b)
        CHECK(phi[t.product(a, b)] == t.product(phi[a], phi[b]));
  // Closure under composition.
  auto find = [&](const std::vector<int> &v) {
    return std::binary_search(auts.begin(), auts.end(), v);
  };
  for (const auto &f : auts)
    for (const auto &g : auts) {
      std::vector<int> comp(t.order());
      for (int x = 0; x < t.order(); ++x) comp[x] = g[f[x]];
      CHECK(find(comp));
    }
}

TEST_CASE("orbit counts invariant under table relabeling") {
  SmallGroupTable t = SmallGroupTable::from_group(alternating4());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<int> perm(t.order());
    for (int i = 0; i < t.order(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> relabeled(t.order(),
                                            std::vector<int>(t.order()));
    std::vector<int> inv(t.order());
    for (int i = 0; i < t.order(); ++i) inv[perm[i]] = i;
    for (int a = 0; a < t.order(); ++a)
      for (int b = 0; b < t.order(); ++b)
        relabeled[perm[a]][perm[b]] = perm[t.product(a, b)];
    auto r = automorphism_orbit_count(SmallGroupTable(relabeled));
    CHECK(r.orbit_count == 3);
    CHECK(r.cls == RegularNormalClass::frobenius_pq);
  }
}

TEST_CASE("frobenius with cyclic complement") {
  // S3 = Z3 : Z2.
  PermGroup s3(3, {Perm({1, 2, 0}), Perm({1, 0, 2})});
  auto w = is_frobenius_with_cyclic_complement(s3, 3);
  CHECK(w.is_frobenius);
  CHECK(w.a == 1);
  CHECK(w.complement_order == 2);
  // AGL_1(5) = Z5 : Z4.
  PermGroup agl15(5, {Perm({1, 2, 3, 4, 0}), Perm({0, 2, 4, 1, 3})});
  auto w2 = is_frobenius_with_cyclic_complement(agl15, 5);
  CHECK(w2.is_frobenius);
  CHECK(w2.a == 1);
  CHECK(w2.complement_order == 4);
  // D8 is not Frobenius.
  PermGroup d8(4, {Perm({1, 2, 3, 0}), Perm({1, 0, 3, 2})});
  CHECK_FALSE(is_frobenius_with_cyclic_complement(d8, 2).is_frobenius);
}
