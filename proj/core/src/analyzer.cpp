#include "rank3kit/analyzer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "rank3kit/errors.hpp"
#include "rank3kit/group_algorithms.hpp"
#include "rank3kit/number_theory.hpp"
#include "rank3kit/small_group.hpp"

namespace rank3kit {

const char *to_string(TheoremClass t) {
  switch (t) {
  case TheoremClass::A: return "A";
  case TheoremClass::B: return "B";
  case TheoremClass::C: return "C";
  case TheoremClass::D: return "D";
  case TheoremClass::not_applicable: return "not-applicable";
  }
  return "?";
}

namespace {

bool is_2transitive(const PermGroup &g) { return g.rank() == 2; }

/// K_(B): the subgroup of the kernel fixing block `b` pointwise.
PermGroup kernel_pointwise_block(const PermGroup &kernel,
                                 const BlockSystem &bs, int b) {
  return kernel.pointwise_stabilizer(bs.parts()[b]);
}

/// Is h transitive on the points of cell `b`?
bool transitive_on_block(const PermGroup &h, const BlockSystem &bs, int b) {
  const std::vector<int> &cell = bs.parts()[b];
  std::vector<int> orb = h.orbit(cell[0]);
  std::set<int> orbset(orb.begin(), orb.end());
  for (int x : cell)
    if (!orbset.count(x)) return false;
  return true;
}

/// Search for a regular normal subgroup among single-class normal closures
/// and their joins with the kernel.
std::optional<PermGroup> find_regular_normal(const PermGroup &g,
                                             const PermGroup &kernel) {
  std::vector<PermGroup> candidates;
  for (const Perm &rep : conjugacy_class_representatives(g)) {
    if (rep.is_identity()) continue;
    candidates.push_back(normal_closure(g, {rep}));
    candidates.push_back(join({&candidates.back(), &kernel}));
  }
  for (const PermGroup &n : candidates)
    if (n.order() == static_cast<unsigned long long>(g.degree()) &&
        n.is_regular())
      return n;
  return std::nullopt;
}

/// Aut(N)-orbit count on N for a regular normal candidate, with the
/// elementary-abelian shortcut (GL is transitive on nonzero vectors, so the
/// count is 2 without a brute-force search).
long long aut_orbits_on(const PermGroup &n, std::vector<std::string> &notes) {
  SmallGroupTable table = SmallGroupTable::from_group(n);
  if (classify_regular_normal(table) == RegularNormalClass::elementary_abelian)
    return n.order() == 1 ? 1 : 2;
  try {
    return automorphism_orbit_count(table).orbit_count;
  } catch (const CapacityError &e) {
    notes.push_back(std::string("automorphism search capacity: ") + e.what());
    return -1;
  }
}

} // namespace

BlockSystem analysis_block_system(const PermGroup &g) {
  std::vector<BlockSystem> systems = nontrivial_block_systems_rank3(g);
  if (systems.empty())
    throw std::invalid_argument("group is primitive: no block system");
  return systems[0];
}

Rank3Report analyze(const PermGroup &g) {
  if (!g.is_transitive())
    throw std::invalid_argument("analyze requires a transitive group");

  Rank3Report r;
  r.degree = g.degree();
  r.order = g.order();
  r.rank = g.rank();
  r.subdegrees = g.subdegrees();
  r.flags = structure_flags(g);

  if (r.rank != 3) {
    r.notes.push_back("rank is not 3; imprimitivity analysis skipped");
    return r;
  }

  std::vector<BlockSystem> systems = nontrivial_block_systems_rank3(g);
  r.imprimitive = !systems.empty();
  if (!r.imprimitive) {
    r.notes.push_back("group is primitive; no block analysis");
    return r;
  }
  r.unique_nontrivial_system = systems.size() == 1;
  const BlockSystem &bs = systems[0];
  r.block_size = bs.block_size();
  r.block_count = bs.block_count();

  PermGroup top = block_action(g, bs);
  PermGroup block_group = restrict_to_block(block_stabilizer(g, bs, 0), bs, 0);
  r.top_group_order = top.order();
  r.block_group_order = block_group.order();

  // Lemma 2.2: for rank 3 the nontrivial system is unique (asserted under
  // the 2-transitivity of both induced actions, which is where the lemma
  // proves it).
  if (is_2transitive(top) && is_2transitive(block_group) &&
      !r.unique_nontrivial_system)
    throw std::logic_error("multiple nontrivial block systems in a rank-3 "
                           "group with 2-transitive induced actions");

  auto classify_induced = [&](const PermGroup &h, unsigned long long &socle) {
    if (!is_2transitive(h)) return SocleType::other;
    SocleInfo info = socle_and_type(h, true);
    socle = info.socle.order();
    return info.type;
  };
  r.top_group_type = classify_induced(top, r.top_socle_order);
  r.block_group_type = classify_induced(block_group, r.block_socle_order);

  PermGroup kernel = block_action_kernel(g, bs);
  r.kernel_order = kernel.order();
  if (r.kernel_order * r.top_group_order != r.order)
    throw std::logic_error("|K| * |G^B| != |G|");
  r.kernel_semiregular = kernel.is_semiregular();
  r.kernel_regular = kernel.is_regular();

  PermGroup k_b = kernel_pointwise_block(kernel, bs, 0);
  r.k_pointwise_b_order = k_b.order();
  r.k_pointwise_transitive_other_block = false;
  for (int b = 1; b < r.block_count &&
                  !r.k_pointwise_transitive_other_block; ++b)
    r.k_pointwise_transitive_other_block = transitive_on_block(k_b, bs, b);

  // L = O_p(K) for the affine prime of the block action, and C_G(L) = L.
  PermGroup l_group = PermGroup::trivial(g.degree());
  if (r.block_group_type == SocleType::affine) {
    r.l_prime = factorize(r.block_socle_order).front().first;
    l_group = largest_normal_p_subgroup(kernel, r.l_prime);
    r.l_order = l_group.order();
    PermGroup cent = centralizer(g, l_group.generators());
    r.centralizer_equals_l =
        cent.order() == l_group.order() && !l_group.is_trivial();
  }

  // Theorem 1.2 clauses, all evaluated for the evidence record.
  if (r.block_group_type != SocleType::affine) {
    r.theorem_class = TheoremClass::not_applicable;
    r.notes.push_back("block action is not affine: out of Theorem 1.2 scope");
    return r;
  }

  bool clause_c = r.k_pointwise_transitive_other_block;
  // The non-innately-transitive groups of class (A) are those of Theorem
  // 1.1(a)/(b), all of which are semiprimitive with K != 1 and an almost
  // simple action on the blocks (the affine-top case is class (B)).
  bool clause_a = r.flags.innately_transitive ||
                  (r.flags.semiprimitive && r.kernel_order > 1 &&
                   r.top_group_type == SocleType::almost_simple);
  std::optional<PermGroup> regular_normal = find_regular_normal(g, kernel);
  long long aut_orbits = -1;
  if (regular_normal)
    aut_orbits = aut_orbits_on(*regular_normal, r.notes);
  bool clause_b = regular_normal && aut_orbits >= 1 && aut_orbits <= 3;
  bool frobenius_kernel =
      r.kernel_order > 1 &&
      is_frobenius_with_cyclic_complement(kernel, r.l_prime).is_frobenius;
  bool clause_d = r.k_pointwise_b_order > 1 &&
                  !r.k_pointwise_transitive_other_block &&
                  r.centralizer_equals_l && frobenius_kernel;

  r.evidence = {{"C: K_(B) transitive on another block", clause_c},
                {"A: innately transitive, or semiprimitive with K != 1 and "
                 "almost simple top action",
                 clause_a},
                {"B: regular normal N with at most 3 Aut(N)-orbits", clause_b},
                {"D: forensics (K_(B) != 1 intransitive, Frobenius K, "
                 "self-centralising L)",
                 clause_d}};
  if (clause_c) r.theorem_class = TheoremClass::C;
  else if (clause_a) r.theorem_class = TheoremClass::A;
  else if (clause_b) r.theorem_class = TheoremClass::B;
  else r.theorem_class = TheoremClass::D;
  if (regular_normal && aut_orbits >= 0)
    r.notes.push_back("regular normal subgroup found; Aut-orbit count " +
                      std::to_string(aut_orbits));
  return r;
}

bool lemma_2_3_check(const Rank3Report &report, const PermGroup &g) {
  if (report.rank != 3 || !report.imprimitive)
    throw std::invalid_argument(
        "lemma_2_3_check requires a rank-3 imprimitive group");
  BlockSystem bs = analysis_block_system(g);
  const std::vector<int> &cell_b = bs.parts()[0];
  const std::vector<int> &cell_b2 = bs.parts()[1];
  const int beta = cell_b[0], beta2 = cell_b2[0];

  // (i) G_{B,B'} transitive on B x B': BFS on pairs.
  PermGroup gbb = two_block_stabilizer(g, bs, 0, 1);
  {
    std::set<std::pair<int, int>> seen = {{beta, beta2}};
    std::vector<std::pair<int, int>> frontier = {{beta, beta2}};
    while (!frontier.empty()) {
      auto [x, y] = frontier.back();
      frontier.pop_back();
      for (const Perm &s : gbb.generators()) {
        std::pair<int, int> im = {s(x), s(y)};
        if (seen.insert(im).second) frontier.push_back(im);
      }
    }
    if (seen.size() != static_cast<size_t>(report.block_size) *
                           report.block_size)
      return false;
  }

  // (ii) G_beta transitive on the blocks other than B.
  {
    PermGroup stab = g.point_stabilizer(beta);
    std::vector<Perm> induced;
    for (const Perm &s : stab.generators())
      induced.push_back(bs.induced_block_perm(s));
    std::vector<int> orb = orbit_of(1, induced);
    if (static_cast<int>(orb.size()) != report.block_count - 1) return false;
    for (int b : orb)
      if (b == 0) return false;
  }

  // Index identity |G_{B,B'} : G_{beta,beta'}| = |B|^2.
  PermGroup two_point = g.pointwise_stabilizer({beta, beta2});
  unsigned long long bsq = static_cast<unsigned long long>(report.block_size) *
                           report.block_size;
  return gbb.order() == two_point.order() * bsq;
}

bool corollary_2_4_check(const PermGroup &g) {
  if (!g.is_transitive())
    throw std::invalid_argument("corollary_2_4_check requires transitivity");
  std::vector<BlockSystem> systems =
      g.rank() == 3 ? nontrivial_block_systems_rank3(g)
                    : nontrivial_block_systems(g);
  if (systems.empty())
    throw std::invalid_argument("corollary_2_4_check requires imprimitivity");
  const BlockSystem &bs = systems[0];
  PermGroup kernel = block_action_kernel(g, bs);
  PermGroup k_b = kernel_pointwise_block(kernel, bs, 0);
  bool transitive_other = false;
  for (int b = 1; b < bs.block_count() && !transitive_other; ++b)
    transitive_other = transitive_on_block(k_b, bs, b);
  if (transitive_other && g.rank() != 3)
    throw std::logic_error(
        "corollary 2.4 violated: K_(B) transitive on B' but rank != 3");
  return transitive_other;
}

ClassifyResult classify_theorem_1_2(const PermGroup &g) {
  Rank3Report report = analyze(g);
  return ClassifyResult{report.theorem_class, report.evidence, report.notes};
}

} // namespace rank3kit
