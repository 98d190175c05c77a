#include "rank3kit/structure.hpp"

#include <stdexcept>

#include "rank3kit/block_system.hpp"
#include "rank3kit/group_algorithms.hpp"
#include "rank3kit/number_theory.hpp"

namespace rank3kit {

namespace {

void require_transitive(const PermGroup &g) {
  if (!g.is_transitive())
    throw std::invalid_argument("operation requires a transitive group");
}

/// Normal closures of single nontrivial class representatives.
std::vector<PermGroup> class_closures(const PermGroup &g,
                                      unsigned long long cap) {
  std::vector<PermGroup> out;
  for (const Perm &rep : conjugacy_class_representatives(g, cap)) {
    if (rep.is_identity()) continue;
    out.push_back(normal_closure(g, {rep}));
  }
  return out;
}

} // namespace

bool is_primitive(const PermGroup &g) {
  require_transitive(g);
  if (g.degree() == 1) return true;
  for (int x = 1; x < g.degree(); ++x)
    if (minimal_block_system(g, {0, x}).block_count() != 1) return false;
  return true;
}

bool is_semiprimitive(const PermGroup &g, unsigned long long cap) {
  require_transitive(g);
  for (const PermGroup &n : class_closures(g, cap))
    if (!n.is_transitive() && !n.is_semiregular()) return false;
  return true;
}

bool is_quasiprimitive(const PermGroup &g, unsigned long long cap) {
  require_transitive(g);
  for (const PermGroup &n : class_closures(g, cap))
    if (!n.is_transitive()) return false;
  return true;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &g,
                                                unsigned long long cap) {
  require_transitive(g);
  std::vector<PermGroup> closures = class_closures(g, cap);
  std::vector<PermGroup> minimal;
  for (size_t i = 0; i < closures.size(); ++i) {
    bool is_min = true;
    for (size_t j = 0; j < closures.size() && is_min; ++j) {
      if (i == j) continue;
      if (closures[j].order() >= closures[i].order()) continue;
      bool contained = true;
      for (const Perm &s : closures[j].generators())
        if (!closures[i].contains(s)) {
          contained = false;
          break;
        }
      if (contained) is_min = false;
    }
    if (!is_min) continue;
    bool duplicate = false;
    for (const PermGroup &m : minimal) {
      if (m.order() != closures[i].order()) continue;
      bool same = true;
      for (const Perm &s : closures[i].generators())
        if (!m.contains(s)) {
          same = false;
          break;
        }
      if (same) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) minimal.push_back(closures[i]);
  }
  return minimal;
}

bool is_innately_transitive(const PermGroup &g, unsigned long long cap) {
  for (const PermGroup &n : minimal_normal_subgroups(g, cap))
    if (n.is_transitive()) return true;
  return false;
}

StructureFlags structure_flags(const PermGroup &g, unsigned long long cap) {
  StructureFlags f;
  f.semiregular = g.is_semiregular();
  f.semiprimitive = is_semiprimitive(g, cap);
  f.quasiprimitive = is_quasiprimitive(g, cap);
  f.innately_transitive = is_innately_transitive(g, cap);
  f.primitive = is_primitive(g);
  if ((f.primitive && !f.quasiprimitive) ||
      (f.quasiprimitive && !f.innately_transitive) ||
      (f.innately_transitive && !f.semiprimitive))
    throw std::logic_error("structure implication chain violated");
  return f;
}

const char *to_string(SocleType t) {
  switch (t) {
    case SocleType::affine: return "affine";
    case SocleType::almost_simple: return "almost-simple";
    default: return "other";
  }
}

SocleInfo socle_and_type(const PermGroup &g, bool require_2transitive,
                         unsigned long long cap) {
  require_transitive(g);
  if (require_2transitive && g.rank() != 2)
    throw std::invalid_argument("socle_and_type: group is not 2-transitive");
  std::vector<PermGroup> minimals = minimal_normal_subgroups(g, cap);
  std::vector<const PermGroup *> ptrs;
  for (const PermGroup &m : minimals) ptrs.push_back(&m);
  SocleInfo info{ptrs.empty() ? PermGroup::trivial(g.degree()) : join(ptrs),
                 SocleType::other};
  if (info.socle.is_trivial()) return info;
  if (info.socle.is_abelian() && info.socle.is_regular()) {
    info.type = SocleType::affine;
  } else if (minimals.size() == 1 && !info.socle.is_abelian() &&
             centralizer(g, info.socle.generators(), cap).is_trivial()) {
    info.type = SocleType::almost_simple;
  }
  return info;
}

PermGroup largest_normal_p_subgroup(const PermGroup &g, long long p,
                                    unsigned long long cap) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::vector<Perm> gens;
  for (const Perm &rep : conjugacy_class_representatives(g, cap)) {
    if (rep.is_identity()) continue;
    PermGroup n = normal_closure(g, {rep});
    unsigned long long order = n.order();
    while (order % p == 0) order /= p;
    if (order == 1)
      for (const Perm &s : n.generators()) gens.push_back(s);
  }
  PermGroup result(g.degree(), std::move(gens));
  unsigned long long order = result.order();
  while (order % p == 0) order /= p;
  if (order != 1)
    throw std::logic_error("O_p computation produced a non-p-group");
  return result;
}

} // namespace rank3kit
