#pragma once

#include <vector>

#include "rank3kit/perm_group.hpp"

namespace rank3kit {

/// Structural predicates of a transitive group.  Instances constructed by
/// structure_flags always satisfy the implication chain
/// primitive => quasiprimitive => innately transitive => semiprimitive
/// (violations throw std::logic_error).
struct StructureFlags {
  bool semiregular = false;
  bool semiprimitive = false;
  bool quasiprimitive = false;
  bool innately_transitive = false;
  bool primitive = false;
};

/// True iff the transitive group g has no nontrivial block system, decided
/// by Atkinson seeds (0, x) for every x != 0.
bool is_primitive(const PermGroup &g);

/// True iff every normal subgroup of g is transitive or semiregular.
/// Decided over single-element class closures: if some normal N is
/// intransitive and not semiregular, a non-identity element of N with a
/// fixed point has an intransitive, non-semiregular closure.
bool is_semiprimitive(const PermGroup &g,
                      unsigned long long cap = kDefaultEnumerationCap);

/// True iff every nontrivial normal subgroup of g is transitive.
bool is_quasiprimitive(const PermGroup &g,
                       unsigned long long cap = kDefaultEnumerationCap);

/// The minimal normal subgroups of g: inclusion-minimal elements among the
/// normal closures of single class representatives.
std::vector<PermGroup> minimal_normal_subgroups(
    const PermGroup &g, unsigned long long cap = kDefaultEnumerationCap);

/// True iff some minimal normal subgroup of g is transitive.
bool is_innately_transitive(const PermGroup &g,
                            unsigned long long cap = kDefaultEnumerationCap);

StructureFlags structure_flags(const PermGroup &g,
                               unsigned long long cap = kDefaultEnumerationCap);

enum class SocleType { affine, almost_simple, other };

const char *to_string(SocleType t);

struct SocleInfo {
  PermGroup socle;
  SocleType type = SocleType::other;
};

/// Socle (join of minimal normal subgroups) and its coarse type:
/// affine iff the socle is abelian and regular; almost-simple iff the socle
/// is the unique minimal normal subgroup, nonabelian, with trivial
/// centralizer in g.  When require_2transitive is set, throws
/// std::invalid_argument unless rank(g) == 2.
SocleInfo socle_and_type(const PermGroup &g, bool require_2transitive = false,
                         unsigned long long cap = kDefaultEnumerationCap);

/// O_p(g): the largest normal p-subgroup, generated by the class
/// representatives whose normal closure is a p-group.
PermGroup largest_normal_p_subgroup(
    const PermGroup &g, long long p,
    unsigned long long cap = kDefaultEnumerationCap);

} // namespace rank3kit
