#pragma once

#include <vector>

#include "rank3kit/perm.hpp"
#include "rank3kit/perm_group.hpp"

namespace rank3kit {

/// One representative per conjugacy class, computed as conjugation orbits on
/// a sorted list of all elements.  Deterministic: representatives are the
/// least element of each class, listed in increasing order (so the identity
/// comes first).  Throws CapacityError if order(g) exceeds cap.
std::vector<Perm> conjugacy_class_representatives(
    const PermGroup &g, unsigned long long cap = kDefaultEnumerationCap);

/// Smallest normal subgroup of g containing elems.  Throws
/// std::invalid_argument if some element is not a member of g.
PermGroup normal_closure(const PermGroup &g, const std::vector<Perm> &elems);

/// Subgroup generated by the union of the generators of the given groups
/// (all of the same degree).
PermGroup join(const std::vector<const PermGroup *> &groups);

/// Centralizer of the subgroup generated by `centralized` inside g, by
/// element filtering (desk scale only; throws CapacityError above cap).
PermGroup centralizer(const PermGroup &g, const std::vector<Perm> &centralized,
                      unsigned long long cap = kDefaultEnumerationCap);

/// Derived subgroup [g, g] as the normal closure of generator commutators.
PermGroup derived_subgroup(const PermGroup &g);

/// Every normal subgroup of g (including 1 and g), as joins of single-class
/// normal closures.  Intended for small groups; throws CapacityError if
/// order(g) > cap.
std::vector<PermGroup> all_normal_subgroups(const PermGroup &g,
                                            unsigned long long cap = 2000);

/// Exhaustive subgroup enumeration for tiny groups, as sorted index sets
/// into the sorted element list that is returned through `elements_out`.
/// Throws CapacityError if order(g) > cap.
std::vector<std::vector<int>> all_subgroups(const PermGroup &g,
                                            std::vector<Perm> &elements_out,
                                            unsigned long long cap = 200);

/// Incrementally build a subgroup from a stream of candidate elements,
/// skipping members already generated.
class SubgroupAccumulator {
public:
  explicit SubgroupAccumulator(int degree);

  /// Returns true if p enlarged the subgroup.
  bool add(const Perm &p);

  const PermGroup &group() const { return group_; }
  unsigned long long order() const { return group_.order(); }
  bool contains(const Perm &p) const { return group_.contains(p); }

private:
  PermGroup group_;
};

} // namespace rank3kit
