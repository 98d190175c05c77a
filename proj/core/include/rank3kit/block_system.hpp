#pragma once

#include <utility>
#include <vector>

#include "rank3kit/perm.hpp"
#include "rank3kit/perm_group.hpp"

namespace rank3kit {

/// A group-invariant partition of the domain into equal-size cells.
class BlockSystem {
public:
  /// From an explicit partition; validates that the cells are disjoint,
  /// cover {0,...,degree-1} and all have one size dividing the degree.
  BlockSystem(int degree, std::vector<std::vector<int>> parts);

  int degree() const { return degree_; }
  int block_size() const { return static_cast<int>(parts_[0].size()); }
  int block_count() const { return static_cast<int>(parts_.size()); }

  /// Cells sorted internally and ordered by least element.
  const std::vector<std::vector<int>> &parts() const { return parts_; }

  /// Index of the cell containing x.
  int block_of(int x) const { return part_of_[x]; }

  bool is_trivial() const {
    return block_count() == 1 || block_size() == 1;
  }

  /// True iff every generator of g maps cells to cells.
  bool invariant_under(const PermGroup &g) const;

  /// The induced permutation of cell indices under p.
  Perm induced_block_perm(const Perm &p) const;

  bool operator==(const BlockSystem &other) const {
    return degree_ == other.degree_ && parts_ == other.parts_;
  }

private:
  int degree_;
  std::vector<std::vector<int>> parts_;
  std::vector<int> part_of_;
};

/// Minimal block system of a transitive group whose block contains both seed
/// points (Atkinson's algorithm).  Returns the trivial one-cell system when
/// the seed pair forces primitivity.
BlockSystem minimal_block_system(const PermGroup &g, std::pair<int, int> seed);

/// True iff `block` (a set of points) is a block of the transitive group g.
bool is_block(const PermGroup &g, const std::vector<int> &block);

/// All non-trivial block systems of a transitive rank-3 group, found by
/// testing each union of point-stabilizer orbits through the base point.
/// Throws std::invalid_argument unless rank(g) == 3.
std::vector<BlockSystem> nontrivial_block_systems_rank3(const PermGroup &g);

/// All non-trivial block systems of a transitive group of any rank (same
/// orbit-union enumeration, no rank restriction).
std::vector<BlockSystem> nontrivial_block_systems(const PermGroup &g);

/// The induced group on the cells of a block system.
PermGroup block_action(const PermGroup &g, const BlockSystem &bs);

/// Kernel of the block action: the subgroup fixing every cell setwise, with
/// certified generators (computed from a chain over the extended domain of
/// points plus cells).
PermGroup block_action_kernel(const PermGroup &g, const BlockSystem &bs);

/// Setwise stabilizer of one cell.
PermGroup block_stabilizer(const PermGroup &g, const BlockSystem &bs,
                           int block_index);

/// Setwise stabilizer of two cells.
PermGroup two_block_stabilizer(const PermGroup &g, const BlockSystem &bs,
                               int block_a, int block_b);

/// The action of h restricted to one cell (h must stabilize the cell
/// setwise); points of the cell are renumbered 0..block_size-1 in
/// increasing order.
PermGroup restrict_to_block(const PermGroup &h, const BlockSystem &bs,
                            int block_index);

} // namespace rank3kit
