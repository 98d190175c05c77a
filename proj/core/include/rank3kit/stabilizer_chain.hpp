#pragma once

#include <cstdint>
#include <vector>

#include "rank3kit/perm.hpp"

namespace rank3kit {

/// Stabilizer chain (base and strong generating set) built by a
/// deterministic Schreier-Sims algorithm.
///
/// Base points are chosen in increasing point order, except that an explicit
/// base prefix may be requested; a prefix point always gets its own level, so
/// the strong generators of level k generate the pointwise stabilizer of the
/// first k base points.  Transversal entries are stored as Schreier-tree
/// edges (predecessor point and generator index) and multiplied out on
/// demand, so memory stays proportional to the domain.
///
/// The construction verifies that every Schreier generator sifts to the
/// identity, so reported orders are certified.
class StabilizerChain {
public:
  struct Level {
    int base_point = -1;
    std::vector<Perm> generators; // strong generators fixing all earlier base points
    std::vector<int> orbit;       // deterministic breadth-first order
    std::vector<int> tree_prev;   // per domain point; -1 if outside orbit
    std::vector<int> tree_gen;    // generator index of the tree edge
  };

  StabilizerChain(int degree, const std::vector<Perm> &generators,
                  const std::vector<int> &base_prefix = {});

  int degree() const { return degree_; }
  const std::vector<Level> &levels() const { return levels_; }

  std::vector<int> base() const;

  /// Product of basic orbit lengths.  Throws CapacityError beyond 2^62.
  unsigned long long order() const;

  bool contains(const Perm &p) const;

  /// Residue of sifting p through levels [from, end); identity iff p is in
  /// the pointwise stabilizer of base[0..from-1] intersected with the group.
  Perm sift(const Perm &p, size_t from = 0) const;

  /// Transversal element u with base_point^u = point (point must lie in the
  /// level's basic orbit).
  Perm transversal(size_t level, int point) const;

  /// Strong generators of the stabilizer of base[0..k-1] (level k).  For
  /// k == levels.size() the group is trivial and the list is empty.
  std::vector<Perm> level_generators(size_t k) const;

  /// All elements in deterministic order (product of transversals).
  /// Throws CapacityError if the order exceeds max_count.
  std::vector<Perm> elements(unsigned long long max_count) const;

  /// Re-checks the Schreier condition at every level; returns true iff the
  /// chain is a valid BSGS for its generators.
  bool verify() const;

private:
  void extend_orbit(Level &level);
  void build(const std::vector<Perm> &generators,
             const std::vector<int> &base_prefix);
  void settle_level(size_t i);

  int degree_;
  std::vector<Level> levels_;
};

} // namespace rank3kit
