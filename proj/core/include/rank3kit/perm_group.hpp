#pragma once

#include <memory>
#include <vector>

#include "rank3kit/perm.hpp"
#include "rank3kit/stabilizer_chain.hpp"

namespace rank3kit {

/// Default cap for operations that enumerate all group elements.
inline constexpr unsigned long long kDefaultEnumerationCap = 1'000'000;

/// A permutation group given by generators, with a lazily built stabilizer
/// chain providing certified order, membership and stabilizer queries.
///
/// A PermGroup is mutable only while its chain is being constructed; once
/// built (or once the group is shared), all queries are read-only.
class PermGroup {
public:
  /// Group generated by `generators` on {0,...,degree-1}.  An empty
  /// generator list yields the trivial group.
  PermGroup(int degree, std::vector<Perm> generators);

  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }

  int degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return generators_; }

  /// The default chain (base chosen automatically in increasing point
  /// order).  Built on first use and cached.
  const StabilizerChain &chain() const;

  unsigned long long order() const { return chain().order(); }
  bool is_trivial() const { return order() == 1; }
  bool contains(const Perm &p) const;

  /// Orbit of x in deterministic breadth-first order.
  std::vector<int> orbit(int x) const;

  /// All orbits, each in breadth-first order, sorted by least element.
  std::vector<std::vector<int>> orbits() const;

  bool is_transitive() const;

  /// {h in G : h(x) = x}, with certified generators from a chain based at x.
  PermGroup point_stabilizer(int x) const;

  /// Pointwise stabilizer of a list of points.
  PermGroup pointwise_stabilizer(const std::vector<int> &points) const;

  /// Number of orbits of a point stabilizer (= number of orbits on ordered
  /// pairs).  Throws std::invalid_argument if the group is intransitive.
  int rank() const;

  /// Sizes of the point-stabilizer orbits, sorted ascending; sums to the
  /// degree.  Throws if intransitive.
  std::vector<long long> subdegrees() const;

  /// Orbits of the stabilizer of x on the whole domain.
  std::vector<std::vector<int>> stabilizer_orbits(int x) const;

  /// All elements (deterministic order); throws CapacityError beyond cap.
  std::vector<Perm> elements(
      unsigned long long cap = kDefaultEnumerationCap) const;

  /// True iff only the identity fixes a point (checked orbit by orbit).
  bool is_semiregular() const;

  bool is_regular() const { return is_transitive() && is_semiregular(); }

  bool is_abelian() const;

private:
  int degree_;
  std::vector<Perm> generators_;
  mutable std::shared_ptr<const StabilizerChain> chain_;
};

/// Orbit of x under a raw generator list (no group construction).
std::vector<int> orbit_of(int x, const std::vector<Perm> &generators);

} // namespace rank3kit
