#pragma once

#include <string>
#include <vector>

#include "rank3kit/perm_group.hpp"

namespace rank3kit {

/// Classification of a regular normal subgroup into the listed small-orbit
/// shapes (tags mutually exclusive).
enum class RegularNormalClass {
  elementary_abelian,
  frobenius_pq,
  homocyclic_p2,
  special_2_exp4,
  special_p_expp,
  none_of_listed,
};

const char *to_string(RegularNormalClass c);

/// A finite group of order <= 2000 given by its multiplication table.
/// Element 0 is always the identity.  Validation checks the Latin-square
/// property always, and associativity fully for order <= 200 (1000
/// deterministic pseudo-random triples beyond that).
class SmallGroupTable {
public:
  static constexpr int kMaxOrder = 2000;
  static constexpr int kAutCap = 512;

  /// From an explicit table; table[a][b] = a*b.  The identity is relabeled
  /// to index 0 if necessary.
  explicit SmallGroupTable(std::vector<std::vector<int>> table);

  /// From the element list of a permutation group (sorted, deterministic).
  static SmallGroupTable from_group(const PermGroup &g,
                                    unsigned long long cap = kMaxOrder);

  /// Text format: header `order n`, then n lines of n 1-indexed entries.
  static SmallGroupTable parse(const std::string &text);
  std::string to_text() const;

  int order() const { return static_cast<int>(table_.size()); }
  int product(int a, int b) const { return table_[a][b]; }
  int identity() const { return 0; }
  int inverse(int a) const { return inverse_[a]; }
  long long element_order(int a) const;
  long long exponent() const;
  bool is_abelian() const;

  /// Closure of a seed set as a sorted element-index list.
  std::vector<int> closure(std::vector<int> seed) const;

  std::vector<int> center() const;
  std::vector<int> derived_subgroup() const;
  std::vector<int> conjugacy_class(int x) const;

  /// Frattini subgroup of a p-group: closure of p-th powers and commutators.
  /// Throws std::invalid_argument if the order is not a prime power.
  std::vector<int> frattini_p_group() const;

  /// O_p: union-closure of elements whose conjugation-class closure is a
  /// p-group.
  std::vector<int> largest_normal_p_subgroup(long long p) const;

  const std::vector<std::vector<int>> &table() const { return table_; }

private:
  void validate() const;

  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

/// The full automorphism group, each automorphism as an image vector over
/// element indices, found by brute-force backtracking over the images of a
/// greedily chosen generating sequence.  Sorted, deterministic.  Throws
/// CapacityError if order > SmallGroupTable::kAutCap.
std::vector<std::vector<int>> automorphism_group(const SmallGroupTable &t);

struct AutOrbitResult {
  int orbit_count = 0;
  RegularNormalClass cls = RegularNormalClass::none_of_listed;
  unsigned long long aut_order = 0;
};

/// Orbit count of Aut(t) on the elements of t, plus the class tag.
AutOrbitResult automorphism_orbit_count(const SmallGroupTable &t);

/// The class tag alone (no Aut computation).
RegularNormalClass classify_regular_normal(const SmallGroupTable &t);

struct FrobeniusWitness {
  bool is_frobenius = false;
  int a = 0;                       // O_p elementary abelian of order p^a
  long long complement_order = 0;  // |R|
};

/// True iff O_p(t) is elementary abelian of order p^a and a cyclic
/// complement R exists acting fixed-point-freely on it.
FrobeniusWitness is_frobenius_with_cyclic_complement(const SmallGroupTable &t,
                                                     long long p);
FrobeniusWitness is_frobenius_with_cyclic_complement(const PermGroup &g,
                                                     long long p);

} // namespace rank3kit
