#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rank3kit {

/// A permutation of {0,...,n-1}, stored as its image sequence.
///
/// Composition convention (used everywhere in this library): permutations
/// act on the right, so x^(a*b) = (x^a)^b.  That is, (a * b)(x) = b(a(x)).
///
/// Points are 0-indexed internally.  All external text formats (cycle
/// notation, image lines) are 1-indexed; see perm_io.hpp.
class Perm {
public:
  /// The identity permutation of the given degree.
  explicit Perm(int degree);

  /// From an explicit image sequence.  Throws std::invalid_argument if the
  /// sequence is not a bijection of {0,...,n-1}.
  explicit Perm(std::vector<int> images);

  /// From cycles over 0-indexed points, e.g. Perm::from_cycles(4, {{0,1,2}}).
  static Perm from_cycles(int degree,
                          std::initializer_list<std::vector<int>> cycles);
  static Perm from_cycles(int degree,
                          const std::vector<std::vector<int>> &cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  int apply(int x) const { return images_[x]; }

  bool is_identity() const;

  /// (a * b)(x) = b(a(x)); throws on degree mismatch.
  Perm operator*(const Perm &other) const;

  Perm inverse() const;
  Perm pow(long long k) const;

  /// Conjugate: this^g = g^-1 * this * g.
  Perm conjugated_by(const Perm &g) const;

  /// Multiplicative order (lcm of cycle lengths).
  long long order() const;

  std::vector<int> fixed_points() const;
  int count_fixed_points() const;

  /// Cycles of length >= 2, each starting at its least point, sorted.
  std::vector<std::vector<int>> cycles() const;

  const std::vector<int> &images() const { return images_; }

  bool operator==(const Perm &other) const = default;
  auto operator<=>(const Perm &other) const = default;

  size_t hash() const;

private:
  struct unchecked_t {};
  Perm(std::vector<int> images, unchecked_t) : images_(std::move(images)) {}

  std::vector<int> images_;
};

struct PermHash {
  size_t operator()(const Perm &p) const { return p.hash(); }
};

} // namespace rank3kit
