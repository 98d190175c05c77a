#include "rank3kit/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

#include "rank3kit/errors.hpp"

namespace rank3kit {

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree <= 0)
    throw std::invalid_argument("group degree must be positive");
  for (const Perm &g : generators_)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
  // Drop identity generators but keep the list non-empty for convenience.
  std::erase_if(generators_, [](const Perm &g) { return g.is_identity(); });
}

const StabilizerChain &PermGroup::chain() const {
  if (!chain_)
    chain_ = std::make_shared<StabilizerChain>(degree_, generators_);
  return *chain_;
}

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != degree_)
    return false;
  return chain().contains(p);
}

std::vector<int> orbit_of(int x, const std::vector<Perm> &generators) {
  const int degree = generators.empty() ? x + 1 : generators[0].degree();
  std::vector<char> seen(degree, 0);
  std::vector<int> orbit = {x};
  seen[x] = 1;
  for (size_t head = 0; head < orbit.size(); ++head)
    for (const Perm &g : generators) {
      int y = g(orbit[head]);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  return orbit;
}

std::vector<int> PermGroup::orbit(int x) const {
  if (x < 0 || x >= degree_)
    throw std::invalid_argument("point out of range");
  return orbit_of(x, generators_);
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<char> seen(degree_, 0);
  std::vector<std::vector<int>> result;
  for (int x = 0; x < degree_; ++x) {
    if (seen[x])
      continue;
    auto orb = orbit(x);
    for (int y : orb)
      seen[y] = 1;
    result.push_back(std::move(orb));
  }
  return result;
}

bool PermGroup::is_transitive() const {
  return static_cast<int>(orbit(0).size()) == degree_;
}

PermGroup PermGroup::point_stabilizer(int x) const {
  if (x < 0 || x >= degree_)
    throw std::invalid_argument("point out of range");
  StabilizerChain based(degree_, generators_, {x});
  return PermGroup(degree_, based.level_generators(1));
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int> &points) const {
  StabilizerChain based(degree_, generators_, points);
  return PermGroup(degree_, based.level_generators(points.size()));
}

std::vector<std::vector<int>> PermGroup::stabilizer_orbits(int x) const {
  return point_stabilizer(x).orbits();
}

int PermGroup::rank() const {
  if (!is_transitive())
    throw std::invalid_argument("rank requires a transitive group");
  return static_cast<int>(stabilizer_orbits(0).size());
}

std::vector<long long> PermGroup::subdegrees() const {
  if (!is_transitive())
    throw std::invalid_argument("subdegrees require a transitive group");
  std::vector<long long> sizes;
  for (const auto &orb : stabilizer_orbits(0))
    sizes.push_back(static_cast<long long>(orb.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<Perm> PermGroup::elements(unsigned long long cap) const {
  return chain().elements(cap);
}

bool PermGroup::is_semiregular() const {
  // Only the identity may fix a point: equivalently the stabilizer of one
  // representative per orbit is trivial.
  for (const auto &orb : orbits()) {
    if (!point_stabilizer(orb[0]).is_trivial())
      return false;
  }
  return true;
}

bool PermGroup::is_abelian() const {
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
        return false;
  return true;
}

} // namespace rank3kit
