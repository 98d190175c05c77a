#include "rank3kit/block_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rank3kit {

BlockSystem::BlockSystem(int degree, std::vector<std::vector<int>> parts)
    : degree_(degree), parts_(std::move(parts)) {
  if (parts_.empty())
    throw std::invalid_argument("block system must have at least one cell");
  part_of_.assign(degree_, -1);
  size_t cell_size = parts_[0].size();
  for (auto &cell : parts_) {
    if (cell.size() != cell_size)
      throw std::invalid_argument("block system cells must have equal size");
    std::sort(cell.begin(), cell.end());
    for (int x : cell) {
      if (x < 0 || x >= degree_ || part_of_[x] != -1)
        throw std::invalid_argument("block system cells must partition the domain");
      part_of_[x] = 0; // provisional
    }
  }
  for (int x = 0; x < degree_; ++x)
    if (part_of_[x] == -1)
      throw std::invalid_argument("block system cells must cover the domain");
  std::sort(parts_.begin(), parts_.end());
  for (size_t i = 0; i < parts_.size(); ++i)
    for (int x : parts_[i])
      part_of_[x] = static_cast<int>(i);
}

Perm BlockSystem::induced_block_perm(const Perm &p) const {
  std::vector<int> images(block_count());
  for (int b = 0; b < block_count(); ++b)
    images[b] = part_of_[p(parts_[b][0])];
  return Perm(std::move(images));
}

bool BlockSystem::invariant_under(const PermGroup &g) const {
  for (const Perm &s : g.generators())
    for (const auto &cell : parts_) {
      int target = part_of_[s(cell[0])];
      for (int x : cell)
        if (part_of_[s(x)] != target)
          return false;
    }
  return true;
}

BlockSystem minimal_block_system(const PermGroup &g, std::pair<int, int> seed) {
  if (!g.is_transitive())
    throw std::invalid_argument("block systems require a transitive group");
  const int n = g.degree();
  if (seed.first < 0 || seed.first >= n || seed.second < 0 || seed.second >= n)
    throw std::invalid_argument("seed point out of range");

  // Atkinson's minimal block algorithm via union-find.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<int, int>> queue;
  auto merge = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    if (a > b)
      std::swap(a, b);
    parent[b] = a;
    queue.emplace_back(a, b);
  };
  merge(seed.first, seed.second);
  while (!queue.empty()) {
    auto [u, v] = queue.back();
    queue.pop_back();
    for (const Perm &s : g.generators())
      merge(s(u), s(v));
  }
  std::vector<std::vector<int>> cells(n);
  for (int x = 0; x < n; ++x)
    cells[find(x)].push_back(x);
  std::erase_if(cells, [](const auto &c) { return c.empty(); });
  return BlockSystem(n, std::move(cells));
}

bool is_block(const PermGroup &g, const std::vector<int> &block) {
  std::vector<int> b = block;
  std::sort(b.begin(), b.end());
  std::set<std::vector<int>> seen = {b};
  std::vector<std::vector<int>> work = {b};
  while (!work.empty()) {
    std::vector<int> cur = std::move(work.back());
    work.pop_back();
    for (const Perm &s : g.generators()) {
      std::vector<int> img(cur.size());
      for (size_t i = 0; i < cur.size(); ++i)
        img[i] = s(cur[i]);
      std::sort(img.begin(), img.end());
      if (img == b)
        continue;
      std::vector<int> inter;
      std::set_intersection(img.begin(), img.end(), b.begin(), b.end(),
                            std::back_inserter(inter));
      if (!inter.empty())
        return false;
      if (seen.insert(img).second)
        work.push_back(img);
    }
  }
  return true;
}

namespace {

std::vector<BlockSystem> block_systems_by_orbit_unions(const PermGroup &g) {
  const int n = g.degree();
  auto suborbits = g.stabilizer_orbits(0);
  // The orbit containing the base point is {0} for a point stabilizer.
  std::vector<std::vector<int>> others;
  for (const auto &orb : suborbits)
    if (!(orb.size() == 1 && orb[0] == 0))
      others.push_back(orb);

  std::vector<BlockSystem> systems;
  const size_t k = others.size();
  // Every union of suborbits through the base point, proper and non-trivial.
  for (size_t mask = 1; mask + 1 < (size_t{1} << k); ++mask) {
    std::vector<int> candidate = {0};
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t{1} << i))
        candidate.insert(candidate.end(), others[i].begin(), others[i].end());
    if (static_cast<int>(candidate.size()) == n || candidate.size() == 1)
      continue;
    if (n % candidate.size() != 0)
      continue;
    if (!is_block(g, candidate))
      continue;
    // Build the full system as the orbit of the block.
    std::sort(candidate.begin(), candidate.end());
    std::set<std::vector<int>> cells = {candidate};
    std::vector<std::vector<int>> work = {candidate};
    while (!work.empty()) {
      auto cur = std::move(work.back());
      work.pop_back();
      for (const Perm &s : g.generators()) {
        std::vector<int> img(cur.size());
        for (size_t i = 0; i < cur.size(); ++i)
          img[i] = s(cur[i]);
        std::sort(img.begin(), img.end());
        if (cells.insert(img).second)
          work.push_back(img);
      }
    }
    BlockSystem bs(n, {cells.begin(), cells.end()});
    if (std::find(systems.begin(), systems.end(), bs) == systems.end())
      systems.push_back(std::move(bs));
  }
  return systems;
}

} // namespace

std::vector<BlockSystem> nontrivial_block_systems(const PermGroup &g) {
  if (!g.is_transitive())
    throw std::invalid_argument("block systems require a transitive group");
  return block_systems_by_orbit_unions(g);
}

std::vector<BlockSystem> nontrivial_block_systems_rank3(const PermGroup &g) {
  if (!g.is_transitive())
    throw std::invalid_argument("block systems require a transitive group");
  if (g.rank() != 3)
    throw std::invalid_argument("expected a group of rank 3");
  return block_systems_by_orbit_unions(g);
}

PermGroup block_action(const PermGroup &g, const BlockSystem &bs) {
  std::vector<Perm> gens;
  for (const Perm &s : g.generators())
    gens.push_back(bs.induced_block_perm(s));
  if (gens.empty())
    return PermGroup::trivial(bs.block_count());
  return PermGroup(bs.block_count(), std::move(gens));
}

namespace {

// Extend each generator to act on points plus cells; a chain based at the
// cell points then yields certified generators for cell stabilizers.
std::vector<Perm> extended_generators(const PermGroup &g, const BlockSystem &bs) {
  const int n = g.degree();
  const int m = bs.block_count();
  std::vector<Perm> ext;
  for (const Perm &s : g.generators()) {
    std::vector<int> images(n + m);
    for (int x = 0; x < n; ++x)
      images[x] = s(x);
    Perm blocks = bs.induced_block_perm(s);
    for (int b = 0; b < m; ++b)
      images[n + b] = n + blocks(b);
    ext.emplace_back(std::move(images));
  }
  return ext;
}

PermGroup restrict_to_points(const std::vector<Perm> &ext_gens, int n) {
  std::vector<Perm> gens;
  for (const Perm &s : ext_gens) {
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x)
      images[x] = s(x);
    Perm p{std::move(images)};
    if (!p.is_identity())
      gens.push_back(std::move(p));
  }
  return PermGroup(n, std::move(gens));
}

} // namespace

PermGroup block_action_kernel(const PermGroup &g, const BlockSystem &bs) {
  const int n = g.degree();
  const int m = bs.block_count();
  std::vector<int> prefix(m);
  std::iota(prefix.begin(), prefix.end(), n);
  StabilizerChain chain(n + m, extended_generators(g, bs), prefix);
  return restrict_to_points(chain.level_generators(m), n);
}

PermGroup block_stabilizer(const PermGroup &g, const BlockSystem &bs,
                           int block_index) {
  const int n = g.degree();
  StabilizerChain chain(n + bs.block_count(), extended_generators(g, bs),
                        {n + block_index});
  return restrict_to_points(chain.level_generators(1), n);
}

PermGroup two_block_stabilizer(const PermGroup &g, const BlockSystem &bs,
                               int block_a, int block_b) {
  const int n = g.degree();
  StabilizerChain chain(n + bs.block_count(), extended_generators(g, bs),
                        {n + block_a, n + block_b});
  return restrict_to_points(chain.level_generators(2), n);
}

PermGroup restrict_to_block(const PermGroup &h, const BlockSystem &bs,
                            int block_index) {
  const auto &cell = bs.parts()[block_index];
  std::vector<int> local(h.degree(), -1);
  for (size_t i = 0; i < cell.size(); ++i)
    local[cell[i]] = static_cast<int>(i);
  std::vector<Perm> gens;
  for (const Perm &s : h.generators()) {
    std::vector<int> images(cell.size());
    for (size_t i = 0; i < cell.size(); ++i) {
      int y = s(cell[i]);
      if (y < 0 || local[y] == -1)
        throw std::invalid_argument(
            "group does not stabilize the cell setwise");
      images[i] = local[y];
    }
    Perm p{std::move(images)};
    if (!p.is_identity())
      gens.push_back(std::move(p));
  }
  return PermGroup(static_cast<int>(cell.size()), std::move(gens));
}

} // namespace rank3kit
