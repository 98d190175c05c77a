#include "rank3kit/stabilizer_chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "rank3kit/errors.hpp"

namespace rank3kit {

namespace {

int min_moved_point(const Perm &p) {
  for (int x = 0; x < p.degree(); ++x)
    if (p(x) != x)
      return x;
  return -1;
}

} // namespace

StabilizerChain::StabilizerChain(int degree,
                                 const std::vector<Perm> &generators,
                                 const std::vector<int> &base_prefix)
    : degree_(degree) {
  for (const Perm &g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
  for (int b : base_prefix)
    if (b < 0 || b >= degree)
      throw std::invalid_argument("base point out of range");
  build(generators, base_prefix);
}

void StabilizerChain::extend_orbit(Level &level) {
  if (level.tree_prev.empty()) {
    level.tree_prev.assign(degree_, -1);
    level.tree_gen.assign(degree_, -1);
    level.orbit = {level.base_point};
    level.tree_prev[level.base_point] = level.base_point;
  }
  // Breadth-first closure; deterministic because orbit order and generator
  // order are fixed.
  for (size_t head = 0; head < level.orbit.size(); ++head) {
    int x = level.orbit[head];
    for (size_t gi = 0; gi < level.generators.size(); ++gi) {
      int y = level.generators[gi](x);
      if (level.tree_prev[y] == -1) {
        level.tree_prev[y] = x;
        level.tree_gen[y] = static_cast<int>(gi);
        level.orbit.push_back(y);
      }
    }
  }
}

Perm StabilizerChain::transversal(size_t li, int point) const {
  const Level &level = levels_[li];
  if (point < 0 || point >= degree_ || level.tree_prev[point] == -1)
    throw std::invalid_argument("point not in basic orbit");
  // Multiply the generator labels along the Schreier-tree path.
  std::vector<int> path_gens;
  int x = point;
  while (x != level.base_point) {
    path_gens.push_back(level.tree_gen[x]);
    x = level.tree_prev[x];
  }
  Perm u(degree_);
  for (auto it = path_gens.rbegin(); it != path_gens.rend(); ++it)
    u = u * level.generators[*it];
  return u;
}

Perm StabilizerChain::sift(const Perm &p, size_t from) const {
  Perm g = p;
  for (size_t i = from; i < levels_.size(); ++i) {
    int beta = g(levels_[i].base_point);
    if (beta == levels_[i].base_point)
      continue;
    if (levels_[i].tree_prev[beta] == -1)
      return g; // drops out here
    g = g * transversal(i, beta).inverse();
  }
  return g;
}

void StabilizerChain::build(const std::vector<Perm> &generators,
                            const std::vector<int> &base_prefix) {
  for (int b : base_prefix) {
    Level level;
    level.base_point = b;
    levels_.push_back(std::move(level));
  }

  // Distribute the raw generators: a generator is a strong generator for
  // every level whose base prefix it fixes.
  for (const Perm &g : generators) {
    if (g.is_identity())
      continue;
    size_t i = 0;
    while (true) {
      if (i == levels_.size()) {
        Level level;
        level.base_point = min_moved_point(g);
        levels_.push_back(std::move(level));
      }
      levels_[i].generators.push_back(g);
      if (g(levels_[i].base_point) != levels_[i].base_point)
        break;
      ++i;
    }
  }
  if (levels_.empty())
    return; // trivial group
  for (auto &level : levels_)
    extend_orbit(level);

  // Verify levels bottom-up (Schreier-Sims): a level is valid once every
  // Schreier generator sifts to the identity through the deeper levels,
  // which must already be valid when the sift is performed.  Fixing a
  // residue only touches deeper levels, so the loop at the current level
  // can resume where it left off.
  for (size_t i = levels_.size(); i-- > 0;)
    settle_level(i);
}

void StabilizerChain::settle_level(size_t i) {
  for (size_t oi = 0; oi < levels_[i].orbit.size(); ++oi) {
    int beta = levels_[i].orbit[oi];
    Perm u = transversal(i, beta);
    for (size_t gi = 0; gi < levels_[i].generators.size(); ++gi) {
      Perm s = levels_[i].generators[gi];
      Perm schreier = (u * s) * transversal(i, s(beta)).inverse();
      if (schreier.is_identity())
        continue;
      Perm h = schreier;
      size_t j = i + 1;
      for (; j < levels_.size(); ++j) {
        int b = h(levels_[j].base_point);
        if (b == levels_[j].base_point)
          continue;
        if (levels_[j].tree_prev[b] == -1)
          break;
        h = h * transversal(j, b).inverse();
      }
      if (h.is_identity())
        continue;
      // New strong generator for levels i+1 .. j.
      if (j == levels_.size()) {
        Level fresh;
        fresh.base_point = min_moved_point(h);
        levels_.push_back(std::move(fresh));
        extend_orbit(levels_.back());
      }
      for (size_t k = i + 1; k <= j; ++k) {
        levels_[k].generators.push_back(h);
        extend_orbit(levels_[k]);
      }
      for (size_t k = j + 1; k-- > i + 1;)
        settle_level(k);
    }
  }
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> result;
  result.reserve(levels_.size());
  for (const auto &level : levels_)
    result.push_back(level.base_point);
  return result;
}

unsigned long long StabilizerChain::order() const {
  unsigned __int128 n = 1;
  for (const auto &level : levels_) {
    n *= level.orbit.size();
    if (n > (static_cast<unsigned __int128>(1) << 62))
      throw CapacityError("group order exceeds 2^62");
  }
  return static_cast<unsigned long long>(n);
}

bool StabilizerChain::contains(const Perm &p) const {
  if (p.degree() != degree_)
    return false;
  return sift(p).is_identity();
}

std::vector<Perm> StabilizerChain::level_generators(size_t k) const {
  if (k >= levels_.size())
    return {};
  return levels_[k].generators;
}

std::vector<Perm> StabilizerChain::elements(unsigned long long max_count) const {
  if (order() > max_count)
    throw CapacityError("element enumeration cap of " +
                        std::to_string(max_count) + " exceeded");
  std::vector<Perm> elems = {Perm(degree_)};
  for (size_t li = levels_.size(); li-- > 0;) {
    std::vector<Perm> next;
    next.reserve(elems.size() * levels_[li].orbit.size());
    for (int beta : levels_[li].orbit) {
      Perm u = transversal(li, beta);
      for (const Perm &d : elems)
        next.push_back(d * u);
    }
    elems = std::move(next);
  }
  return elems;
}

bool StabilizerChain::verify() const {
  for (size_t i = 0; i < levels_.size(); ++i) {
    const Level &level = levels_[i];
    for (int beta : level.orbit) {
      Perm u = transversal(i, beta);
      for (const Perm &s : level.generators) {
        Perm schreier = (u * s) * transversal(i, s(beta)).inverse();
        if (!sift(schreier, i + 1).is_identity())
          return false;
      }
    }
    // Strong generators of level i must fix all earlier base points.
    for (size_t k = 0; k < i; ++k)
      for (const Perm &s : level.generators)
        if (s(levels_[k].base_point) != levels_[k].base_point)
          return false;
  }
  return true;
}

} // namespace rank3kit
