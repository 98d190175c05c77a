#include "rank3kit/group_algorithms.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "rank3kit/errors.hpp"

namespace rank3kit {

SubgroupAccumulator::SubgroupAccumulator(int degree)
    : group_(PermGroup::trivial(degree)) {}

bool SubgroupAccumulator::add(const Perm &p) {
  if (group_.contains(p))
    return false;
  std::vector<Perm> gens = group_.generators();
  gens.push_back(p);
  group_ = PermGroup(group_.degree(), std::move(gens));
  return true;
}

std::vector<Perm> conjugacy_class_representatives(const PermGroup &g,
                                                  unsigned long long cap) {
  if (g.order() > cap)
    throw CapacityError("conjugacy class enumeration cap of " +
                        std::to_string(cap) + " exceeded");
  std::vector<Perm> elems = g.elements(cap);
  std::sort(elems.begin(), elems.end());
  std::unordered_map<Perm, int, PermHash> index;
  index.reserve(elems.size());
  for (size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], static_cast<int>(i));

  std::vector<char> assigned(elems.size(), 0);
  std::vector<Perm> reps;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (assigned[i])
      continue;
    reps.push_back(elems[i]);
    // Conjugation orbit under the generators.
    std::vector<int> work = {static_cast<int>(i)};
    assigned[i] = 1;
    while (!work.empty()) {
      int cur = work.back();
      work.pop_back();
      for (const Perm &s : g.generators()) {
        Perm conj = elems[cur].conjugated_by(s);
        int j = index.at(conj);
        if (!assigned[j]) {
          assigned[j] = 1;
          work.push_back(j);
        }
      }
    }
  }
  return reps;
}

PermGroup normal_closure(const PermGroup &g, const std::vector<Perm> &elems) {
  for (const Perm &p : elems)
    if (!g.contains(p))
      throw std::invalid_argument(
          "normal closure seed is not a member of the group");
  SubgroupAccumulator acc(g.degree());
  std::vector<Perm> work;
  for (const Perm &p : elems)
    if (acc.add(p))
      work.push_back(p);
  while (!work.empty()) {
    Perm cur = work.back();
    work.pop_back();
    for (const Perm &s : g.generators()) {
      Perm conj = cur.conjugated_by(s);
      if (acc.add(conj))
        work.push_back(conj);
    }
  }
  return acc.group();
}

PermGroup join(const std::vector<const PermGroup *> &groups) {
  if (groups.empty())
    throw std::invalid_argument("join of an empty list");
  int degree = groups[0]->degree();
  std::vector<Perm> gens;
  for (const PermGroup *h : groups) {
    if (h->degree() != degree)
      throw std::invalid_argument("degree mismatch in join");
    gens.insert(gens.end(), h->generators().begin(), h->generators().end());
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup centralizer(const PermGroup &g, const std::vector<Perm> &centralized,
                      unsigned long long cap) {
  if (g.order() > cap)
    throw CapacityError("centralizer element-filter cap of " +
                        std::to_string(cap) + " exceeded");
  SubgroupAccumulator acc(g.degree());
  for (const Perm &x : g.elements(cap)) {
    bool commutes = true;
    for (const Perm &c : centralized)
      if (x * c != c * x) {
        commutes = false;
        break;
      }
    if (commutes)
      acc.add(x);
  }
  return acc.group();
}

PermGroup derived_subgroup(const PermGroup &g) {
  std::vector<Perm> commutators;
  const auto &gens = g.generators();
  for (const Perm &a : gens)
    for (const Perm &b : gens) {
      Perm c = (a * b).inverse() * (b * a);
      if (!c.is_identity())
        commutators.push_back(c);
    }
  if (commutators.empty())
    return PermGroup::trivial(g.degree());
  return normal_closure(g, commutators);
}

namespace {

// Canonical key for a subgroup: sorted list of element indices.
struct VecHash {
  size_t operator()(const std::vector<int> &v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace

std::vector<PermGroup> all_normal_subgroups(const PermGroup &g,
                                            unsigned long long cap) {
  if (g.order() > cap)
    throw CapacityError("normal subgroup enumeration cap of " +
                        std::to_string(cap) + " exceeded");
  std::vector<Perm> reps = conjugacy_class_representatives(g, cap);

  // Every normal subgroup is a join of single-class normal closures, so the
  // join-closure of those closures is the full list.
  std::vector<PermGroup> closures;
  for (const Perm &rep : reps)
    closures.push_back(normal_closure(g, {rep})); // rep == id gives trivial

  auto key_of = [&](const PermGroup &h) {
    std::vector<Perm> elems = h.elements(cap);
    std::sort(elems.begin(), elems.end());
    std::vector<size_t> key;
    key.reserve(elems.size());
    for (const Perm &e : elems)
      key.push_back(e.hash());
    return key;
  };

  std::vector<PermGroup> found;
  std::vector<std::vector<size_t>> keys;
  auto add_if_new = [&](const PermGroup &h) {
    auto key = key_of(h);
    for (const auto &k : keys)
      if (k == key)
        return false;
    keys.push_back(std::move(key));
    found.push_back(h);
    return true;
  };

  for (const auto &c : closures)
    add_if_new(c);
  // Fixpoint under pairwise joins.
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      PermGroup joined = join({&found[i], &found[j]});
      add_if_new(joined);
    }
  return found;
}

std::vector<std::vector<int>> all_subgroups(const PermGroup &g,
                                            std::vector<Perm> &elements_out,
                                            unsigned long long cap) {
  if (g.order() > cap)
    throw CapacityError("subgroup enumeration cap of " + std::to_string(cap) +
                        " exceeded");
  std::vector<Perm> elems = g.elements(cap);
  std::sort(elems.begin(), elems.end());
  elements_out = elems;
  const int n = static_cast<int>(elems.size());
  std::unordered_map<Perm, int, PermHash> index;
  for (int i = 0; i < n; ++i)
    index.emplace(elems[i], i);
  // Multiplication table over element indices.
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] = index.at(elems[i] * elems[j]);

  const int id = index.at(Perm(g.degree()));
  auto closure = [&](std::vector<int> seed) {
    std::vector<char> in(n, 0);
    std::vector<int> members;
    auto push = [&](int x) {
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    };
    push(id);
    for (int x : seed)
      push(x);
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = 0; b <= a; ++b) {
        push(table[static_cast<size_t>(members[a]) * n + members[b]]);
        push(table[static_cast<size_t>(members[b]) * n + members[a]]);
      }
    std::sort(members.begin(), members.end());
    return members;
  };

  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<std::vector<int>> result;
  std::vector<std::vector<int>> work;
  auto add = [&](std::vector<int> h) {
    if (seen.insert(h).second) {
      result.push_back(h);
      work.push_back(std::move(h));
    }
  };
  add(closure({}));
  for (int e = 0; e < n; ++e)
    add(closure({e}));
  while (!work.empty()) {
    std::vector<int> h = std::move(work.back());
    work.pop_back();
    if (static_cast<int>(h.size()) == n)
      continue;
    std::vector<char> in(n, 0);
    for (int x : h)
      in[x] = 1;
    for (int e = 0; e < n; ++e) {
      if (in[e])
        continue;
      std::vector<int> seed = h;
      seed.push_back(e);
      add(closure(std::move(seed)));
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto &a, const auto &b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return result;
}

} // namespace rank3kit
