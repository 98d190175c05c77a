#include "rank3kit/small_group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rank3kit/errors.hpp"
#include "rank3kit/number_theory.hpp"

namespace rank3kit {

const char *to_string(RegularNormalClass c) {
  switch (c) {
    case RegularNormalClass::elementary_abelian: return "elementary-abelian";
    case RegularNormalClass::frobenius_pq: return "frobenius-pq";
    case RegularNormalClass::homocyclic_p2: return "homocyclic-p2";
    case RegularNormalClass::special_2_exp4: return "special-2-exp4";
    case RegularNormalClass::special_p_expp: return "special-p-expp";
    default: return "none-of-listed";
  }
}

SmallGroupTable::SmallGroupTable(std::vector<std::vector<int>> table)
    : table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("group order out of range");
  for (const auto &row : table_)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("multiplication table must be square");
  // Locate the identity and relabel it to index 0 if needed.
  int e = -1;
  for (int i = 0; i < n && e == -1; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if (table_[i][j] != j || table_[j][i] != j) {
        ok = false;
        break;
      }
    if (ok) e = i;
  }
  if (e == -1) throw std::invalid_argument("table has no identity element");
  if (e != 0) {
    std::vector<int> relabel(n);
    for (int i = 0; i < n; ++i) relabel[i] = i;
    std::swap(relabel[0], relabel[e]);
    std::vector<std::vector<int>> fixed(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        fixed[i][j] = relabel[table_[relabel[i]][relabel[j]]];
    table_ = std::move(fixed);
  }
  validate();
  inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table_[i][j] == 0) inverse_[i] = j;
}

void SmallGroupTable::validate() const {
  const int n = order();
  for (int i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int j = 0; j < n; ++j) {
      int r = table_[i][j], c = table_[j][i];
      if (r < 0 || r >= n || c < 0 || c >= n)
        throw std::invalid_argument("table entry out of range");
      if (row_seen[r]++ || col_seen[c]++)
        throw std::invalid_argument("table is not a Latin square");
    }
  }
  auto check = [&](int a, int b, int c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
      throw std::invalid_argument("table is not associative");
  };
  if (n <= 200) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 1000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
}

SmallGroupTable SmallGroupTable::from_group(const PermGroup &g,
                                            unsigned long long cap) {
  std::vector<Perm> elems = g.elements(cap);
  std::sort(elems.begin(), elems.end());
  const int n = static_cast<int>(elems.size());
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = index.at(elems[i] * elems[j]);
  return SmallGroupTable(std::move(table));
}

SmallGroupTable SmallGroupTable::parse(const std::string &text) {
  std::istringstream in(text);
  std::string keyword;
  int n = 0;
  if (!(in >> keyword >> n) || keyword != "order" || n < 1)
    throw std::invalid_argument("expected header `order n`");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v;
      if (!(in >> v) || v < 1 || v > n)
        throw std::invalid_argument("bad table entry (1-indexed) at row " +
                                    std::to_string(i + 1));
      table[i][j] = v - 1;
    }
  return SmallGroupTable(std::move(table));
}

std::string SmallGroupTable::to_text() const {
  std::ostringstream out;
  out << "order " << order() << "\n";
  for (const auto &row : table_) {
    for (size_t j = 0; j < row.size(); ++j)
      out << (j ? " " : "") << row[j] + 1;
    out << "\n";
  }
  return out.str();
}

long long SmallGroupTable::element_order(int a) const {
  long long k = 1;
  int x = a;
  while (x != 0) {
    x = table_[x][a];
    ++k;
  }
  return k;
}

long long SmallGroupTable::exponent() const {
  long long e = 1;
  for (int i = 0; i < order(); ++i) e = std::lcm(e, element_order(i));
  return e;
}

bool SmallGroupTable::is_abelian() const {
  for (int i = 0; i < order(); ++i)
    for (int j = i + 1; j < order(); ++j)
      if (table_[i][j] != table_[j][i]) return false;
  return true;
}

std::vector<int> SmallGroupTable::closure(std::vector<int> seed) const {
  std::vector<char> in(order(), 0);
  in[0] = 1;
  std::vector<int> members = {0}, work = {0};
  for (int s : seed)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
      work.push_back(s);
    }
  // Close under right multiplication by seed members and by new members.
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j) {
        int p = table_[members[i]][members[j]];
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
          grew = true;
        }
      }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> SmallGroupTable::center() const {
  std::vector<int> z;
  for (int i = 0; i < order(); ++i) {
    bool central = true;
    for (int j = 0; j < order() && central; ++j)
      central = table_[i][j] == table_[j][i];
    if (central) z.push_back(i);
  }
  return z;
}

std::vector<int> SmallGroupTable::derived_subgroup() const {
  std::vector<int> comms;
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b) {
      int c = table_[table_[inverse_[a]][inverse_[b]]][table_[a][b]];
      comms.push_back(c);
    }
  return closure(comms);
}

std::vector<int> SmallGroupTable::conjugacy_class(int x) const {
  std::set<int> cls;
  for (int g = 0; g < order(); ++g)
    cls.insert(table_[table_[inverse_[g]][x]][g]);
  return {cls.begin(), cls.end()};
}

std::vector<int> SmallGroupTable::frattini_p_group() const {
  auto [p, f] = prime_power_decomposition(order());
  if (p == 0)
    throw std::invalid_argument("frattini_p_group requires a p-group");
  std::vector<int> seed = derived_subgroup();
  for (int x = 0; x < order(); ++x) {
    int y = x;
    for (long long i = 1; i < p; ++i) y = table_[y][x];
    seed.push_back(y);
  }
  return closure(seed);
}

std::vector<int> SmallGroupTable::largest_normal_p_subgroup(long long p) const {
  std::vector<int> seed;
  for (int x = 1; x < order(); ++x) {
    auto sub = closure(conjugacy_class(x));
    long long m = static_cast<long long>(sub.size());
    while (m % p == 0) m /= p;
    if (m == 1) seed.push_back(x);
  }
  auto result = closure(seed);
  long long m = static_cast<long long>(result.size());
  while (m % p == 0) m /= p;
  if (m != 1) throw std::logic_error("O_p computation produced a non-p-group");
  return result;
}

namespace {

// Greedy generating sequence: repeatedly adjoin the least element outside
// the current closure.
std::vector<int> generating_sequence(const SmallGroupTable &t) {
  std::vector<int> gens;
  std::vector<int> closed = {0};
  while (static_cast<int>(closed.size()) < t.order()) {
    int next = -1;
    size_t pos = 0;
    for (int x = 0; x < t.order(); ++x) {
      while (pos < closed.size() && closed[pos] < x) ++pos;
      if (pos >= closed.size() || closed[pos] != x) {
        next = x;
        break;
      }
    }
    gens.push_back(next);
    std::vector<int> seed = gens;
    closed = t.closure(seed);
  }
  return gens;
}

// Attempt to extend gens[0..k-1] |-> images[0..k-1] to a partial
// homomorphism on the closure of those generators.  Returns the elementwise
// map (or empty on conflict).  phi is defined by breadth-first products, and
// every edge x -> x*g is checked, which suffices for the homomorphism
// property on the generated subgroup.
std::vector<int> partial_map(const SmallGroupTable &t,
                             const std::vector<int> &gens,
                             const std::vector<int> &images, size_t k) {
  const int n = t.order();
  std::vector<int> phi(n, -1);
  phi[0] = 0;
  std::vector<int> work = {0};
  std::vector<char> in_domain(n, 0);
  in_domain[0] = 1;
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (size_t i = 0; i < k; ++i) {
      int y = t.product(x, gens[i]);
      int py = t.product(phi[x], images[i]);
      if (phi[y] == -1) {
        phi[y] = py;
        if (!in_domain[y]) {
          in_domain[y] = 1;
          work.push_back(y);
        }
      } else if (phi[y] != py) {
        return {};
      }
    }
  }
  // Injectivity on the domain so far.
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x)
    if (phi[x] != -1) {
      if (hit[phi[x]]) return {};
      hit[phi[x]] = 1;
    }
  return phi;
}

void aut_backtrack(const SmallGroupTable &t, const std::vector<int> &gens,
                   std::vector<int> &images, size_t k,
                   std::vector<std::vector<int>> &out) {
  if (k == gens.size()) {
    auto phi = partial_map(t, gens, images, k);
    if (phi.empty()) return;
    for (int x = 0; x < t.order(); ++x)
      if (phi[x] == -1) return; // not surjectively defined (cannot happen)
    out.push_back(phi);
    if (static_cast<int>(out.size()) > SmallGroupTable::kAutCap)
      throw CapacityError("automorphism group exceeds the brute-force cap");
    return;
  }
  long long target_order = t.element_order(gens[k]);
  for (int cand = 0; cand < t.order(); ++cand) {
    if (t.element_order(cand) != target_order) continue;
    images[k] = cand;
    if (partial_map(t, gens, images, k + 1).empty()) continue;
    aut_backtrack(t, gens, images, k + 1, out);
  }
}

} // namespace

std::vector<std::vector<int>> automorphism_group(const SmallGroupTable &t) {
  if (t.order() > SmallGroupTable::kAutCap)
    throw CapacityError("group too large for brute-force Aut");
  if (t.order() == 1) return {{0}};
  std::vector<int> gens = generating_sequence(t);
  std::vector<int> images(gens.size(), -1);
  std::vector<std::vector<int>> out;
  aut_backtrack(t, gens, images, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

RegularNormalClass classify_regular_normal(const SmallGroupTable &t) {
  const long long n = t.order();
  auto [p, f] = prime_power_decomposition(n);
  if (p != 0) {
    // p-group shapes.
    if (t.is_abelian()) {
      if (t.exponent() == p) return RegularNormalClass::elementary_abelian;
      if (t.exponent() == p * p && f % 2 == 0) {
        long long low = 0;
        for (int x = 0; x < n; ++x)
          if (t.element_order(x) <= p) ++low;
        if (low * low == n) return RegularNormalClass::homocyclic_p2;
      }
      return RegularNormalClass::none_of_listed;
    }
    // Special: derived = center = Frattini, elementary abelian.
    auto derived = t.derived_subgroup();
    auto z = t.center();
    auto frat = t.frattini_p_group();
    bool special = derived == z && z == frat;
    if (special)
      for (int x : z)
        if (x != 0 && t.element_order(x) != p) special = false;
    if (special) {
      if (p == 2 && t.exponent() == 4)
        return RegularNormalClass::special_2_exp4;
      if (p != 2 && t.exponent() == p)
        return RegularNormalClass::special_p_expp;
    }
    return RegularNormalClass::none_of_listed;
  }
  // Frobenius {p,q}-group with complement of prime order q: |G| = p^a * q,
  // normal Sylow p-subgroup, and an order-q element acting fixed-point-
  // freely on it.
  auto factors = factorize(n);
  if (factors.size() == 2) {
    for (int which = 0; which < 2; ++which) {
      long long pp = factors[which].first;
      long long qq = factors[1 - which].first;
      if (factors[1 - which].second != 1) continue;
      auto op = t.largest_normal_p_subgroup(pp);
      if (static_cast<long long>(op.size()) * qq != n) continue;
      std::vector<char> in_op(t.order(), 0);
      for (int x : op) in_op[x] = 1;
      for (int r = 1; r < t.order(); ++r) {
        if (t.element_order(r) != qq) continue;
        bool fpf = true;
        int rinv = t.inverse(r);
        for (int x : op) {
          if (x == 0) continue;
          if (t.product(t.product(rinv, x), r) == x) {
            fpf = false;
            break;
          }
        }
        if (fpf) return RegularNormalClass::frobenius_pq;
      }
    }
  }
  return RegularNormalClass::none_of_listed;
}

AutOrbitResult automorphism_orbit_count(const SmallGroupTable &t) {
  auto auts = automorphism_group(t);
  const int n = t.order();
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) rep[i] = i;
  // Union-find over the automorphism action.
  std::function<int(int)> find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  for (const auto &phi : auts)
    for (int x = 0; x < n; ++x) {
      int a = find(x), b = find(phi[x]);
      if (a != b) rep[std::max(a, b)] = std::min(a, b);
    }
  int count = 0;
  for (int x = 0; x < n; ++x)
    if (find(x) == x) ++count;
  AutOrbitResult r;
  r.orbit_count = count;
  r.cls = classify_regular_normal(t);
  r.aut_order = auts.size();
  return r;
}

FrobeniusWitness is_frobenius_with_cyclic_complement(const SmallGroupTable &t,
                                                     long long p) {
  FrobeniusWitness w;
  auto op = t.largest_normal_p_subgroup(p);
  long long oporder = static_cast<long long>(op.size());
  if (oporder == 1) return w;
  // O_p must be elementary abelian.
  for (int x : op) {
    if (x != 0 && t.element_order(x) != p) return w;
    for (int y : op)
      if (t.product(x, y) != t.product(y, x)) return w;
  }
  int a = 0;
  for (long long m = oporder; m > 1; m /= p) ++a;
  long long rsize = t.order() / oporder;
  if (rsize == 1) return w;
  std::vector<char> in_op(t.order(), 0);
  for (int x : op) in_op[x] = 1;
  for (int cand = 1; cand < t.order(); ++cand) {
    if (t.element_order(cand) != rsize) continue;
    // <cand> must meet O_p trivially.
    bool meets = false;
    int y = cand;
    while (y != 0) {
      if (in_op[y]) {
        meets = true;
        break;
      }
      y = t.product(y, cand);
    }
    if (meets) continue;
    // Every non-identity power of cand must act fixed-point-freely on O_p.
    bool fpf = true;
    int r = cand;
    while (r != 0 && fpf) {
      int rinv = t.inverse(r);
      for (int x : op)
        if (x != 0 && t.product(t.product(rinv, x), r) == x) {
          fpf = false;
          break;
        }
      r = t.product(r, cand);
    }
    if (fpf) {
      w.is_frobenius = true;
      w.a = a;
      w.complement_order = rsize;
      return w;
    }
  }
  return w;
}

FrobeniusWitness is_frobenius_with_cyclic_complement(const PermGroup &g,
                                                     long long p) {
  return is_frobenius_with_cyclic_complement(SmallGroupTable::from_group(g), p);
}

} // namespace rank3kit
