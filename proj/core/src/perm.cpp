#include "rank3kit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rank3kit {

namespace {

void check_bijection(const std::vector<int> &images) {
  const int n = static_cast<int>(images.size());
  if (n == 0)
    throw std::invalid_argument("permutation degree must be positive");
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("permutation image out of range");
    if (seen[v])
      throw std::invalid_argument("permutation images contain a repeated point");
    seen[v] = 1;
  }
}

} // namespace

Perm::Perm(int degree) : images_(degree) {
  if (degree <= 0)
    throw std::invalid_argument("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  check_bijection(images_);
}

Perm Perm::from_cycles(int degree,
                       const std::vector<std::vector<int>> &cycles) {
  Perm p(degree);
  for (const auto &cycle : cycles) {
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("cycle point out of range");
      p.images_[from] = to;
    }
  }
  check_bijection(p.images_);
  return p;
}

Perm Perm::from_cycles(int degree,
                       std::initializer_list<std::vector<int>> cycles) {
  return from_cycles(degree, std::vector<std::vector<int>>(cycles));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

Perm Perm::operator*(const Perm &other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("degree mismatch in permutation composition");
  std::vector<int> result(images_.size());
  for (int x = 0; x < degree(); ++x)
    result[x] = other.images_[images_[x]];
  return Perm(std::move(result), unchecked_t{});
}

Perm Perm::inverse() const {
  std::vector<int> result(images_.size());
  for (int x = 0; x < degree(); ++x)
    result[images_[x]] = x;
  return Perm(std::move(result), unchecked_t{});
}

Perm Perm::pow(long long k) const {
  const long long n = order();
  k %= n;
  if (k < 0)
    k += n;
  Perm result(degree());
  Perm base = *this;
  while (k > 0) {
    if (k & 1)
      result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Perm Perm::conjugated_by(const Perm &g) const {
  if (degree() != g.degree())
    throw std::invalid_argument("degree mismatch in conjugation");
  std::vector<int> result(images_.size());
  for (int x = 0; x < degree(); ++x)
    result[g.images_[x]] = g.images_[images_[x]];
  return Perm(std::move(result), unchecked_t{});
}

long long Perm::order() const {
  long long result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x])
      continue;
    long long len = 0;
    int y = x;
    while (!seen[y]) {
      seen[y] = 1;
      y = images_[y];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<int> Perm::fixed_points() const {
  std::vector<int> result;
  for (int x = 0; x < degree(); ++x)
    if (images_[x] == x)
      result.push_back(x);
  return result;
}

int Perm::count_fixed_points() const {
  int count = 0;
  for (int x = 0; x < degree(); ++x)
    if (images_[x] == x)
      ++count;
  return count;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(images_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x)
      continue;
    std::vector<int> cycle;
    int y = x;
    while (!seen[y]) {
      seen[y] = 1;
      cycle.push_back(y);
      y = images_[y];
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

size_t Perm::hash() const {
  // FNV-1a over the image sequence.
  size_t h = 1469598103934665603ull;
  for (int v : images_) {
    h ^= static_cast<size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace rank3kit
