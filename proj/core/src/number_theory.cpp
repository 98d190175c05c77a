#include "rank3kit/number_theory.hpp"

#include <stdexcept>

#include "rank3kit/errors.hpp"

namespace rank3kit {

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  std::vector<std::pair<long long, int>> out;
  for (long long d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) n /= d, ++e;
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long checked_pow(long long base, int exp, long long cap) {
  if (base < 0 || exp < 0 || cap < 1)
    throw std::invalid_argument("checked_pow requires nonnegative arguments");
  long long result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base)
      throw CapacityError("exponentiation exceeds the configured cap");
    result *= base;
    if (result > cap)
      throw CapacityError("exponentiation exceeds the configured cap");
  }
  return result;
}

long long pow_mod(long long base, long long exp, long long m) {
  if (m <= 0) throw std::invalid_argument("pow_mod requires m > 0");
  if (exp < 0) throw std::invalid_argument("pow_mod requires exp >= 0");
  unsigned __int128 result = 1, b = static_cast<unsigned __int128>(((base % m) + m) % m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<long long>(result);
}

bool is_primitive_prime_divisor(long long r, long long p, int f) {
  if (!is_prime(r)) throw std::invalid_argument("r must be prime");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (f < 1) throw std::invalid_argument("f must be positive");
  if (pow_mod(p, f, r) != 1 % r) return false;
  for (int m = 1; m < f; ++m)
    if (pow_mod(p, m, r) == 1 % r) return false;
  return true;
}

std::vector<long long> primitive_prime_divisors(long long p, int f) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (f < 1) throw std::invalid_argument("f must be positive");
  long long q = checked_pow(p, f);
  std::vector<long long> out;
  for (const auto &[prime, mult] : factorize(q - 1))
    if (is_primitive_prime_divisor(prime, p, f)) out.push_back(prime);
  return out;
}

bool phi_orbit_congruence(long long l, long long k, int t, long long p, int f,
                          long long r) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  long long q = checked_pow(p, f);
  if ((q - 1) % r != 0)
    throw std::invalid_argument("r must divide q - 1");
  if (t < 0 || t >= f) throw std::invalid_argument("t must satisfy 0 <= t < f");
  long long lhs = ((k % r) + r) % r;
  long long rhs = (((l % r) + r) % r) * pow_mod(p, t, r) % r;
  return lhs == rhs;
}

long long p_part(long long n, long long p) {
  if (n < 1 || p < 2) throw std::invalid_argument("p_part requires n >= 1, p >= 2");
  long long part = 1;
  while (n % p == 0) n /= p, part *= p;
  return part;
}

std::pair<long long, int> prime_power_decomposition(long long n) {
  if (n < 2) return {0, 0};
  auto factors = factorize(n);
  if (factors.size() != 1) return {0, 0};
  return {factors[0].first, factors[0].second};
}

} // namespace rank3kit
