#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rank3kit {

/// Cap on prime powers q = p^f accepted by the arithmetic predicates.
inline constexpr long long kMaxPrimePower = 1LL << 40;

/// Deterministic trial-division primality test.
bool is_prime(long long n);

/// Prime factorization (p, multiplicity) pairs in increasing p.
std::vector<std::pair<long long, int>> factorize(long long n);

/// base^exp, throwing CapacityError if the result would exceed cap.
long long checked_pow(long long base, int exp, long long cap = kMaxPrimePower);

/// base^exp mod m (m > 0), overflow-safe.
long long pow_mod(long long base, long long exp, long long m);

/// True iff r is a primitive prime divisor of p^f - 1: r | p^f - 1 but
/// r does not divide p^m - 1 for any 1 <= m < f.  Computed modularly, so
/// p^f itself never needs to fit in 64 bits.  Throws std::invalid_argument
/// unless r and p are prime and f >= 1.
bool is_primitive_prime_divisor(long long r, long long p, int f);

/// All primitive prime divisors of p^f - 1 (possibly empty, per Zsigmondy's
/// exceptions).  Requires p^f <= 2^40 (CapacityError beyond).
std::vector<long long> primitive_prime_divisors(long long p, int f);

/// Lemma-4.4 congruence: with q = p^f and r | q - 1, decides whether some
/// integer s satisfies k == l * p^t + s * r (mod q - 1), equivalently
/// k == l * p^t (mod r).  Throws std::invalid_argument if r does not
/// divide q - 1.
bool phi_orbit_congruence(long long l, long long k, int t, long long p, int f,
                          long long r);

/// Largest power of p dividing n (the p-part of n).
long long p_part(long long n, long long p);

/// If n = p^f for a prime p, returns {p, f}; otherwise {0, 0}.
std::pair<long long, int> prime_power_decomposition(long long n);

} // namespace rank3kit
