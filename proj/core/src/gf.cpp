#include "rank3kit/gf.hpp"

#include <stdexcept>

#include "rank3kit/errors.hpp"

namespace rank3kit {

namespace {

using Poly = std::vector<long long>; // coefficients, constant term first

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly &a, const Poly &b, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Remainder of a modulo monic m.
Poly poly_mod(Poly a, const Poly &m, long long p) {
  trim(a);
  while (a.size() >= m.size()) {
    long long coef = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[shift + i] = ((a[shift + i] - coef * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly &m, long long p) {
  const int deg = static_cast<int>(m.size()) - 1;
  if (deg < 1) return false;
  // Trial division by all monic polynomials of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly div(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = c % p;
        c /= p;
      }
      div[d] = 1;
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

} // namespace

std::vector<long long> FieldContext::to_poly(long long a) const {
  std::vector<long long> c(f_, 0);
  for (int i = 0; i < f_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

long long FieldContext::from_poly(const std::vector<long long> &c) const {
  long long a = 0;
  for (int i = f_ - 1; i >= 0; --i)
    a = a * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
  return a;
}

FieldContext::FieldContext(long long p, int f) : p_(p), f_(f) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (f < 1) throw std::invalid_argument("f must be positive");
  q_ = checked_pow(p, f, 1LL << 20);

  // Least monic irreducible polynomial of degree f, ordered by the integer
  // encoding of the low coefficients.
  modulus_ = -1;
  for (long long code = 0; code < q_; ++code) {
    Poly m(f_ + 1, 0);
    long long c = code;
    for (int i = 0; i < f_; ++i) {
      m[i] = c % p_;
      c /= p_;
    }
    m[f_] = 1;
    if (f_ == 1 || is_irreducible(m, p_)) {
      modulus_ = q_ + code;
      break;
    }
  }
  if (modulus_ < 0) throw std::logic_error("no irreducible modulus found");

  // Least primitive element.
  lambda_ = -1;
  for (long long a = 1; a < q_; ++a)
    if (element_order(a) == q_ - 1) {
      lambda_ = a;
      break;
    }
  if (lambda_ < 0) throw std::logic_error("no primitive element found");
}

long long FieldContext::add(long long a, long long b) const {
  auto ca = to_poly(a), cb = to_poly(b);
  for (int i = 0; i < f_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return from_poly(ca);
}

long long FieldContext::neg(long long a) const {
  auto c = to_poly(a);
  for (int i = 0; i < f_; ++i) c[i] = (p_ - c[i]) % p_;
  return from_poly(c);
}

long long FieldContext::mul(long long a, long long b) const {
  Poly ca = to_poly(a), cb = to_poly(b);
  trim(ca);
  trim(cb);
  Poly m(f_ + 1, 0);
  long long code = modulus_ - q_;
  for (int i = 0; i < f_; ++i) {
    m[i] = code % p_;
    code /= p_;
  }
  m[f_] = 1;
  Poly prod = poly_mod(poly_mul(ca, cb, p_), m, p_);
  return from_poly(prod);
}

long long FieldContext::pow(long long a, long long k) const {
  if (a == 0) {
    if (k <= 0) throw std::invalid_argument("0^k undefined for k <= 0");
    return 0;
  }
  k %= (q_ - 1);
  if (k < 0) k += q_ - 1;
  long long result = 1, base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

long long FieldContext::inv(long long a) const {
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  return pow(a, q_ - 2);
}

long long FieldContext::element_order(long long a) const {
  if (a == 0) throw std::invalid_argument("zero has no multiplicative order");
  long long ord = q_ - 1;
  for (const auto &[prime, mult] : factorize(q_ - 1))
    for (int i = 0; i < mult && pow(a, ord / prime) == 1; ++i) ord /= prime;
  return ord;
}

std::vector<long long> FieldContext::elements() const {
  std::vector<long long> out(q_);
  for (long long i = 0; i < q_; ++i) out[i] = i;
  return out;
}

} // namespace rank3kit
