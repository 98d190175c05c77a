#pragma once

#include <vector>

#include "rank3kit/number_theory.hpp"

namespace rank3kit {

/// Arithmetic context for GF(p^f), q = p^f <= 2^20.
///
/// Field elements are encoded as integers 0..q-1: the element with
/// polynomial coordinates (c_0, ..., c_{f-1}) over GF(p) (c_0 the constant
/// term) is encoded as sum c_i p^i.  The modulus is the lexicographically
/// least monic irreducible polynomial of degree f (coefficients compared
/// from the constant term upward in the integer encoding), and lambda is
/// the least primitive element in the same encoding.
class FieldContext {
public:
  FieldContext(long long p, int f);

  long long p() const { return p_; }
  int f() const { return f_; }
  long long q() const { return q_; }
  long long lambda() const { return lambda_; }

  /// Modulus polynomial encoded like an element plus the leading monic
  /// term (i.e. an integer in [q, p*q)).
  long long modulus() const { return modulus_; }

  long long add(long long a, long long b) const;
  long long neg(long long a) const;
  long long sub(long long a, long long b) const { return add(a, neg(b)); }
  long long mul(long long a, long long b) const;
  long long inv(long long a) const;
  long long pow(long long a, long long k) const;

  /// Frobenius x -> x^p.
  long long frobenius(long long a) const { return pow(a, p_); }

  /// Multiplicative order of a nonzero element.
  long long element_order(long long a) const;

  /// Elements in the canonical integer order 0..q-1.
  std::vector<long long> elements() const;

private:
  std::vector<long long> to_poly(long long a) const;
  long long from_poly(const std::vector<long long> &c) const;

  long long p_;
  int f_;
  long long q_;
  long long modulus_;
  long long lambda_;
};

} // namespace rank3kit
