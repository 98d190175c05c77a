#pragma once

#include "rank3kit/perm_group.hpp"

namespace rank3kit {

/// Affine groups F_2^4 : H_i on the 16 vectors of F_2^4, H_1 and H_2 two
/// specific copies of GL_3(2) inside GL_4(2): H_1 fixes a hyperplane, H_2
/// fixes a 1-dimensional subspace.  which is 1 or 2.
PermGroup build_example_6_1(int which);

struct Example62 {
  PermGroup group;       // N : <torus> acting on N, degree q^3
  PermGroup n_subgroup;  // the regular normal subgroup N (order q^3)
  long long q = 0;
};

/// The point stabilizer of PGU_3(q) acting on the remaining q^3 points,
/// modeled on N = {(alpha, beta) in F_{q^2}^2 : beta + beta^q =
/// -alpha^{q+1}} with product (alpha,beta)(alpha',beta') =
/// (alpha+alpha', beta+beta'-alpha*alpha'^q) and torus action
/// (alpha,beta) -> (a*alpha, a^{q+1}*beta) for a of order q^2-1.
Example62 build_example_6_2(long long q);

struct Example63 {
  PermGroup group;       // Hol(N) acting on N, degree p^{1+2m}
  PermGroup n_subgroup;  // the regular normal extraspecial N
};

/// Holomorph of the extraspecial group of order p^{1+2m} and exponent p
/// (p odd), with Aut(N) found by brute force.
Example63 build_example_6_3(long long p, int m = 1);

/// The class-(C) witness G = (W:D):X < Y wr X acting on V x {1..n}:
/// V = F_{pV}^{dV}, W the sum-zero subgroup of V^n, D the diagonal GL(V),
/// X the symmetric group permuting the n copies.
PermGroup build_sum_zero_example(int dV, long long pV, int n);

} // namespace rank3kit
