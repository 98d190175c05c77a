#include "rank3kit/examples.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rank3kit/errors.hpp"
#include "rank3kit/gf.hpp"
#include "rank3kit/number_theory.hpp"
#include "rank3kit/small_group.hpp"

namespace rank3kit {

namespace {

// Row-vector action over F_2 on bitmask-encoded vectors (bit i = coord i).
Perm f2_matrix_perm(const std::vector<std::vector<int>> &a) {
  const int d = static_cast<int>(a.size());
  const int n = 1 << d;
  std::vector<int> images(n);
  for (int v = 0; v < n; ++v) {
    int w = 0;
    for (int col = 0; col < d; ++col) {
      int bit = 0;
      for (int row = 0; row < d; ++row) bit ^= ((v >> row) & 1) & a[row][col];
      w |= bit << col;
    }
    images[v] = w;
  }
  return Perm(std::move(images));
}

Perm f2_translation_perm(int d, int t) {
  const int n = 1 << d;
  std::vector<int> images(n);
  for (int v = 0; v < n; ++v) images[v] = v ^ t;
  return Perm(std::move(images));
}

} // namespace

PermGroup build_example_6_1(int which) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("example 6.1 has parts 1 and 2 only");
  // H_1 and H_2 inside GL_4(2); the shared first generator is a pair of
  // 2x2 Jordan blocks, the second differs: H_1 fixes a hyperplane, H_2
  // fixes a 1-dimensional subspace (of the row-vector action).
  std::vector<std::vector<int>> a = {
      {1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  std::vector<std::vector<int>> b1 = {
      {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  std::vector<std::vector<int>> b2 = {
      {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  std::vector<Perm> gens = {f2_matrix_perm(a),
                            f2_matrix_perm(which == 1 ? b1 : b2)};
  for (int i = 0; i < 4; ++i) gens.push_back(f2_translation_perm(4, 1 << i));
  return PermGroup(16, std::move(gens));
}

Example62 build_example_6_2(long long q) {
  auto [p, f] = prime_power_decomposition(q);
  if (p == 0 || q > 8)
    throw std::invalid_argument("example 6.2 requires a prime power q <= 8");
  FieldContext F(p, 2 * f); // the field F_{q^2}
  const long long q2 = F.q();

  auto in_n = [&](long long alpha, long long beta) {
    long long lhs = F.add(beta, F.pow(beta, q));
    long long rhs = alpha == 0 ? 0 : F.neg(F.pow(alpha, q + 1));
    return lhs == rhs;
  };

  // Enumerate N and index its elements.
  std::vector<std::pair<long long, long long>> elems;
  for (long long alpha = 0; alpha < q2; ++alpha)
    for (long long beta = 0; beta < q2; ++beta)
      if (in_n(alpha, beta)) elems.emplace_back(alpha, beta);
  if (static_cast<long long>(elems.size()) != q * q * q)
    throw std::logic_error("example 6.2: |N| != q^3");
  std::map<std::pair<long long, long long>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());

  auto n_product = [&](std::pair<long long, long long> x,
                       std::pair<long long, long long> y) {
    long long alpha = F.add(x.first, y.first);
    long long cross = x.first == 0 || y.first == 0
                          ? 0
                          : F.mul(x.first, F.pow(y.first, q));
    long long beta = F.sub(F.add(x.second, y.second), cross);
    return std::pair<long long, long long>{alpha, beta};
  };

  auto right_mul_perm = [&](std::pair<long long, long long> g) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = index.at(n_product(elems[i], g));
    return Perm(std::move(images));
  };

  // Generators of N: one element per F_p-basis element of the
  // alpha-coordinate (N is special, so these generate modulo and
  // including the center).
  std::vector<Perm> gens;
  for (int k = 0; k < 2 * f; ++k) {
    long long alpha = checked_pow(p, k, q2); // p^k encodes the basis element
    long long beta = -1;
    for (long long b = 0; b < q2 && beta < 0; ++b)
      if (in_n(alpha, b)) beta = b;
    if (beta < 0) throw std::logic_error("example 6.2: no beta for alpha");
    gens.push_back(right_mul_perm({alpha, beta}));
  }
  PermGroup n_group(n, gens);
  if (n_group.order() != static_cast<unsigned long long>(q) * q * q)
    throw std::logic_error("example 6.2: N generators do not generate N");

  // Torus action (alpha, beta) -> (a*alpha, a^{q+1}*beta).
  long long a = F.lambda();
  std::vector<int> torus(n);
  for (int i = 0; i < n; ++i)
    torus[i] = index.at({F.mul(a, elems[i].first),
                         F.mul(F.pow(a, q + 1), elems[i].second)});
  gens.emplace_back(std::move(torus));

  return Example62{PermGroup(n, std::move(gens)), std::move(n_group), q};
}

namespace {

// Extraspecial p^{1+2m}, exponent p: tuples (a_1..a_m, b_1..b_m, c) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+sum a_i b'_i).
struct Extraspecial {
  long long p;
  int m;
  int size;

  int dim() const { return 2 * m + 1; }

  std::vector<long long> decode(int code) const {
    std::vector<long long> t(dim());
    for (int i = 0; i < dim(); ++i) {
      t[i] = code % p;
      code /= static_cast<int>(p);
    }
    return t;
  }

  int encode(const std::vector<long long> &t) const {
    long long code = 0;
    for (int i = dim() - 1; i >= 0; --i) code = code * p + t[i];
    return static_cast<int>(code);
  }

  std::vector<long long> product(const std::vector<long long> &x,
                                 const std::vector<long long> &y) const {
    std::vector<long long> z(dim());
    for (int i = 0; i < dim(); ++i) z[i] = (x[i] + y[i]) % p;
    long long twist = 0;
    for (int i = 0; i < m; ++i) twist += x[i] * y[m + i];
    z[2 * m] = (z[2 * m] + twist) % p;
    return z;
  }

  Perm right_mul(const std::vector<long long> &g) const {
    std::vector<int> images(size);
    for (int x = 0; x < size; ++x) images[x] = encode(product(decode(x), g));
    return Perm(std::move(images));
  }
};

} // namespace

Example63 build_example_6_3(long long p, int m) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be odd prime");
  if (m < 1) throw std::invalid_argument("m must be positive");
  long long size = checked_pow(p, 1 + 2 * m, 729);
  Extraspecial E{p, m, static_cast<int>(size)};

  std::vector<Perm> n_gens;
  for (int i = 0; i < E.dim(); ++i) {
    std::vector<long long> unit(E.dim(), 0);
    unit[i] = 1;
    n_gens.push_back(E.right_mul(unit));
  }
  PermGroup n_group(E.size, n_gens);

  // Automorphisms via the brute-force table search.  The table is built
  // from the sorted right-regular permutations; element i of the table
  // corresponds to the point elems[i](identity-point).
  SmallGroupTable table = SmallGroupTable::from_group(n_group);
  std::vector<Perm> sorted_elems = n_group.elements();
  std::sort(sorted_elems.begin(), sorted_elems.end());
  const int id_point = 0; // the identity tuple encodes to 0
  std::vector<int> point_of(E.size), index_of_point(E.size);
  for (int i = 0; i < E.size; ++i) {
    point_of[i] = sorted_elems[i](id_point);
    index_of_point[point_of[i]] = i;
  }

  std::vector<Perm> gens = n_gens;
  for (const auto &phi : automorphism_group(table)) {
    std::vector<int> images(E.size);
    for (int i = 0; i < E.size; ++i) images[point_of[i]] = point_of[phi[i]];
    Perm perm{std::move(images)};
    if (!perm.is_identity()) gens.push_back(std::move(perm));
  }
  return Example63{PermGroup(E.size, std::move(gens)), std::move(n_group)};
}

PermGroup build_sum_zero_example(int dV, long long pV, int n) {
  if (n < 3) throw std::invalid_argument("sum-zero example requires n >= 3");
  FieldContext F(pV, 1);
  long long vsize = checked_pow(pV, dV, 1000);
  long long degree = vsize * n;
  if (degree > 1000) throw CapacityError("sum-zero degree exceeds 10^3");
  const int N = static_cast<int>(degree);

  auto decode_v = [&](int code) {
    std::vector<long long> v(dV);
    for (int i = 0; i < dV; ++i) {
      v[i] = code % pV;
      code /= static_cast<int>(pV);
    }
    return v;
  };
  auto encode_v = [&](const std::vector<long long> &v) {
    long long code = 0;
    for (int i = dV - 1; i >= 0; --i) code = code * pV + v[i];
    return static_cast<int>(code);
  };

  std::vector<Perm> gens;

  // W: sum-zero translations (e_k in copy 0, -e_k in copy i).
  for (int k = 0; k < dV; ++k)
    for (int copy = 1; copy < n; ++copy) {
      std::vector<int> images(N);
      for (int c = 0; c < n; ++c)
        for (int code = 0; code < vsize; ++code) {
          auto v = decode_v(code);
          if (c == 0) v[k] = (v[k] + 1) % pV;
          if (c == copy) v[k] = (v[k] + pV - 1) % pV;
          images[c * vsize + code] = c * static_cast<int>(vsize) + encode_v(v);
        }
      gens.emplace_back(std::move(images));
    }

  // D: diagonal GL(V) acting identically on every copy; generators are
  // the elementary transvections plus the diagonal delta.
  std::vector<std::vector<std::vector<long long>>> mats;
  auto ident = [&] {
    std::vector<std::vector<long long>> m(dV, std::vector<long long>(dV, 0));
    for (int i = 0; i < dV; ++i) m[i][i] = 1;
    return m;
  };
  for (int i = 0; i + 1 < dV; ++i) {
    auto m1 = ident();
    m1[i][i + 1] = 1;
    mats.push_back(m1);
    auto m2 = ident();
    m2[i + 1][i] = 1;
    mats.push_back(m2);
  }
  if (pV > 2) {
    auto m = ident();
    m[0][0] = F.lambda();
    mats.push_back(m);
  }
  for (const auto &mat : mats) {
    std::vector<int> images(N);
    for (int c = 0; c < n; ++c)
      for (int code = 0; code < vsize; ++code) {
        auto v = decode_v(code);
        std::vector<long long> w(dV, 0);
        for (int col = 0; col < dV; ++col)
          for (int row = 0; row < dV; ++row)
            w[col] = F.add(w[col], F.mul(v[row], mat[row][col]));
        images[c * vsize + code] = c * static_cast<int>(vsize) + encode_v(w);
      }
    gens.emplace_back(std::move(images));
  }

  // X: symmetric group on the copies.
  auto copy_perm = [&](const std::vector<int> &sigma) {
    std::vector<int> images(N);
    for (int c = 0; c < n; ++c)
      for (int code = 0; code < vsize; ++code)
        images[c * vsize + code] = sigma[c] * static_cast<int>(vsize) + code;
    return Perm(std::move(images));
  };
  std::vector<int> cyc(n), tr(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n, tr[i] = i;
  tr[0] = 1;
  tr[1] = 0;
  gens.push_back(copy_perm(cyc));
  gens.push_back(copy_perm(tr));

  return PermGroup(N, std::move(gens));
}

} // namespace rank3kit
