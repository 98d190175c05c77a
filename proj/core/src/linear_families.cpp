#include "rank3kit/linear_families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rank3kit/errors.hpp"
#include "rank3kit/stabilizer_chain.hpp"

namespace rank3kit {

namespace {

constexpr long long kMaxPoints = 10000;

using Matrix = std::vector<std::vector<long long>>; // row-major, d x d

Matrix identity_matrix(int d) {
  Matrix m(d, std::vector<long long>(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

/// Decode a nonzero-vector code (1..q^d-1) into coordinates.
std::vector<long long> decode(long long code, int d, long long q) {
  std::vector<long long> v(d);
  for (int i = 0; i < d; ++i) {
    v[i] = code % q;
    code /= q;
  }
  return v;
}

long long encode(const std::vector<long long> &v, long long q) {
  long long code = 0;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    code = code * q + v[i];
  return code;
}

/// Row-vector action v -> phi^j(v * A).
std::vector<long long> apply(const FieldContext &F, const Matrix &a, int j,
                             const std::vector<long long> &v) {
  const int d = static_cast<int>(v.size());
  std::vector<long long> w(d, 0);
  for (int col = 0; col < d; ++col) {
    long long acc = 0;
    for (int row = 0; row < d; ++row)
      acc = F.add(acc, F.mul(v[row], a[row][col]));
    w[col] = acc;
  }
  for (int t = 0; t < j; ++t)
    for (int col = 0; col < d; ++col) w[col] = F.frobenius(w[col]);
  return w;
}

/// The permutation of nonzero vector codes induced by (A, phi^j).
Perm vector_perm(const FieldContext &F, int d, const Matrix &a, int j) {
  const long long q = F.q();
  long long n = checked_pow(q, d, kMaxPoints + 1) - 1;
  std::vector<int> images(n);
  for (long long code = 1; code <= n; ++code) {
    long long out = encode(apply(F, a, j, decode(code, d, q)), q);
    images[code - 1] = static_cast<int>(out - 1);
  }
  return Perm(std::move(images));
}

/// Generators of SL_d(q) as matrices: elementary transvections
/// E_{i,i+1}(lambda^k) and E_{i+1,i}(lambda^k) for k < f.
std::vector<Matrix> sl_matrix_generators(const FieldContext &F, int d) {
  std::vector<Matrix> gens;
  for (int i = 0; i + 1 < d; ++i)
    for (int k = 0; k < F.f(); ++k) {
      long long x = F.pow(F.lambda(), k);
      Matrix a = identity_matrix(d);
      a[i][i + 1] = x;
      gens.push_back(a);
      Matrix b = identity_matrix(d);
      b[i + 1][i] = x;
      gens.push_back(b);
    }
  return gens;
}

Matrix delta_matrix(const FieldContext &F, int d, long long power) {
  Matrix m = identity_matrix(d);
  m[0][0] = F.pow(F.lambda(), power);
  return m;
}

struct SemilinearGen {
  Matrix matrix;
  int phi_exp = 0;
};

std::vector<SemilinearGen> spec_generators(const FamilySpec &spec) {
  std::vector<SemilinearGen> gens;
  for (const Matrix &m : sl_matrix_generators(spec.field, spec.d))
    gens.push_back({m, 0});
  for (auto [i, j] : spec.selector)
    gens.push_back({delta_matrix(spec.field, spec.d, i), j});
  return gens;
}

} // namespace

unsigned long long gl_order(int d, long long q) {
  unsigned __int128 order = 1;
  unsigned __int128 qd = 1;
  for (int i = 0; i < d; ++i) qd *= static_cast<unsigned long long>(q);
  unsigned __int128 qi = 1;
  for (int i = 0; i < d; ++i) {
    order *= qd - qi;
    qi *= static_cast<unsigned long long>(q);
    if (order > (static_cast<unsigned __int128>(1) << 62))
      throw CapacityError("gl_order exceeds 2^62");
  }
  return static_cast<unsigned long long>(order);
}

PermGroup linear_group_on_vectors(LinearKind kind, int d,
                                  const FieldContext &field) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  long long n = checked_pow(field.q(), d, kMaxPoints + 1) - 1;
  std::vector<Perm> gens;
  for (const Matrix &m : sl_matrix_generators(field, d))
    gens.push_back(vector_perm(field, d, m, 0));
  if (kind == LinearKind::GL || kind == LinearKind::GammaL)
    gens.push_back(vector_perm(field, d, delta_matrix(field, d, 1), 0));
  if (kind == LinearKind::SigmaL || kind == LinearKind::GammaL)
    if (field.f() > 1)
      gens.push_back(vector_perm(field, d, identity_matrix(d), 1));
  return PermGroup(static_cast<int>(n), std::move(gens));
}

FamilySpec parse_family_spec(const std::string &text) {
  long long d = 0, q = 0, r = 0;
  std::string gens = "none";
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("family spec item missing '=': " + item);
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "d") d = std::stoll(value);
    else if (key == "q") q = std::stoll(value);
    else if (key == "r") r = std::stoll(value);
    else if (key == "gens") gens = value;
    else throw std::invalid_argument("unknown family spec key: " + key);
  }
  if (d < 2 || q < 2 || r < 2)
    throw std::invalid_argument("family spec requires d >= 2, q >= 2, r >= 2");
  auto [p, f] = prime_power_decomposition(q);
  if (p == 0) throw std::invalid_argument("q must be a prime power");
  FieldContext field(p, f);
  if ((q - 1) % r != 0) throw std::invalid_argument("r must divide q - 1");

  std::vector<std::pair<long long, int>> selector;
  if (gens != "none") {
    std::istringstream gin(gens);
    std::string term;
    while (std::getline(gin, term, '+')) {
      if (term == "full") {
        selector.emplace_back(1, 0);
        if (f > 1) selector.emplace_back(0, 1);
        continue;
      }
      long long i = 0;
      int j = 0;
      std::istringstream tin(term);
      std::string factor;
      while (std::getline(tin, factor, '*')) {
        long long exp = 1;
        std::string base = factor;
        auto caret = factor.find('^');
        if (caret != std::string::npos) {
          base = factor.substr(0, caret);
          exp = std::stoll(factor.substr(caret + 1));
        }
        if (base == "delta") i += exp;
        else if (base == "phi") j += static_cast<int>(exp);
        else throw std::invalid_argument("unknown selector factor: " + base);
      }
      selector.emplace_back(((i % (q - 1)) + (q - 1)) % (q - 1),
                            ((j % f) + f) % f);
    }
  }
  return FamilySpec{static_cast<int>(d), field, r, selector};
}

std::string selector_to_string(const FamilySpec &spec) {
  if (spec.selector.empty()) return "none";
  std::string out;
  for (auto [i, j] : spec.selector) {
    if (!out.empty()) out += "+";
    if (i == 0 && j == 0) out += "delta^0";
    else {
      std::string term;
      if (i == 1) term = "delta";
      else if (i != 0) term = "delta^" + std::to_string(i);
      if (j != 0) {
        if (!term.empty()) term += "*";
        term += j == 1 ? "phi" : "phi^" + std::to_string(j);
      }
      out += term;
    }
  }
  return out;
}

namespace {

/// Canonical representative of the C-orbit of a nonzero vector code.
long long canonical_code(const FamilySpec &spec, long long code) {
  const FieldContext &F = spec.field;
  long long c_order = (F.q() - 1) / spec.r;
  long long scalar = F.pow(F.lambda(), spec.r);
  long long best = code;
  std::vector<long long> v = decode(code, spec.d, F.q());
  for (long long s = 1; s < c_order; ++s) {
    for (auto &x : v) x = F.mul(x, scalar);
    best = std::min(best, encode(v, F.q()));
  }
  return best;
}

struct DeltaIndex {
  std::vector<long long> reps;          // ascending canonical codes
  std::map<long long, int> index_of;    // canonical code -> Delta index
};

DeltaIndex build_delta_index(const FamilySpec &spec) {
  DeltaIndex di;
  long long n = checked_pow(spec.q(), spec.d, 1LL << 40) - 1;
  if (spec.delta_degree() > kMaxPoints)
    throw CapacityError("Delta degree exceeds the 10^4 cap");
  for (long long code = 1; code <= n; ++code)
    if (canonical_code(spec, code) == code) {
      di.index_of[code] = static_cast<int>(di.reps.size());
      di.reps.push_back(code);
    }
  if (static_cast<long long>(di.reps.size()) != spec.delta_degree())
    throw std::logic_error("Delta degree mismatch");
  return di;
}

Perm delta_perm(const FamilySpec &spec, const DeltaIndex &di, const Matrix &a,
                int j) {
  const FieldContext &F = spec.field;
  std::vector<int> images(di.reps.size());
  for (size_t k = 0; k < di.reps.size(); ++k) {
    auto v = decode(di.reps[k], spec.d, F.q());
    long long out = canonical_code(spec, encode(apply(F, a, j, v), F.q()));
    images[k] = di.index_of.at(out);
  }
  return Perm(std::move(images));
}

} // namespace

std::vector<long long> delta_representatives(const FamilySpec &spec) {
  return build_delta_index(spec).reps;
}

PermGroup delta_action(const FamilySpec &spec) {
  DeltaIndex di = build_delta_index(spec);
  std::vector<Perm> gens;
  for (const SemilinearGen &g : spec_generators(spec))
    gens.push_back(delta_perm(spec, di, g.matrix, g.phi_exp));
  // The central subgroup C must act trivially: check its scalar generator.
  Matrix scalar = identity_matrix(spec.d);
  for (int i = 0; i < spec.d; ++i)
    scalar[i][i] = spec.field.pow(spec.field.lambda(), spec.r);
  if (!delta_perm(spec, di, scalar, 0).is_identity())
    throw std::logic_error("central subgroup C does not act trivially");
  return PermGroup(static_cast<int>(di.reps.size()), std::move(gens));
}

unsigned long long delta_gl_intersection_order(const FamilySpec &spec) {
  DeltaIndex di = build_delta_index(spec);
  const int n = static_cast<int>(di.reps.size());
  const int f = spec.field.f();
  // Extend each generator by its Frobenius exponent acting on f extra
  // points as addition mod f; the stabilizer of extra point n is G∩GLbar.
  std::vector<Perm> ext;
  for (const SemilinearGen &g : spec_generators(spec)) {
    Perm base = delta_perm(spec, di, g.matrix, g.phi_exp);
    std::vector<int> images(n + f);
    for (int x = 0; x < n; ++x) images[x] = base(x);
    for (int t = 0; t < f; ++t) images[n + t] = n + (t + g.phi_exp) % f;
    ext.emplace_back(std::move(images));
  }
  StabilizerChain chain(n + f, ext, {n});
  StabilizerChain inner(n, [&] {
    std::vector<Perm> gens;
    for (const Perm &s : chain.level_generators(1)) {
      std::vector<int> images(n);
      for (int x = 0; x < n; ++x) images[x] = s(x);
      gens.emplace_back(std::move(images));
    }
    return gens;
  }());
  return inner.order();
}

bool inside_sigma_l_bar(const FamilySpec &spec) {
  DeltaIndex di = build_delta_index(spec);
  FamilySpec sigma = spec;
  sigma.selector.clear();
  if (spec.field.f() > 1) sigma.selector.emplace_back(0, 1);
  PermGroup sigma_group = delta_action(sigma);
  for (const SemilinearGen &g : spec_generators(spec))
    if (!sigma_group.contains(delta_perm(spec, di, g.matrix, g.phi_exp)))
      return false;
  return true;
}

std::vector<std::vector<int>> expected_suborbits(const FamilySpec &spec,
                                                 SuborbitLemma which) {
  const FieldContext &F = spec.field;
  const long long q = F.q();
  const int d = spec.d;
  std::vector<std::vector<int>> parts;

  auto vec_index = [&](const std::vector<long long> &v) {
    return static_cast<int>(encode(v, q) - 1);
  };

  if (which == SuborbitLemma::gl_on_vectors ||
      which == SuborbitLemma::sl_on_vectors) {
    long long n = checked_pow(q, d, kMaxPoints + 1) - 1;
    // Singletons {lambda^k e_1}, k = 1..q-1.
    std::vector<char> in_line(n, 0);
    for (long long k = 1; k <= q - 1; ++k) {
      std::vector<long long> v(d, 0);
      v[0] = F.pow(F.lambda(), k);
      in_line[vec_index(v)] = 1;
      parts.push_back({vec_index(v)});
    }
    if (which == SuborbitLemma::gl_on_vectors || d > 2) {
      std::vector<int> rest;
      for (long long code = 1; code <= n; ++code)
        if (!in_line[code - 1]) rest.push_back(static_cast<int>(code - 1));
      parts.push_back(rest);
    } else {
      // d = 2: affine cosets lambda^k w + <v>, w = e_2.
      for (long long k = 1; k <= q - 1; ++k) {
        std::vector<int> coset;
        for (long long mu = 0; mu < q; ++mu) {
          std::vector<long long> v = {mu, F.pow(F.lambda(), k)};
          coset.push_back(vec_index(v));
        }
        std::sort(coset.begin(), coset.end());
        parts.push_back(coset);
      }
    }
  } else {
    DeltaIndex di = build_delta_index(spec);
    auto delta_of = [&](const std::vector<long long> &v) {
      return di.index_of.at(canonical_code(spec, encode(v, q)));
    };
    if (which == SuborbitLemma::glbar_on_delta) {
      std::vector<char> used(di.reps.size(), 0);
      for (long long k = 1; k <= spec.r; ++k) {
        std::vector<long long> v(d, 0);
        v[0] = F.pow(F.lambda(), k);
        int idx = delta_of(v);
        used[idx] = 1;
        parts.push_back({idx});
      }
      std::vector<int> rest;
      // Remaining points: all Delta points not on the line <e_1>.
      for (size_t i = 0; i < di.reps.size(); ++i)
        if (!used[i]) rest.push_back(static_cast<int>(i));
      parts.push_back(rest);
    } else { // slbar_on_delta_d2
      if (d != 2 || spec.r != 2 || F.p() == 2)
        throw std::invalid_argument(
            "slbar suborbits require d = 2, r = 2, odd p");
      std::vector<long long> v1(d, 0);
      v1[0] = F.lambda();
      std::vector<long long> v2(d, 0);
      v2[0] = F.pow(F.lambda(), 2);
      parts.push_back({delta_of(v1)});
      parts.push_back({delta_of(v2)});
      std::vector<char> odd_set(di.reps.size(), 0), even_set(di.reps.size(), 0);
      for (long long k = 1; k <= q - 1; ++k)
        for (long long mu = 0; mu < q; ++mu) {
          std::vector<long long> v = {mu, F.pow(F.lambda(), k)};
          int idx = delta_of(v);
          (k % 2 ? odd_set : even_set)[idx] = 1;
        }
      std::vector<int> odd, even;
      for (size_t i = 0; i < di.reps.size(); ++i) {
        if (odd_set[i] && even_set[i])
          throw std::logic_error("parity classes overlap on Delta");
        if (odd_set[i]) odd.push_back(static_cast<int>(i));
        if (even_set[i]) even.push_back(static_cast<int>(i));
      }
      parts.push_back(odd);
      parts.push_back(even);
    }
  }
  for (auto &part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end(), [](const auto &a, const auto &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return parts;
}

FamilyPredicateResult rank3_family_predicate(const FamilySpec &spec) {
  FamilyPredicateResult res;
  const long long p = spec.field.p();
  const int f = spec.field.f();
  const long long q = spec.q();
  const long long r = spec.r;

  bool ppd = is_prime(r) && is_primitive_prime_divisor(r, p, static_cast<int>(r) - 1);
  res.reasons.push_back(std::string("r primitive prime divisor of p^(r-1)-1: ") +
                        (ppd ? "yes" : "no"));

  // Is the spec the full GammaLbar?  Decided by group order.
  PermGroup g = delta_action(spec);
  unsigned long long full_order =
      static_cast<unsigned long long>(f) * gl_order(spec.d, q) /
      static_cast<unsigned long long>((q - 1) / r);
  bool is_full = g.order() == full_order;

  if (is_full) {
    res.covered = true;
    res.rank3 = ppd;
    res.reasons.push_back("full GammaLbar: verdict from the ppd test");
  } else if (spec.d >= 3) {
    res.covered = true;
    unsigned long long gl_part = delta_gl_intersection_order(spec);
    long long index = static_cast<long long>(
        static_cast<unsigned long long>(f) * gl_part / g.order());
    bool coprime = std::gcd<long long>(r - 1, index) == 1;
    res.reasons.push_back("gcd(r-1, f|G∩GLbar|/|G|) = gcd(" +
                          std::to_string(r - 1) + ", " + std::to_string(index) +
                          ") " + (coprime ? "= 1" : "> 1"));
    res.rank3 = ppd && coprime;
  } else if (spec.d == 2 && r == 2 && p != 2) {
    bool inside = inside_sigma_l_bar(spec);
    res.reasons.push_back(std::string("G inside SigmaLbar: ") +
                          (inside ? "yes" : "no"));
    if (inside) {
      res.covered = true;
      res.rank3 = false;
    } else {
      // The rank-3 direction of the (2,2) criterion is established from an
      // element delta*phi^j of G, which fuses the two large SLbar-point-
      // stabilizer orbits.  Intermediate groups outside SigmaLbar that
      // contain no such element (e.g. <SLbar, delta^2>, where delta^2
      // preserves each orbit) are not treated by the criterion and indeed
      // can have rank 4, so they are reported uncovered.
      DeltaIndex di = build_delta_index(spec);
      Matrix dm = identity_matrix(spec.d);
      dm[0][0] = spec.field.lambda();
      bool has_delta_phi = false;
      for (int j = 0; j < f; ++j)
        if (g.contains(delta_perm(spec, di, dm, j))) {
          has_delta_phi = true;
          break;
        }
      res.reasons.push_back(std::string("contains delta*phi^j: ") +
                            (has_delta_phi ? "yes" : "no"));
      if (has_delta_phi) {
        res.covered = true;
        res.rank3 = true;
      } else {
        res.covered = false;
        res.reasons.push_back(
            "outside SigmaLbar without any delta*phi^j: shape not covered");
      }
    }
  } else {
    res.covered = false;
    res.reasons.push_back("parameter shape outside the covered propositions");
  }

  long long gcd_dq = std::gcd<long long>(spec.d, q - 1);
  res.semiprimitive_not_innately =
      (gcd_dq % r == 0) && (((q - 1) / gcd_dq) % r != 0);
  return res;
}

} // namespace rank3kit
