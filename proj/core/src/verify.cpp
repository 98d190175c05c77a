#include "rank3kit/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "rank3kit/analyzer.hpp"
#include "rank3kit/block_system.hpp"
#include "rank3kit/errors.hpp"
#include "rank3kit/examples.hpp"
#include "rank3kit/group_algorithms.hpp"
#include "rank3kit/io.hpp"
#include "rank3kit/linear_families.hpp"
#include "rank3kit/small_group.hpp"
#include "rank3kit/structure.hpp"

namespace rank3kit {

const char *to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass: return "PASS";
  case CheckStatus::fail: return "FAIL";
  case CheckStatus::skipped: return "SKIP";
  }
  return "?";
}

namespace {

class Recorder {
public:
  explicit Recorder(std::string suite, std::vector<CheckResult> &out)
      : suite_(std::move(suite)), out_(out) {}

  void record(const std::string &name, bool ok, const std::string &detail) {
    out_.push_back({suite_, name,
                    ok ? CheckStatus::pass : CheckStatus::fail, detail});
  }
  void expect(const std::string &name, bool ok) {
    record(name, ok, ok ? "holds" : "violated");
  }
  template <typename A, typename B>
  void expect_eq(const std::string &name, const A &computed,
                 const B &claimed) {
    std::ostringstream d;
    d << "computed " << computed << ", expected " << claimed;
    record(name, computed == static_cast<A>(claimed), d.str());
  }
  /// A claim-vs-computation comparison that never fails: a mismatch is a
  /// recorded discrepancy, not an error in this toolkit.
  void discrepancy_flag(const std::string &name, long long claimed,
                        long long computed, const std::string &what) {
    std::ostringstream d;
    d << "source claims " << what << " = " << claimed << "; computed " << what
      << " = " << computed;
    if (claimed != computed) d << "; DISCREPANCY";
    out_.push_back({suite_, name, CheckStatus::pass, d.str()});
  }
  void skip(const std::string &name, const std::string &why) {
    out_.push_back({suite_, name, CheckStatus::skipped, why});
  }
  /// Runs the body, converting CapacityError into a skip and any other
  /// exception into a failure carrying the message.
  void guarded(const std::string &name, const std::function<void()> &body) {
    try {
      body();
    } catch (const CapacityError &e) {
      skip(name, std::string("capacity: ") + e.what());
    } catch (const std::exception &e) {
      record(name, false, std::string("exception: ") + e.what());
    }
  }

private:
  std::string suite_;
  std::vector<CheckResult> &out_;
};

std::string subdegrees_str(const std::vector<long long> &v) {
  std::ostringstream s;
  s << "{";
  for (size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << "}";
  return s.str();
}

std::vector<std::vector<int>> canonical_parts(
    std::vector<std::vector<int>> parts) {
  for (auto &p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(),
            [](const std::vector<int> &a, const std::vector<int> &b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return parts;
}

// ---------------------------------------------------------------- examples-6

void run_examples_6(std::vector<CheckResult> &out) {
  Recorder rec("examples-6", out);

  rec.guarded("ex6.1-G1", [&] {
    PermGroup g = build_example_6_1(1);
    rec.expect_eq("ex6.1-G1 rank", g.rank(), 3);
    rec.record("ex6.1-G1 subdegrees", g.subdegrees() ==
                   std::vector<long long>{1, 7, 8},
               subdegrees_str(g.subdegrees()));
    rec.expect("ex6.1-G1 not semiprimitive", !is_semiprimitive(g));
  });
  rec.guarded("ex6.1-G2", [&] {
    PermGroup g = build_example_6_1(2);
    rec.expect_eq("ex6.1-G2 rank", g.rank(), 3);
    rec.record("ex6.1-G2 subdegrees", g.subdegrees() ==
                   std::vector<long long>{1, 1, 14},
               subdegrees_str(g.subdegrees()));
    rec.expect("ex6.1-G2 semiprimitive", is_semiprimitive(g));
    rec.record("ex6.1-G2 class", classify_theorem_1_2(g).tag ==
                   TheoremClass::B, "expected class B");
  });

  rec.guarded("ex6.2-q3", [&] {
    Example62 ex = build_example_6_2(3);
    rec.expect_eq("ex6.2-q3 degree", ex.group.degree(), 27);
    rec.expect_eq("ex6.2-q3 order", ex.group.order(), 216ull);
    SmallGroupTable n = SmallGroupTable::from_group(ex.n_subgroup);
    rec.expect_eq("ex6.2-q3 |N|", n.order(), 27);
    auto center = n.center();
    auto derived = n.derived_subgroup();
    auto frattini = n.frattini_p_group();
    rec.expect("ex6.2-q3 N special",
               center.size() == 3 && derived == center &&
                   frattini == center);
    rec.discrepancy_flag("ex6.2-q3 rank flag", 3, ex.group.rank(), "rank");
  });

  rec.guarded("ex6.3-p3", [&] {
    Example63 ex = build_example_6_3(3);
    rec.expect_eq("ex6.3-p3 degree", ex.group.degree(), 27);
    rec.expect_eq("ex6.3-p3 rank", ex.group.rank(), 3);
    rec.record("ex6.3-p3 subdegrees", ex.group.subdegrees() ==
                   std::vector<long long>{1, 2, 24},
               subdegrees_str(ex.group.subdegrees()));
    SmallGroupTable n = SmallGroupTable::from_group(ex.n_subgroup);
    rec.expect("ex6.3-p3 N extraspecial exponent 3",
               n.order() == 27 && !n.is_abelian() && n.exponent() == 3 &&
                   n.center().size() == 3);
    ClassifyResult cls = classify_theorem_1_2(ex.group);
    bool clause_b = false;
    for (const Evidence &e : cls.evidence)
      if (e.clause.rfind("B:", 0) == 0) clause_b = e.value;
    rec.expect("ex6.3-p3 clause (B) evidence", clause_b);
    rec.discrepancy_flag("ex6.3-p3 semiprimitivity flag", 1,
                         is_semiprimitive(ex.group) ? 1 : 0,
                         "is_semiprimitive");
  });

  rec.guarded("sum-zero-(2,2,3)", [&] {
    PermGroup g = build_sum_zero_example(2, 2, 3);
    rec.expect_eq("sum-zero-(2,2,3) rank", g.rank(), 3);
    rec.expect("sum-zero-(2,2,3) Corollary 2.4", corollary_2_4_check(g));
    rec.record("sum-zero-(2,2,3) class",
               classify_theorem_1_2(g).tag == TheoremClass::C,
               "expected class C");
  });
}

// --------------------------------------------------------------- family-scan

std::vector<FamilySpec> scan_selectors(int d, long long q, long long r) {
  FieldContext field = q == 4   ? FieldContext(2, 2)
                       : q == 8 ? FieldContext(2, 3)
                       : q == 9 ? FieldContext(3, 2)
                                : FieldContext(q, 1);
  std::vector<FamilySpec> specs;
  specs.push_back({d, field, r, {}});                       // SLbar
  for (long long i = 0; i < q - 1; ++i)                     // single coset gen
    for (int j = 0; j < field.f(); ++j)
      if (i != 0 || j != 0) specs.push_back({d, field, r, {{i, j}}});
  specs.push_back({d, field, r, {{1, 0}, {0, 1}}});          // full GammaLbar
  return specs;
}

void run_family_scan(std::vector<CheckResult> &out) {
  Recorder rec("family-scan", out);
  for (int d : {2, 3})
    for (long long q : {3, 4, 5, 7, 8, 9})
      for (long long r = 2; r <= q - 1; ++r) {
        if ((q - 1) % r != 0) continue;
        for (const FamilySpec &spec : scan_selectors(d, q, r)) {
          std::string name = "d=" + std::to_string(d) +
                             ",q=" + std::to_string(q) +
                             ",r=" + std::to_string(r) +
                             ",gens=" + selector_to_string(spec);
          rec.guarded(name, [&] {
            FamilyPredicateResult pred = rank3_family_predicate(spec);
            if (!pred.covered) {
              rec.skip(name, "parameter shape not covered by the criteria");
              return;
            }
            bool rank3 = delta_action(spec).rank() == 3;
            std::ostringstream d2;
            d2 << "predicate " << (pred.rank3 ? "rank3" : "not-rank3")
               << ", computed " << (rank3 ? "rank3" : "not-rank3");
            rec.record(name, pred.rank3 == rank3, d2.str());
          });
        }
      }

  // Suborbit descriptions versus computed stabilizer orbits.
  auto orbit_check = [&](const std::string &name, const FamilySpec &spec,
                         SuborbitLemma which, const PermGroup &g) {
    rec.guarded(name, [&] {
      auto expected = canonical_parts(expected_suborbits(spec, which));
      auto computed = canonical_parts(g.stabilizer_orbits(0));
      rec.record(name, expected == computed,
                 expected == computed ? "orbit partitions match"
                                      : "orbit partitions differ");
    });
  };
  for (auto [d, p, f] :
       {std::tuple<int, long long, int>{2, 5, 1}, {3, 3, 1}, {2, 2, 2}}) {
    FieldContext F(p, f);
    FamilySpec spec{d, F, F.q() - 1, {}};
    orbit_check("suborbits GL d=" + std::to_string(d) + " q=" +
                    std::to_string(F.q()),
                spec, SuborbitLemma::gl_on_vectors,
                linear_group_on_vectors(LinearKind::GL, d, F));
    orbit_check("suborbits SL d=" + std::to_string(d) + " q=" +
                    std::to_string(F.q()),
                spec, SuborbitLemma::sl_on_vectors,
                linear_group_on_vectors(LinearKind::SL, d, F));
  }
  for (const char *text : {"d=3,q=4,r=3,gens=delta", "d=2,q=7,r=2,gens=delta",
                           "d=2,q=9,r=4,gens=delta"}) {
    FamilySpec spec = parse_family_spec(text);
    orbit_check(std::string("suborbits GLbar ") + text, spec,
                SuborbitLemma::glbar_on_delta, delta_action(spec));
  }
  for (const char *text : {"d=2,q=5,r=2,gens=none", "d=2,q=7,r=2,gens=none",
                           "d=2,q=9,r=2,gens=none"}) {
    FamilySpec spec = parse_family_spec(text);
    orbit_check(std::string("suborbits SLbar ") + text, spec,
                SuborbitLemma::slbar_on_delta_d2, delta_action(spec));
  }
}

// ------------------------------------------------------- lemma-2-invariants

void run_lemma_2_invariants(std::vector<CheckResult> &out,
                            const SuiteOptions &options) {
  Recorder rec("lemma-2-invariants", out);

  std::vector<std::pair<std::string, PermGroup>> corpus;
  corpus.emplace_back("ex6.1-G2", build_example_6_1(2));
  corpus.emplace_back("family-(3,4,3)-full",
                      delta_action(parse_family_spec("d=3,q=4,r=3,gens=full")));
  corpus.emplace_back("sum-zero-(2,2,3)", build_sum_zero_example(2, 2, 3));
  corpus.emplace_back("ex6.3-p3", build_example_6_3(3).group);
  try {
    for (const CatalogEntry &entry :
         load_catalog(options.catalog_path).entries) {
      std::ostringstream grp;
      grp << "degree " << entry.degree << "\n";
      for (const std::string &g : entry.generators) grp << g << "\n";
      corpus.emplace_back("catalog-" + entry.name,
                          parse_group_file(grp.str()));
    }
  } catch (const std::exception &e) {
    rec.record("catalog corpus load", false, e.what());
  }

  for (const auto &[name, g] : corpus) {
    rec.guarded(name, [&, &name = name, &g = g] {
      Rank3Report r = analyze(g);
      rec.expect(name + " rank-3 imprimitive", r.rank == 3 && r.imprimitive);
      if (r.rank != 3 || !r.imprimitive) return;
      bool both_2t = r.block_group_type != SocleType::other &&
                     r.top_group_type != SocleType::other;
      if (both_2t)
        rec.expect(name + " unique block system (Lemma 2.2)",
                   r.unique_nontrivial_system);
      else
        rec.skip(name + " unique block system (Lemma 2.2)",
                 "induced actions not both 2-transitive");
      rec.expect(name + " Lemma 2.3 (i)(ii) and index |B|^2",
                 lemma_2_3_check(r, g));
      rec.expect(name + " |G| = |K| * |G^B|",
                 r.kernel_order * r.top_group_order == r.order);
      // Lemma 2.5 dichotomy: every nontrivial normal closure is transitive
      // or lies inside the kernel.
      BlockSystem bs = analysis_block_system(g);
      PermGroup kernel = block_action_kernel(g, bs);
      bool dichotomy = true;
      for (const Perm &cls_rep : conjugacy_class_representatives(g)) {
        if (cls_rep.is_identity()) continue;
        PermGroup n = normal_closure(g, {cls_rep});
        bool inside_k = true;
        for (const Perm &s : n.generators()) inside_k &= kernel.contains(s);
        if (!n.is_transitive() && !inside_k) { dichotomy = false; break; }
      }
      rec.expect(name + " Lemma 2.5 dichotomy", dichotomy);
    });
  }
}

// --------------------------------------------------------- aut-orbit-table

PermGroup regular_z2_cubed() {
  std::vector<Perm> gens;
  for (int bit : {1, 2, 4}) {
    std::vector<int> img(8);
    for (int x = 0; x < 8; ++x) img[x] = x ^ bit;
    gens.emplace_back(img);
  }
  return PermGroup(8, gens);
}

PermGroup cyclic(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return PermGroup(n, {Perm(img)});
}

PermGroup quaternion_8() {
  // Q_8 as <i, j> in SL_2(3) acting on the 8 nonzero vectors of F_3^2,
  // vector (a, b) encoded as a + 3b, point index = encoding - 1.
  auto mat_perm = [](int m00, int m01, int m10, int m11) {
    std::vector<int> img(8);
    for (int code = 1; code < 9; ++code) {
      int a = code % 3, b = code / 3;
      int a2 = (a * m00 + b * m10) % 3, b2 = (a * m01 + b * m11) % 3;
      img[code - 1] = a2 + 3 * b2 - 1;
    }
    return Perm(img);
  };
  return PermGroup(8, {mat_perm(0, 2, 1, 0), mat_perm(1, 1, 1, 2)});
}

PermGroup alternating_4() {
  return PermGroup(4, {Perm({1, 2, 0, 3}), Perm({1, 0, 3, 2})});
}

PermGroup heisenberg_27() {
  // Extraspecial of order 27 and exponent 3, right-regular action on
  // triples (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
  auto decode = [](int x) { return std::array<int, 3>{x % 3, x / 3 % 3, x / 9}; };
  auto right_mul = [&](std::array<int, 3> t) {
    std::vector<int> img(27);
    for (int x = 0; x < 27; ++x) {
      auto [a, b, c] = decode(x);
      int a2 = (a + t[0]) % 3, b2 = (b + t[1]) % 3,
          c2 = (c + t[2] + a * t[1]) % 3;
      img[x] = a2 + 3 * b2 + 9 * c2;
    }
    return Perm(img);
  };
  return PermGroup(27, {right_mul({1, 0, 0}), right_mul({0, 1, 0})});
}

void run_aut_orbit_table(std::vector<CheckResult> &out) {
  Recorder rec("aut-orbit-table", out);
  struct Row {
    const char *name;
    PermGroup group;
    int orbit_count;
    RegularNormalClass cls;
  };
  const Row rows[] = {
      {"Z_2^3", regular_z2_cubed(), 2, RegularNormalClass::elementary_abelian},
      {"Z_9", cyclic(9), 3, RegularNormalClass::homocyclic_p2},
      {"Q_8", quaternion_8(), 3, RegularNormalClass::special_2_exp4},
      {"A_4", alternating_4(), 3, RegularNormalClass::frobenius_pq},
      {"extraspecial-27-exp-3", heisenberg_27(), 3,
       RegularNormalClass::special_p_expp},
      {"Z_8", cyclic(8), 4, RegularNormalClass::none_of_listed},
  };
  for (const Row &row : rows) {
    rec.guarded(row.name, [&] {
      SmallGroupTable t = SmallGroupTable::from_group(row.group);
      AutOrbitResult res = automorphism_orbit_count(t);
      std::ostringstream d;
      d << "orbits " << res.orbit_count << " (expected " << row.orbit_count
        << "), class " << to_string(res.cls) << " (expected "
        << to_string(row.cls) << ")";
      rec.record(row.name, res.orbit_count == row.orbit_count &&
                     res.cls == row.cls, d.str());
    });
  }
}

// ------------------------------------------------------------------ catalog

void run_catalog(std::vector<CheckResult> &out, const SuiteOptions &options) {
  Recorder rec("catalog", out);
  Catalog catalog;
  try {
    catalog = load_catalog(options.catalog_path);
  } catch (const std::exception &e) {
    rec.record("catalog load", false, e.what());
    return;
  }
  if (catalog.entries.empty()) {
    rec.record("catalog load", false,
               "no entries in " + options.catalog_path);
    return;
  }
  CatalogEntry negative_control;
  for (CatalogEntry &entry : catalog.entries) {
    rec.guarded(entry.name, [&] {
      std::vector<std::string> mismatches = catalog_verify_entry(entry);
      std::ostringstream d;
      if (mismatches.empty())
        d << "all claimed properties recomputed and matched";
      else
        for (const std::string &m : mismatches) d << m << "; ";
      rec.record(entry.name, entry.verified, d.str());
    });
    if (entry.name == "2.M12-deg24") negative_control = entry;
  }
  // Negative control: a deliberately wrong order claim must be caught and
  // reported field-precisely.
  if (!negative_control.name.empty()) {
    rec.guarded("negative-control", [&] {
      negative_control.claims.order = 95040;
      std::vector<std::string> mismatches =
          catalog_verify_entry(negative_control);
      bool ok = !negative_control.verified && mismatches.size() == 1 &&
                mismatches[0].rfind("order:", 0) == 0;
      rec.record("negative-control wrong order detected", ok,
                 mismatches.empty() ? "mismatch not detected"
                                    : mismatches[0]);
    });
  }
}

} // namespace

std::vector<CheckResult> verify_paper_suite(const std::string &selector,
                                            const SuiteOptions &options) {
  const bool all = selector.empty() || selector == "all";
  bool known = all;
  std::vector<CheckResult> out;
  if (all || selector == "examples-6") { run_examples_6(out); known = true; }
  if (all || selector == "family-scan") { run_family_scan(out); known = true; }
  if (all || selector == "lemma-2-invariants") {
    run_lemma_2_invariants(out, options);
    known = true;
  }
  if (all || selector == "aut-orbit-table") {
    run_aut_orbit_table(out);
    known = true;
  }
  if (all || selector == "catalog") { run_catalog(out, options); known = true; }
  if (!known)
    throw std::invalid_argument("unknown suite `" + selector + "`");
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckResult &a, const CheckResult &b) {
                     if (a.suite != b.suite) return a.suite < b.suite;
                     return a.name < b.name;
                   });
  return out;
}

int suite_exit_code(const std::vector<CheckResult> &results) {
  bool any_fail = false, any_skip = false;
  for (const CheckResult &r : results) {
    any_fail |= r.status == CheckStatus::fail;
    any_skip |= r.status == CheckStatus::skipped;
  }
  return any_fail ? 1 : any_skip ? 2 : 0;
}

} // namespace rank3kit
