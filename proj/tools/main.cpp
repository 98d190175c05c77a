// rank3: command-line surface for the rank3kit library.
//
// Exit codes: 0 success / all checks pass, 1 any check failed or a
// verification mismatch, 2 capacity limit hit or checks skipped, 64 usage
// error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rank3kit/analyzer.hpp"
#include "rank3kit/errors.hpp"
#include "rank3kit/examples.hpp"
#include "rank3kit/io.hpp"
#include "rank3kit/linear_families.hpp"
#include "rank3kit/small_group.hpp"
#include "rank3kit/structure.hpp"
#include "rank3kit/verify.hpp"

using namespace rank3kit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitUsage = 64;

struct GlobalOpts {
  unsigned long long cap_order = kDefaultEnumerationCap;
  unsigned long long seed = 0; // scheduling only; never affects results
  bool quiet = false;
};

void print_report(const Rank3Report &r, const GlobalOpts &opts) {
  if (opts.quiet) return;
  std::cout << "degree " << r.degree << ", order " << r.order << ", rank "
            << r.rank << ", subdegrees {";
  for (size_t i = 0; i < r.subdegrees.size(); ++i)
    std::cout << (i ? "," : "") << r.subdegrees[i];
  std::cout << "}\n";
  std::cout << "semiprimitive " << (r.flags.semiprimitive ? "yes" : "no")
            << ", quasiprimitive " << (r.flags.quasiprimitive ? "yes" : "no")
            << ", innately transitive "
            << (r.flags.innately_transitive ? "yes" : "no") << "\n";
  if (r.imprimitive && r.rank == 3) {
    std::cout << "blocks: " << r.block_count << " of size " << r.block_size
              << (r.unique_nontrivial_system ? " (unique system)" : "")
              << ", kernel order " << r.kernel_order << "\n";
    std::cout << "class (" << to_string(r.theorem_class) << ")\n";
    for (const Evidence &e : r.evidence)
      std::cout << "  clause " << e.clause << ": "
                << (e.value ? "holds" : "does not hold") << "\n";
  }
  for (const std::string &n : r.notes) std::cout << "note: " << n << "\n";
}

int analyze_group(const PermGroup &g, const std::string &input_text,
                  const std::string &json_path, const GlobalOpts &opts) {
  if (g.order() > opts.cap_order) {
    std::cerr << "capacity: group order " << g.order() << " exceeds --cap-order "
              << opts.cap_order << "\n";
    return kExitCapacity;
  }
  Rank3Report r = analyze(g);
  print_report(r, opts);
  if (!json_path.empty())
    write_file_atomic(json_path, report_to_json(r, input_digest(input_text)));
  return kExitPass;
}

int cmd_analyze(const std::string &path, const std::string &json_path,
                const GlobalOpts &opts) {
  std::string text = read_file(path);
  return analyze_group(parse_group_file(text), text, json_path, opts);
}

int cmd_family(const std::string &spec_text, const std::string &json_path,
               const GlobalOpts &opts) {
  FamilySpec spec = parse_family_spec(spec_text);
  PermGroup g = delta_action(spec);
  if (g.order() > opts.cap_order) {
    std::cerr << "capacity: group order " << g.order() << " exceeds --cap-order\n";
    return kExitCapacity;
  }
  Rank3Report r = analyze(g);
  print_report(r, opts);
  if (!json_path.empty())
    write_file_atomic(json_path,
                      report_to_json(r, input_digest(spec_text)));
  FamilyPredicateResult pred = rank3_family_predicate(spec);
  if (!pred.covered) {
    if (!opts.quiet)
      std::cout << "predicate: parameter shape not covered\n";
    return kExitCapacity;
  }
  bool consistent = pred.rank3 == (r.rank == 3);
  if (!opts.quiet)
    std::cout << "predicate " << (pred.rank3 ? "rank3" : "not-rank3")
              << ", computed rank " << r.rank << ", verdict "
              << (consistent ? "CONSISTENT" : "INCONSISTENT") << "\n";
  return consistent ? kExitPass : kExitFail;
}

int cmd_scan(int dmax, long long qmax, const GlobalOpts &opts) {
  int fails = 0, skips = 0;
  for (int d = 2; d <= dmax; ++d)
    for (long long q : {3, 4, 5, 7, 8, 9}) {
      if (q > qmax) continue;
      for (long long r = 2; r <= q - 1; ++r) {
        if ((q - 1) % r != 0) continue;
        FieldContext field = q == 4   ? FieldContext(2, 2)
                             : q == 8 ? FieldContext(2, 3)
                             : q == 9 ? FieldContext(3, 2)
                                      : FieldContext(q, 1);
        std::vector<FamilySpec> specs;
        specs.push_back({d, field, r, {}});
        for (long long i = 0; i < q - 1; ++i)
          for (int j = 0; j < field.f(); ++j)
            if (i != 0 || j != 0) specs.push_back({d, field, r, {{i, j}}});
        specs.push_back({d, field, r, {{1, 0}, {0, 1}}});
        for (const FamilySpec &spec : specs) {
          std::string name = "d=" + std::to_string(d) + ",q=" +
                             std::to_string(q) + ",r=" + std::to_string(r) +
                             ",gens=" + selector_to_string(spec);
          try {
            FamilyPredicateResult pred = rank3_family_predicate(spec);
            if (!pred.covered) {
              ++skips;
              if (!opts.quiet) std::cout << name << ": SKIP (not covered)\n";
              continue;
            }
            bool rank3 = delta_action(spec).rank() == 3;
            bool ok = pred.rank3 == rank3;
            fails += !ok;
            if (!opts.quiet || !ok)
              std::cout << name << ": " << (ok ? "PASS" : "FAIL")
                        << " (predicate " << (pred.rank3 ? "rank3" : "not-rank3")
                        << ", computed " << (rank3 ? "rank3" : "not-rank3")
                        << ")\n";
          } catch (const CapacityError &e) {
            ++skips;
            if (!opts.quiet) std::cout << name << ": SKIP (" << e.what() << ")\n";
          }
        }
      }
    }
  return fails ? kExitFail : skips ? kExitCapacity : kExitPass;
}

int cmd_example(const std::string &which, long long q, long long p, int m,
                const std::string &json_path, const GlobalOpts &opts) {
  if (which == "6.1") {
    for (int i : {1, 2}) {
      PermGroup g = build_example_6_1(i);
      if (!opts.quiet) std::cout << "G_" << i << ":\n";
      int rc = analyze_group(g, "example 6.1 G_" + std::to_string(i),
                             i == 2 ? json_path : "", opts);
      if (rc != kExitPass) return rc;
    }
    return kExitPass;
  }
  if (which == "6.2") {
    Example62 ex = build_example_6_2(q);
    int rc = analyze_group(ex.group, "example 6.2 q=" + std::to_string(q),
                           json_path, opts);
    if (rc != kExitPass) return rc;
    long long rank = ex.group.rank();
    std::cout << "paper claims rank 3; computed rank = " << rank
              << (rank == 3 ? "" : "; DISCREPANCY") << "\n";
    return kExitPass;
  }
  if (which == "6.3") {
    Example63 ex = build_example_6_3(p, m);
    int rc = analyze_group(ex.group, "example 6.3 p=" + std::to_string(p) +
                               " m=" + std::to_string(m),
                           json_path, opts);
    if (rc != kExitPass) return rc;
    bool sp = is_semiprimitive(ex.group);
    std::cout << "paper claims semiprimitive; computed semiprimitive = "
              << (sp ? "true" : "false") << (sp ? "" : "; DISCREPANCY")
              << "\n";
    return kExitPass;
  }
  std::cerr << "unknown example `" << which << "` (expected 6.1, 6.2, 6.3)\n";
  return kExitUsage;
}

int print_suite_results(const std::vector<CheckResult> &results,
                        const GlobalOpts &opts) {
  for (const CheckResult &r : results)
    if (!opts.quiet || r.status != CheckStatus::pass)
      std::cout << "[" << to_string(r.status) << "] " << r.suite << " / "
                << r.name << " — " << r.detail << "\n";
  int code = suite_exit_code(results);
  if (!opts.quiet)
    std::cout << results.size() << " checks, exit " << code << "\n";
  return code;
}

int cmd_autorbits(const std::string &path, const GlobalOpts &opts) {
  SmallGroupTable t = SmallGroupTable::parse(read_file(path));
  AutOrbitResult res = automorphism_orbit_count(t);
  if (!opts.quiet)
    std::cout << "order " << t.order() << ", |Aut| " << res.aut_order
              << ", orbits " << res.orbit_count << ", class "
              << to_string(res.cls) << "\n";
  return kExitPass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"rank3kit: rank-3 imprimitive permutation group toolkit"};
  app.require_subcommand(1);
  app.fallthrough(); // accept global flags after the subcommand too
  GlobalOpts opts;
  app.add_option("--cap-order", opts.cap_order,
                 "skip computations on groups larger than this order");
  app.add_option("--seed", opts.seed,
                 "scheduling seed (never affects results)");
  app.add_flag("--quiet", opts.quiet, "suppress non-essential output");

  std::string in_path, json_path, family_spec, suite = "all";
  std::string catalog_path = "data/catalog.json";
  auto *analyze_cmd = app.add_subcommand("analyze", "analyze a group file");
  analyze_cmd->add_option("file", in_path, "group file")->required();
  analyze_cmd->add_option("--json", json_path, "write the JSON report here");

  auto *family_cmd =
      app.add_subcommand("family", "build and analyze a Delta-family group");
  family_cmd->add_option("--family", family_spec, "d=..,q=..,r=..,gens=..")
      ->required();
  family_cmd->add_option("--json", json_path, "write the JSON report here");

  int dmax = 3;
  long long qmax = 9;
  auto *scan_cmd =
      app.add_subcommand("scan", "grid predicate-vs-computation run");
  scan_cmd->add_option("--dmax", dmax, "largest dimension (default 3)");
  scan_cmd->add_option("--qmax", qmax, "largest field size (default 9)");

  std::string example_name;
  long long ex_q = 3, ex_p = 3;
  int ex_m = 1;
  auto *example_cmd = app.add_subcommand("example", "build a worked example");
  example_cmd->add_option("which", example_name, "6.1 | 6.2 | 6.3")
      ->required();
  example_cmd->add_option("--q", ex_q, "field size for 6.2 (default 3)");
  example_cmd->add_option("--p", ex_p, "prime for 6.3 (default 3)");
  example_cmd->add_option("--m", ex_m, "half-rank for 6.3 (default 1)");
  example_cmd->add_option("--json", json_path, "write the JSON report here");

  auto *catalog_cmd = app.add_subcommand("catalog", "verified group catalog");
  catalog_cmd->add_option("--catalog", catalog_path, "catalog JSON path");
  std::string add_name, add_file, add_claims, add_provenance, verify_name;
  auto *cat_add = catalog_cmd->add_subcommand("add", "add and verify");
  cat_add->add_option("name", add_name)->required();
  cat_add->add_option("--file", add_file, "group file")->required();
  cat_add->add_option("--claims", add_claims,
                      "JSON file with the claimed properties")
      ->required();
  cat_add->add_option("--provenance", add_provenance, "provenance note");
  auto *cat_list = catalog_cmd->add_subcommand("list", "list entries");
  auto *cat_verify = catalog_cmd->add_subcommand("verify", "re-verify");
  cat_verify->add_option("name", verify_name, "entry name")->required();
  catalog_cmd->require_subcommand(1);

  auto *verify_cmd =
      app.add_subcommand("verify-paper", "run the verification suites");
  verify_cmd->add_option("--suite", suite,
                         "examples-6 | family-scan | lemma-2-invariants | "
                         "aut-orbit-table | catalog | all");
  verify_cmd->add_option("--catalog", catalog_path, "catalog JSON path");

  std::string table_path;
  auto *aut_cmd = app.add_subcommand(
      "autorbits", "automorphism orbit count of a multiplication table");
  aut_cmd->add_option("file", table_path, "table file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(in_path, json_path, opts);
    if (family_cmd->parsed()) return cmd_family(family_spec, json_path, opts);
    if (scan_cmd->parsed()) return cmd_scan(dmax, qmax, opts);
    if (example_cmd->parsed())
      return cmd_example(example_name, ex_q, ex_p, ex_m, json_path, opts);
    if (catalog_cmd->parsed()) {
      Catalog catalog = load_catalog(catalog_path);
      if (cat_list->parsed()) {
        for (const CatalogEntry &e : catalog.entries)
          std::cout << e.name << ": degree " << e.degree << ", "
                    << (e.verified ? "verified" : "unverified")
                    << (e.mismatches.empty()
                            ? ""
                            : " (" + std::to_string(e.mismatches.size()) +
                                  " mismatches)")
                    << "\n";
        return kExitPass;
      }
      if (cat_add->parsed()) {
        CatalogEntry entry;
        entry.name = add_name;
        std::string text = read_file(add_file);
        PermGroup g = parse_group_file(text);
        entry.degree = g.degree();
        std::istringstream lines(emit_group_file(g));
        std::string line;
        std::getline(lines, line); // degree header
        while (std::getline(lines, line))
          if (!line.empty()) entry.generators.push_back(line);
        entry.provenance = add_provenance;
        // Claims arrive as a standalone JSON object with the same keys as
        // the catalog's `claims` field; reuse the strict parser by wrapping
        // them in a one-entry catalog document.
        std::string claims_text = read_file(add_claims);
        Catalog tmp;
        std::string doc =
            std::string("{\"schema_version\":1,\"entries\":[{\"name\":\"x\","
                        "\"degree\":") +
            std::to_string(g.degree()) +
            ",\"generators\":[],\"claims\":" + claims_text +
            ",\"provenance\":\"\",\"verified\":false,\"verified_at\":\"\","
            "\"mismatches\":[]}]}";
        const std::string tmp_path = catalog_path + ".claims.tmp";
        write_file_atomic(tmp_path, doc);
        tmp = load_catalog(tmp_path);
        std::remove(tmp_path.c_str());
        entry.claims = tmp.entries.at(0).claims;
        std::vector<std::string> mismatches =
            catalog_add_and_verify(catalog, entry);
        save_catalog(catalog, catalog_path);
        for (const std::string &m : mismatches)
          std::cout << "mismatch: " << m << "\n";
        if (!opts.quiet)
          std::cout << add_name << ": "
                    << (mismatches.empty() ? "verified" : "NOT verified")
                    << "\n";
        return mismatches.empty() ? kExitPass : kExitFail;
      }
      // catalog verify <name>
      for (CatalogEntry &entry : catalog.entries)
        if (entry.name == verify_name) {
          std::vector<std::string> mismatches = catalog_verify_entry(entry);
          save_catalog(catalog, catalog_path);
          for (const std::string &m : mismatches)
            std::cout << "mismatch: " << m << "\n";
          if (!opts.quiet)
            std::cout << entry.name << ": "
                      << (entry.verified ? "verified" : "NOT verified")
                      << "\n";
          return entry.verified ? kExitPass : kExitFail;
        }
      std::cerr << "no catalog entry named `" << verify_name << "`\n";
      return kExitFail;
    }
    if (verify_cmd->parsed()) {
      SuiteOptions sopts;
      sopts.catalog_path = catalog_path;
      return print_suite_results(verify_paper_suite(suite, sopts), opts);
    }
    if (aut_cmd->parsed()) return cmd_autorbits(table_path, opts);
  } catch (const CapacityError &e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
