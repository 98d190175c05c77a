#include "doctest.h"

#include <cstdio>
#include <string>

#include "rank3kit/analyzer.hpp"
#include "rank3kit/examples.hpp"
#include "rank3kit/io.hpp"
#include "rank3kit/verify.hpp"

using namespace rank3kit;

#ifndef RANK3KIT_DATA_DIR
#define RANK3KIT_DATA_DIR "data"
#endif

TEST_CASE("group file: cycle notation") {
  PermGroup g = parse_group_file("degree 3\n(1,2,3)\n");
  CHECK(g.order() == 3);
  PermGroup d4 = parse_group_file("degree 4\nimg: 2 1 4 3\nimg: 2 3 4 1\n");
  CHECK(d4.order() == 8);
}

TEST_CASE("group file: comments, blank lines, multi-cycle lines") {
  PermGroup g = parse_group_file(
      "# symmetric group on 4 points\n\ndegree 4\n(1,2)(3,4)\n(1,2,3,4)\n");
  CHECK(g.order() == 8); // <(12)(34), (1234)> = D_8
  PermGroup s4 = parse_group_file("degree 4\n(1,2)\n(1,2,3,4)\n");
  CHECK(s4.order() == 24);
}

TEST_CASE("group file: errors are line-numbered") {
  CHECK_THROWS_WITH_AS(parse_group_file("degree 3\n(1,2,2)\n"),
                       "line 2: repeated point 2", std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_group_file("degree 3\nimg: 1 1 2\n"),
                       "line 2: repeated point 1", std::invalid_argument);
  CHECK_THROWS_AS(parse_group_file("degree 3\n(1,2,4)\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_group_file("degree 3\nimg: 1 2\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_group_file("order 3\n(1,2,3)\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_group_file("degree 3\n"), std::invalid_argument);
}

TEST_CASE("group file emit/parse round-trip") {
  PermGroup g = build_example_6_1(2);
  std::string text = emit_group_file(g);
  PermGroup back = parse_group_file(text);
  CHECK(back.order() == g.order());
  CHECK(back.degree() == g.degree());
  for (const Perm &p : g.generators()) CHECK(back.contains(p));
}

TEST_CASE("JSON report round-trips losslessly") {
  Rank3Report r = analyze(build_example_6_1(2));
  std::string digest = input_digest("some input");
  std::string text = report_to_json(r, digest);
  std::string digest_back;
  Rank3Report back = report_from_json(text, &digest_back);
  CHECK(digest_back == digest);
  CHECK(report_to_json(back, digest_back) == text); // parse(emit(x)) == x
  CHECK(back.rank == r.rank);
  CHECK(back.theorem_class == r.theorem_class);
  CHECK(back.evidence.size() == r.evidence.size());
  CHECK(back.notes == r.notes);
}

TEST_CASE("JSON report is deterministic") {
  Rank3Report r = analyze(build_sum_zero_example(2, 2, 3));
  CHECK(report_to_json(r, "00") == report_to_json(r, "00"));
}

TEST_CASE("JSON report rejects unknown fields and bad schema versions") {
  Rank3Report r = analyze(build_example_6_1(2));
  std::string text = report_to_json(r, "00");
  std::string extra = text;
  extra.replace(extra.find("\"degree\""), 8, "\"degreee\"");
  CHECK_THROWS_AS(report_from_json(extra), std::invalid_argument);
  std::string bumped = text;
  bumped.replace(bumped.find("\"schema_version\": 1"), 19,
                 "\"schema_version\": 9");
  CHECK_THROWS_AS(report_from_json(bumped), std::invalid_argument);
}

TEST_CASE("input digest is stable and content-sensitive") {
  CHECK(input_digest("abc") == input_digest("abc"));
  CHECK(input_digest("abc") != input_digest("abd"));
  CHECK(input_digest("").size() == 16);
}

static std::string data_path(const std::string &name) {
  return std::string(RANK3KIT_DATA_DIR) + "/" + name;
}

TEST_CASE("shipped catalog verifies and persists atomically") {
  Catalog catalog = load_catalog(data_path("catalog.json"));
  REQUIRE(catalog.entries.size() == 2);
  for (CatalogEntry &entry : catalog.entries) {
    auto mismatches = catalog_verify_entry(entry);
    CHECK(mismatches.empty());
    CHECK(entry.verified);
  }
  const std::string tmp = "test_catalog_roundtrip.json";
  save_catalog(catalog, tmp);
  Catalog back = load_catalog(tmp);
  REQUIRE(back.entries.size() == 2);
  CHECK(back.entries[0].name == catalog.entries[0].name);
  CHECK(back.entries[0].verified);
  CHECK(back.entries[1].claims.subdegrees ==
        catalog.entries[1].claims.subdegrees);
  std::remove(tmp.c_str());
}

TEST_CASE("catalog negative control: wrong order is a field-precise mismatch") {
  Catalog catalog = load_catalog(data_path("catalog.json"));
  CatalogEntry entry;
  for (const CatalogEntry &e : catalog.entries)
    if (e.name == "2.M12-deg24") entry = e;
  REQUIRE(entry.degree == 24);
  entry.claims.order = 95040;
  auto mismatches = catalog_verify_entry(entry);
  REQUIRE(mismatches.size() == 1);
  CHECK(mismatches[0] == "order: claimed 95040, computed 190080");
  CHECK_FALSE(entry.verified);
}

TEST_CASE("missing catalog file loads as empty; malformed one throws") {
  CHECK(load_catalog("no_such_catalog.json").entries.empty());
  const std::string tmp = "test_catalog_bad.json";
  write_file_atomic(tmp, "{\"schema_version\": 1, \"bogus\": []}");
  CHECK_THROWS_AS(load_catalog(tmp), std::invalid_argument);
  std::remove(tmp.c_str());
}

TEST_CASE("verify-paper selectors: unknown suite rejected, exit codes") {
  CHECK_THROWS_AS(verify_paper_suite("no-such-suite"),
                  std::invalid_argument);
  SuiteOptions opts;
  opts.catalog_path = data_path("catalog.json");
  auto results = verify_paper_suite("aut-orbit-table", opts);
  CHECK(results.size() == 6);
  CHECK(suite_exit_code(results) == 0);
  auto catalog_results = verify_paper_suite("catalog", opts);
  CHECK(suite_exit_code(catalog_results) == 0);
  bool negative_control_seen = false;
  for (const CheckResult &r : catalog_results)
    negative_control_seen |= r.name.rfind("negative-control", 0) == 0;
  CHECK(negative_control_seen);
}

TEST_CASE("examples-6 suite passes with the recorded discrepancies") {
  auto results = verify_paper_suite("examples-6");
  CHECK(suite_exit_code(results) == 0);
  int discrepancies = 0;
  for (const CheckResult &r : results)
    if (r.detail.find("DISCREPANCY") != std::string::npos) ++discrepancies;
  CHECK(discrepancies == 2); // Example 6.2 rank, Example 6.3 semiprimitivity
}
