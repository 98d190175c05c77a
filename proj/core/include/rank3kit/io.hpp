#pragma once

#include <string>
#include <vector>

#include "rank3kit/analyzer.hpp"
#include "rank3kit/perm_group.hpp"

namespace rank3kit {

/// Bumped whenever any field of the JSON report changes.
inline constexpr int kSchemaVersion = 1;
inline constexpr const char *kToolVersion = "1.0.0";

/// Parses the group file format: a header line `degree n`, then one
/// generator per line, either in cycle notation `(1,2,3)(4,5)` or as an
/// image line `img: 2 3 1`.  Points are 1-indexed.  Blank lines and lines
/// starting with `#` are ignored.  Errors (non-bijections, repeated points,
/// out-of-range points, degree mismatches, an empty generator list) are
/// reported as std::invalid_argument with the offending line number.
PermGroup parse_group_file(const std::string &text);

/// Emits a group in the image-line flavour of the same format.
std::string emit_group_file(const PermGroup &g);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string &path);

/// Writes atomically: the content goes to `path.tmp` first and is then
/// renamed over `path`, so concurrent readers never see a torn file.
void write_file_atomic(const std::string &path, const std::string &content);

/// Hex digest of the input text (64-bit FNV-1a), recorded in reports so a
/// report can be matched to the exact input that produced it.
std::string input_digest(const std::string &text);

/// Serializes a report (plus the digest of the analyzed input) as
/// deterministic JSON: fixed key order, no timestamps.  Identical inputs
/// produce byte-identical output.
std::string report_to_json(const Rank3Report &report,
                           const std::string &digest);

/// Inverse of report_to_json.  Rejects unknown fields and schema-version
/// mismatches with std::invalid_argument.  parse(emit(x)) == x.
Rank3Report report_from_json(const std::string &text,
                             std::string *digest_out = nullptr);

/// The properties a catalog entry claims; every one is recomputed during
/// verification.
struct CatalogClaims {
  unsigned long long order = 0;
  long long rank = 0;
  std::vector<long long> subdegrees;
  int block_size = 0;
  int block_count = 0;
  bool semiprimitive = false;
  bool innately_transitive = false;
  TheoremClass theorem_class = TheoremClass::not_applicable;
};

struct CatalogEntry {
  std::string name;
  int degree = 0;
  std::vector<std::string> generators; // image lines, 1-indexed
  CatalogClaims claims;
  std::string provenance;
  bool verified = false;
  std::string verified_at; // ISO timestamp; metadata only, never compared
  std::vector<std::string> mismatches;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
};

/// Loads a catalog document; a missing file yields an empty catalog, a
/// malformed one throws std::invalid_argument.
Catalog load_catalog(const std::string &path);

/// Persists the catalog as one JSON document via write_file_atomic.
void save_catalog(const Catalog &catalog, const std::string &path);

/// Builds the group from the entry's generators and recomputes every
/// claimed property.  The entry is marked verified only if all of them
/// match; otherwise `mismatches` lists each differing field as
/// "field: claimed X, computed Y".  Returns the mismatch list.
std::vector<std::string> catalog_verify_entry(CatalogEntry &entry);

/// Adds (or replaces, by name) an entry and verifies it in place.
std::vector<std::string> catalog_add_and_verify(Catalog &catalog,
                                                CatalogEntry entry);

} // namespace rank3kit
