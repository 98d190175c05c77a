#include "rank3kit/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "rank3kit/structure.hpp"

namespace rank3kit {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(int line, const std::string &msg) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

// Parses one generator line (cycle notation or `img:` form) into an image
// vector over 0..n-1.
std::vector<int> parse_perm_line(const std::string &line, int n,
                                 int line_no) {
  std::vector<int> img(n);
  std::vector<bool> used(n, false);
  if (line.rfind("img:", 0) == 0) {
    std::istringstream in(line.substr(4));
    for (int i = 0; i < n; ++i) {
      int v;
      if (!(in >> v)) parse_fail(line_no, "expected " + std::to_string(n) +
                                              " image points");
      if (v < 1 || v > n)
        parse_fail(line_no, "point " + std::to_string(v) + " out of range");
      if (used[v - 1])
        parse_fail(line_no, "repeated point " + std::to_string(v));
      used[v - 1] = true;
      img[i] = v - 1;
    }
    std::string rest;
    if (in >> rest) parse_fail(line_no, "trailing content `" + rest + "`");
    return img;
  }
  for (int i = 0; i < n; ++i) img[i] = i;
  size_t pos = 0;
  bool any_cycle = false;
  auto skip_space = [&] {
    while (pos < line.size() && std::isspace((unsigned char)line[pos])) ++pos;
  };
  skip_space();
  while (pos < line.size()) {
    if (line[pos] != '(')
      parse_fail(line_no, "expected `(` in cycle notation");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      size_t start = pos;
      while (pos < line.size() && std::isdigit((unsigned char)line[pos]))
        ++pos;
      if (start == pos) parse_fail(line_no, "expected a point");
      int v = std::stoi(line.substr(start, pos - start));
      if (v < 1 || v > n)
        parse_fail(line_no, "point " + std::to_string(v) + " out of range");
      if (used[v - 1])
        parse_fail(line_no, "repeated point " + std::to_string(v));
      used[v - 1] = true;
      cycle.push_back(v - 1);
      skip_space();
      if (pos < line.size() && line[pos] == ',') { ++pos; continue; }
      if (pos < line.size() && line[pos] == ')') { ++pos; break; }
      parse_fail(line_no, "expected `,` or `)` in cycle");
    }
    any_cycle = true;
    for (size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  if (!any_cycle) parse_fail(line_no, "unrecognised generator line");
  return img;
}

const char *socle_type_name(SocleType t) { return to_string(t); }

SocleType socle_type_from_name(const std::string &s) {
  if (s == "affine") return SocleType::affine;
  if (s == "almost-simple") return SocleType::almost_simple;
  if (s == "other") return SocleType::other;
  throw std::invalid_argument("unknown socle type `" + s + "`");
}

TheoremClass theorem_class_from_name(const std::string &s) {
  for (TheoremClass t : {TheoremClass::A, TheoremClass::B, TheoremClass::C,
                         TheoremClass::D, TheoremClass::not_applicable})
    if (s == to_string(t)) return t;
  throw std::invalid_argument("unknown theorem class `" + s + "`");
}

// Wraps object access so every key must be consumed exactly once; leftover
// keys are reported as unknown fields.
class StrictObject {
public:
  StrictObject(const ordered_json &j, std::string where)
      : j_(j), where_(std::move(where)) {
    if (!j.is_object())
      throw std::invalid_argument(where_ + ": expected a JSON object");
  }
  const ordered_json &at(const std::string &key) {
    auto it = j_.find(key);
    if (it == j_.end())
      throw std::invalid_argument(where_ + ": missing field `" + key + "`");
    seen_.push_back(key);
    return *it;
  }
  void finish() {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end())
        throw std::invalid_argument(where_ + ": unknown field `" + it.key() +
                                    "`");
  }

private:
  const ordered_json &j_;
  std::string where_;
  std::vector<std::string> seen_;
};

ordered_json claims_to_json(const CatalogClaims &c) {
  ordered_json j;
  j["order"] = c.order;
  j["rank"] = c.rank;
  j["subdegrees"] = c.subdegrees;
  j["block_size"] = c.block_size;
  j["block_count"] = c.block_count;
  j["semiprimitive"] = c.semiprimitive;
  j["innately_transitive"] = c.innately_transitive;
  j["theorem_class"] = to_string(c.theorem_class);
  return j;
}

CatalogClaims claims_from_json(const ordered_json &j) {
  StrictObject o(j, "claims");
  CatalogClaims c;
  c.order = o.at("order").get<unsigned long long>();
  c.rank = o.at("rank").get<long long>();
  c.subdegrees = o.at("subdegrees").get<std::vector<long long>>();
  c.block_size = o.at("block_size").get<int>();
  c.block_count = o.at("block_count").get<int>();
  c.semiprimitive = o.at("semiprimitive").get<bool>();
  c.innately_transitive = o.at("innately_transitive").get<bool>();
  c.theorem_class =
      theorem_class_from_name(o.at("theorem_class").get<std::string>());
  o.finish();
  return c;
}

} // namespace

PermGroup parse_group_file(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line[0] == '#') continue;
    if (degree < 0) {
      std::istringstream hdr(line);
      std::string keyword;
      int n = 0;
      std::string rest;
      if (!(hdr >> keyword >> n) || keyword != "degree" || n < 1 ||
          (hdr >> rest))
        parse_fail(line_no, "expected header `degree n`");
      degree = n;
      continue;
    }
    gens.emplace_back(parse_perm_line(line, degree, line_no));
  }
  if (degree < 0) throw std::invalid_argument("missing header `degree n`");
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  return PermGroup(degree, gens);
}

std::string emit_group_file(const PermGroup &g) {
  std::ostringstream out;
  out << "degree " << g.degree() << "\n";
  for (const Perm &p : g.generators()) {
    out << "img:";
    for (int i = 0; i < g.degree(); ++i) out << " " << p(i) + 1;
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file_atomic(const std::string &path, const std::string &content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed for " + path);
}

std::string input_digest(const std::string &text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
  return buf;
}

std::string report_to_json(const Rank3Report &r, const std::string &digest) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["input_digest"] = digest;
  j["degree"] = r.degree;
  j["order"] = r.order;
  j["rank"] = r.rank;
  j["subdegrees"] = r.subdegrees;
  ordered_json flags;
  flags["semiregular"] = r.flags.semiregular;
  flags["semiprimitive"] = r.flags.semiprimitive;
  flags["quasiprimitive"] = r.flags.quasiprimitive;
  flags["innately_transitive"] = r.flags.innately_transitive;
  flags["primitive"] = r.flags.primitive;
  j["flags"] = std::move(flags);
  j["imprimitive"] = r.imprimitive;
  j["unique_nontrivial_system"] = r.unique_nontrivial_system;
  j["block_size"] = r.block_size;
  j["block_count"] = r.block_count;
  j["kernel_order"] = r.kernel_order;
  j["kernel_semiregular"] = r.kernel_semiregular;
  j["kernel_regular"] = r.kernel_regular;
  j["k_pointwise_b_order"] = r.k_pointwise_b_order;
  j["k_pointwise_transitive_other_block"] =
      r.k_pointwise_transitive_other_block;
  j["block_group_type"] = socle_type_name(r.block_group_type);
  j["top_group_type"] = socle_type_name(r.top_group_type);
  j["block_group_order"] = r.block_group_order;
  j["top_group_order"] = r.top_group_order;
  j["block_socle_order"] = r.block_socle_order;
  j["top_socle_order"] = r.top_socle_order;
  j["l_prime"] = r.l_prime;
  j["l_order"] = r.l_order;
  j["centralizer_equals_l"] = r.centralizer_equals_l;
  j["theorem_class"] = to_string(r.theorem_class);
  ordered_json ev = ordered_json::array();
  for (const Evidence &e : r.evidence) {
    ordered_json je;
    je["clause"] = e.clause;
    je["value"] = e.value;
    ev.push_back(std::move(je));
  }
  j["evidence"] = std::move(ev);
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

Rank3Report report_from_json(const std::string &text,
                             std::string *digest_out) {
  ordered_json j = ordered_json::parse(text);
  StrictObject o(j, "report");
  if (o.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version");
  o.at("tool_version"); // recorded, not validated
  std::string digest = o.at("input_digest").get<std::string>();
  if (digest_out) *digest_out = digest;
  Rank3Report r;
  r.degree = o.at("degree").get<int>();
  r.order = o.at("order").get<unsigned long long>();
  r.rank = o.at("rank").get<long long>();
  r.subdegrees = o.at("subdegrees").get<std::vector<long long>>();
  {
    StrictObject f(o.at("flags"), "flags");
    r.flags.semiregular = f.at("semiregular").get<bool>();
    r.flags.semiprimitive = f.at("semiprimitive").get<bool>();
    r.flags.quasiprimitive = f.at("quasiprimitive").get<bool>();
    r.flags.innately_transitive = f.at("innately_transitive").get<bool>();
    r.flags.primitive = f.at("primitive").get<bool>();
    f.finish();
  }
  r.imprimitive = o.at("imprimitive").get<bool>();
  r.unique_nontrivial_system = o.at("unique_nontrivial_system").get<bool>();
  r.block_size = o.at("block_size").get<int>();
  r.block_count = o.at("block_count").get<int>();
  r.kernel_order = o.at("kernel_order").get<unsigned long long>();
  r.kernel_semiregular = o.at("kernel_semiregular").get<bool>();
  r.kernel_regular = o.at("kernel_regular").get<bool>();
  r.k_pointwise_b_order =
      o.at("k_pointwise_b_order").get<unsigned long long>();
  r.k_pointwise_transitive_other_block =
      o.at("k_pointwise_transitive_other_block").get<bool>();
  r.block_group_type =
      socle_type_from_name(o.at("block_group_type").get<std::string>());
  r.top_group_type =
      socle_type_from_name(o.at("top_group_type").get<std::string>());
  r.block_group_order = o.at("block_group_order").get<unsigned long long>();
  r.top_group_order = o.at("top_group_order").get<unsigned long long>();
  r.block_socle_order = o.at("block_socle_order").get<unsigned long long>();
  r.top_socle_order = o.at("top_socle_order").get<unsigned long long>();
  r.l_prime = o.at("l_prime").get<long long>();
  r.l_order = o.at("l_order").get<unsigned long long>();
  r.centralizer_equals_l = o.at("centralizer_equals_l").get<bool>();
  r.theorem_class =
      theorem_class_from_name(o.at("theorem_class").get<std::string>());
  for (const auto &je : o.at("evidence")) {
    StrictObject e(je, "evidence");
    Evidence ev;
    ev.clause = e.at("clause").get<std::string>();
    ev.value = e.at("value").get<bool>();
    e.finish();
    r.evidence.push_back(std::move(ev));
  }
  r.notes = o.at("notes").get<std::vector<std::string>>();
  o.finish();
  return r;
}

Catalog load_catalog(const std::string &path) {
  std::ifstream probe(path);
  if (!probe) return Catalog{};
  ordered_json j = ordered_json::parse(read_file(path));
  StrictObject o(j, "catalog");
  if (o.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported catalog schema_version");
  Catalog catalog;
  for (const auto &je : o.at("entries")) {
    StrictObject e(je, "catalog entry");
    CatalogEntry entry;
    entry.name = e.at("name").get<std::string>();
    entry.degree = e.at("degree").get<int>();
    entry.generators = e.at("generators").get<std::vector<std::string>>();
    entry.claims = claims_from_json(e.at("claims"));
    entry.provenance = e.at("provenance").get<std::string>();
    entry.verified = e.at("verified").get<bool>();
    entry.verified_at = e.at("verified_at").get<std::string>();
    entry.mismatches = e.at("mismatches").get<std::vector<std::string>>();
    e.finish();
    catalog.entries.push_back(std::move(entry));
  }
  o.finish();
  return catalog;
}

void save_catalog(const Catalog &catalog, const std::string &path) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  ordered_json entries = ordered_json::array();
  for (const CatalogEntry &entry : catalog.entries) {
    ordered_json e;
    e["name"] = entry.name;
    e["degree"] = entry.degree;
    e["generators"] = entry.generators;
    e["claims"] = claims_to_json(entry.claims);
    e["provenance"] = entry.provenance;
    e["verified"] = entry.verified;
    e["verified_at"] = entry.verified_at;
    e["mismatches"] = entry.mismatches;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  write_file_atomic(path, j.dump(2) + "\n");
}

std::vector<std::string> catalog_verify_entry(CatalogEntry &entry) {
  std::ostringstream grp;
  grp << "degree " << entry.degree << "\n";
  for (const std::string &g : entry.generators) grp << g << "\n";
  PermGroup group = parse_group_file(grp.str());
  Rank3Report r = analyze(group);

  std::vector<std::string> mismatches;
  auto check = [&](const std::string &field, auto claimed, auto computed) {
    if (!(claimed == computed)) {
      std::ostringstream msg;
      msg << field << ": claimed " << claimed << ", computed " << computed;
      mismatches.push_back(msg.str());
    }
  };
  check("order", entry.claims.order, r.order);
  check("rank", entry.claims.rank, r.rank);
  {
    auto fmt = [](const std::vector<long long> &v) {
      std::ostringstream s;
      s << "{";
      for (size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
      s << "}";
      return s.str();
    };
    if (entry.claims.subdegrees != r.subdegrees)
      mismatches.push_back("subdegrees: claimed " +
                           fmt(entry.claims.subdegrees) + ", computed " +
                           fmt(r.subdegrees));
  }
  check("block_size", entry.claims.block_size, r.block_size);
  check("block_count", entry.claims.block_count, r.block_count);
  check("semiprimitive", entry.claims.semiprimitive, r.flags.semiprimitive);
  check("innately_transitive", entry.claims.innately_transitive,
        r.flags.innately_transitive);
  if (entry.claims.theorem_class != r.theorem_class)
    mismatches.push_back(std::string("theorem_class: claimed ") +
                         to_string(entry.claims.theorem_class) +
                         ", computed " + to_string(r.theorem_class));

  entry.mismatches = mismatches;
  entry.verified = mismatches.empty();
  char buf[32];
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  entry.verified_at = buf;
  return mismatches;
}

std::vector<std::string> catalog_add_and_verify(Catalog &catalog,
                                                CatalogEntry entry) {
  std::vector<std::string> mismatches = catalog_verify_entry(entry);
  for (CatalogEntry &existing : catalog.entries)
    if (existing.name == entry.name) {
      existing = std::move(entry);
      return mismatches;
    }
  catalog.entries.push_back(std::move(entry));
  return mismatches;
}

} // namespace rank3kit
