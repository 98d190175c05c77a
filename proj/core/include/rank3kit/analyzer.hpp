#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rank3kit/block_system.hpp"
#include "rank3kit/perm_group.hpp"
#include "rank3kit/structure.hpp"

namespace rank3kit {

enum class TheoremClass { A, B, C, D, not_applicable };

const char *to_string(TheoremClass t);

/// One evaluated clause of the classification, kept even for the classes
/// that were not selected so overlaps stay visible.
struct Evidence {
  std::string clause;
  bool value = false;
};

/// Full imprimitivity analysis of a transitive group.  Block-related
/// fields are meaningful only when rank == 3 and imprimitive is set.
struct Rank3Report {
  int degree = 0;
  unsigned long long order = 0;
  long long rank = 0;
  std::vector<long long> subdegrees;
  StructureFlags flags;

  bool imprimitive = false;
  bool unique_nontrivial_system = false;
  int block_size = 0;
  int block_count = 0;

  unsigned long long kernel_order = 0;
  bool kernel_semiregular = false;
  bool kernel_regular = false;
  unsigned long long k_pointwise_b_order = 0;
  bool k_pointwise_transitive_other_block = false;

  SocleType block_group_type = SocleType::other; // G_B^B
  SocleType top_group_type = SocleType::other;   // G on the blocks
  unsigned long long block_group_order = 0;
  unsigned long long top_group_order = 0;
  unsigned long long block_socle_order = 0;
  unsigned long long top_socle_order = 0;

  long long l_prime = 0;
  unsigned long long l_order = 0;
  bool centralizer_equals_l = false;

  TheoremClass theorem_class = TheoremClass::not_applicable;
  std::vector<Evidence> evidence;
  std::vector<std::string> notes;
};

/// The analysis pipeline: rank and subdegrees, structure flags, and (for
/// rank-3 imprimitive inputs) the block system of Lemma 2.2, the kernel K,
/// both induced actions with socle types, K_(B) behaviour, L = O_p(K) for
/// the affine prime p, the C_G(L) = L test, and the class-(A)-(D) verdict.
/// Uniqueness of the nontrivial block system is asserted (std::logic_error)
/// when both induced actions are 2-transitive.
Rank3Report analyze(const PermGroup &g);

/// The block system the analysis used (rank-3 imprimitive groups only).
BlockSystem analysis_block_system(const PermGroup &g);

/// Checks, for a rank-3 imprimitive group: (i) the two-block stabilizer
/// G_{B,B'} is transitive on B x B'; (ii) a point stabilizer is transitive
/// on the remaining blocks; and |G_{B,B'} : G_{beta,beta'}| = |B|^2.
/// Throws std::invalid_argument unless rank 3 and imprimitive.
bool lemma_2_3_check(const Rank3Report &report, const PermGroup &g);

/// True iff K_(B) is transitive on some other block (for a transitive
/// imprimitive group).  When true, the rank-3 conclusion is re-verified
/// and a violation throws std::logic_error.
bool corollary_2_4_check(const PermGroup &g);

struct ClassifyResult {
  TheoremClass tag = TheoremClass::not_applicable;
  std::vector<Evidence> evidence;
  std::vector<std::string> notes;
};

/// Classification with decision order (C), (A), (B), (D).  Inputs outside
/// the hypothesis (rank 3, imprimitive, affine block action) yield
/// not_applicable with an explanatory note.
ClassifyResult classify_theorem_1_2(const PermGroup &g);

} // namespace rank3kit
