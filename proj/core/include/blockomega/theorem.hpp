#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blockomega/blocks.hpp"
#include "blockomega/field.hpp"
#include "blockomega/gmodule.hpp"
#include "blockomega/permgroup.hpp"

namespace blockomega {

struct VerificationConfig {
  std::uint64_t seed = 0;
  std::size_t module_cap = kDefaultModuleCap;
  // Must be a multiple of the splitting degree when set.
  std::optional<unsigned> field_degree;
  bool per_class = true;
  // Generic-ring duality cross-check for components up to this dimension.
  std::size_t dual_cross_check_dim = 24;
};

// GF(2^m) for the group: the override if given, else the splitting degree.
// Throws DegreeOutOfRange if the override does not contain the splitting field.
FieldPtr choose_field(const GroupData& group, const std::optional<unsigned>& override_degree);

struct ComponentRecord {
  std::size_t dimension = 0;
  std::size_t multiplicity = 0;
  std::optional<std::size_t> block;  // index into the block list
  bool projective = false;
  std::optional<bool> self_dual;     // evaluated for projective components
  bool irreducible_certified = false;  // projective, indecomposable, defect-zero block
};

struct BlockRecord {
  BlockInfo info;
  std::size_t omega_dimension = 0;  // dim e_B kOmega
  std::vector<std::size_t> omega_components;  // indices into OmegaRecord::components
  std::optional<std::size_t> end_dimension;   // dim End(e_B kOmega), real defect-zero blocks
};

struct ClassRecord {
  std::size_t class_index = 0;
  std::string representative;
  std::size_t class_size = 0;
  std::uint64_t centralizer_order = 0;
  std::size_t module_dimension = 0;
  std::vector<ComponentRecord> projective_components;
  bool evaluated = false;
};

struct OmegaRecord {
  std::size_t dimension = 0;
  std::vector<ComponentRecord> components;
  std::vector<ClassRecord> classes;
  std::size_t real_defect_zero_blocks = 0;
  std::size_t projective_components = 0;  // counted with multiplicity
};

struct Skipped {
  std::string check;
  std::string reason;
};

struct Verdicts {
  std::optional<bool> theorem_i;
  std::optional<bool> theorem_ii;
  std::optional<bool> bijection;
  std::optional<bool> counts;
};

struct VerificationReport {
  std::string group;
  std::size_t order = 0;
  unsigned field_degree = 0;
  std::vector<BlockRecord> blocks;
  OmegaRecord omega;
  Verdicts verdicts;
  std::vector<Skipped> skipped;
  std::vector<std::string> failures;
  std::map<std::string, double> timing_ms;

  // Every evaluated verdict holds and nothing failed.
  bool pass() const;
};

// Blocks, kOmega and the checks tying real defect-zero blocks to projective
// components of kOmega. Throws CapExceeded when |Omega| exceeds the module cap.
VerificationReport verify_bijection(const GroupData& group, const std::string& name,
                                    const VerificationConfig& config = {});

// Adds the per-involution-class records and the theorem_i / theorem_ii verdicts.
void verify_per_class(const GroupData& group, VerificationReport& report, const VerificationConfig& config = {});

// verify_bijection followed by verify_per_class when enabled.
VerificationReport verify_group(const GroupData& group, const std::string& name,
                                const VerificationConfig& config = {});

struct EmbeddedReport {
  std::string group;
  std::size_t order = 0;
  std::size_t subgroup_order = 0;
  unsigned field_degree = 0;
  std::size_t module_dimension = 0;  // [G : H]
  std::size_t trivial_summands = 0;
  std::vector<ComponentRecord> components;  // every summand class, trivial included
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

// k[G/H] = k + sum of pairwise non-isomorphic self-dual projective simples.
// Throws NotStronglyEmbedded first if H is not strongly embedded.
EmbeddedReport verify_strongly_embedded(const GroupData& group, const SubgroupData& subgroup,
                                        const std::string& name, const VerificationConfig& config = {});

// Deterministic JSON; timing_ms is null unless `with_timing`.
std::string to_json(const VerificationReport& report, bool with_timing = false);
std::string to_json(const EmbeddedReport& report);

}  // namespace blockomega
