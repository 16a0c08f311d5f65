#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "blockomega/algebra.hpp"
#include "blockomega/gmodule.hpp"
#include "blockomega/permgroup.hpp"

namespace blockomega {

// Z(kG) in the class-sum basis.
struct CenterData {
  FieldPtr field;
  std::size_t class_count = 0;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> inverse_class;
  // Class-sum products: Ĉ_i Ĉ_j = sum_l a[i][j][l] Ĉ_l with a in {0, 1}.
  std::shared_ptr<const Algebra> algebra;

  std::uint8_t constant(std::size_t i, std::size_t j, std::size_t l) const;
  // Matrix of multiplication by Ĉ_i on the class-sum basis (row convention).
  Matrix regular_matrix(std::size_t i) const;
};

CenterData center_structure(const GroupData& group, FieldPtr field);

// e_B = sum_i coefficients[i] Ĉ_i.
struct BlockIdempotent {
  Vector coefficients;
  friend bool operator==(const BlockIdempotent&, const BlockIdempotent&) = default;
};

// Central primitive idempotents, principal block first and the rest in a
// seed-independent order.
std::vector<BlockIdempotent> block_idempotents(const CenterData& center, std::uint64_t seed = 0);

// Image under the anti-automorphism g -> g^-1.
BlockIdempotent opposite(const BlockIdempotent& e, const CenterData& center);
bool is_real(const BlockIdempotent& e, const CenterData& center);
// dim e_B Z(kG), the number of ordinary characters in the block.
std::size_t k_of_block(const CenterData& center, const BlockIdempotent& e);
bool is_principal(const BlockIdempotent& e, const CenterData& center);

struct BlockInfo {
  std::size_t index = 0;
  BlockIdempotent idempotent;
  bool is_real = false;
  std::size_t opposite_index = 0;
  std::size_t kB = 0;
  bool is_defect_zero = false;
  std::optional<std::size_t> simple_dimension;
};

bool is_defect_zero(const BlockInfo& info);

// Realness, k(B) and defect-zero flags for every block.
std::vector<BlockInfo> classify_blocks(const CenterData& center, const std::vector<BlockIdempotent>& blocks);

// e_B M with the restricted action.
GModule block_component(const BlockIdempotent& e, const GModule& m, const GroupData& group);

// dim e_B kG, by rank on the regular module.
std::size_t regular_block_dimension(const BlockIdempotent& e, const GroupData& group, const FieldPtr& field);

struct SimplicityReport {
  std::size_t block_dimension = 0;  // dim e_B kG
  bool perfect_square = false;
  std::size_t simple_dimension = 0;
  std::size_t copies = 0;
  bool absolutely_irreducible = false;
  bool is_simple = false;
};

inline constexpr std::size_t kSimplicityGroupCap = 2500;

// Checks directly that e_B kG is a full matrix algebra: dim e_B kG = s^2 and a
// primitive idempotent cuts out an s-dimensional absolutely irreducible
// module. Throws CapExceeded above the group cap.
SimplicityReport validate_simplicity(const BlockIdempotent& e, const GroupData& group, const FieldPtr& field,
                                     std::uint64_t seed = 0, std::size_t cap = kSimplicityGroupCap);

}  // namespace blockomega
