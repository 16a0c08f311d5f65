#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blockomega/algebra.hpp"
#include "blockomega/field.hpp"
#include "blockomega/matrix.hpp"
#include "blockomega/permgroup.hpp"

namespace blockomega {

inline constexpr std::size_t kDefaultModuleCap = 2000;

// Location of a module inside a permutation module: the module is the row
// space of `basis` (reduced echelon form, pivots listed) in k[points].
struct PermEmbedding {
  std::shared_ptr<const PermAction> action;
  Matrix basis;
  std::vector<std::size_t> pivots;
};

// A right kG-module given by one matrix per group generator, acting on row
// vectors: v -> v * action(g).
class GModule {
 public:
  GModule() = default;
  GModule(FieldPtr field, std::size_t dimension, std::vector<Matrix> generator_actions,
          std::string label = {});

  const FieldCtx& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t generator_count() const noexcept { return actions_.size(); }
  const Matrix& action(std::size_t generator) const { return actions_.at(generator); }
  const std::vector<Matrix>& actions() const noexcept { return actions_; }

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  const std::optional<PermEmbedding>& embedding() const noexcept { return embedding_; }
  void set_embedding(PermEmbedding e) { embedding_ = std::move(e); }
  // True for k[points] itself (embedding with the identity basis).
  bool is_full_permutation_module() const noexcept;

 private:
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> actions_;
  std::string label_;
  std::optional<PermEmbedding> embedding_;
};

// Permutation module k[points] with 0/1 generator matrices.
GModule perm_module(const GroupData& group, const PermAction& action, FieldPtr field,
                    std::string label = {});
GModule trivial_module(const GroupData& group, FieldPtr field);
GModule direct_sum(const GModule& a, const GModule& b);
GModule dual(const GModule& m);

// rho(x) for a group element x (by its word in the generators).
Matrix element_action(const GroupData& group, const GModule& m, std::size_t element);
// sum over all x of c[class(x)] rho(x).
Matrix class_function_action(const GroupData& group, const GModule& m, const Vector& class_coefficients);

// The submodule spanned by the rows of `rows`, with restricted actions.
// Throws InvalidAction if the span is not invariant.
GModule submodule(const GModule& m, const Matrix& rows, std::string label = {});

// Basis (reduced echelon in flattened coordinates) of the maps X with
// rho_M(g) X = X rho_N(g) for every generator g.
std::vector<Matrix> hom_space(const GModule& m, const GModule& n);

// End_kG(M) as an abstract algebra together with a way back to matrices.
// Permutation modules use the orbital basis (one basis element per orbit of
// G on point pairs); other modules use a hom-space basis.
class EndomorphismRing {
 public:
  static EndomorphismRing generic(const GModule& m);
  static EndomorphismRing orbital(const PermAction& action, FieldPtr field);

  const Algebra& algebra() const noexcept { return *algebra_; }
  std::size_t dimension() const noexcept { return algebra_->dimension(); }
  std::size_t module_dimension() const noexcept { return module_dim_; }
  bool is_orbital() const noexcept { return orbital_; }

  Matrix to_matrix(const Vector& c) const;
  // Coordinates of an endomorphism matrix; throws InvalidAction if it is not equivariant.
  Vector from_matrix(const Matrix& x) const;

  // Idempotents to start splitting from: one per G-orbit for permutation
  // modules, otherwise the identity.
  std::vector<Vector> initial_idempotents() const;

  // Orbital rings only: the transpose, i.e. the adjoint for the standard form.
  Vector transpose(const Vector& c) const;
  std::uint32_t orbital_of(std::size_t p, std::size_t q) const { return pair_orbital_[p * module_dim_ + q]; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& representatives() const noexcept {
    return reps_;
  }

 private:
  std::shared_ptr<const Algebra> algebra_;
  std::size_t module_dim_ = 0;
  bool orbital_ = false;
  // generic
  std::vector<Matrix> basis_;
  std::vector<std::size_t> pivots_;
  // orbital
  std::vector<std::uint32_t> pair_orbital_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> reps_;
  std::vector<std::uint32_t> transpose_;
  std::vector<std::uint32_t> diagonal_;
};

// Coordinates in `ring` of sum_x c[class(x)] rho(x) on a full permutation module.
Vector class_function_in_ring(const GroupData& group, const EndomorphismRing& ring, const PermAction& action,
                              const Vector& class_coefficients);

// Fitting-style split of M along the primary decomposition of an
// endomorphism f; returns {M} when the minimal polynomial is primary.
std::vector<GModule> split_by_element(const GModule& m, const Matrix& f, std::uint64_t seed = 0);

struct DecomposeOptions {
  std::uint64_t seed = 0;
  std::size_t module_cap = kDefaultModuleCap;
  int random_draws = 64;
};

struct Summand {
  GModule module;
  std::size_t multiplicity = 0;
  std::vector<Vector> idempotents;  // one primitive idempotent per copy, in ring coordinates
};

struct Decomposition {
  std::shared_ptr<const EndomorphismRing> ring;
  std::vector<Summand> summands;  // isomorphism classes, by increasing dimension
  Matrix change_of_basis;         // rows: bases of every copy, concatenated
};

// Krull-Schmidt decomposition into indecomposables, isomorphic copies grouped.
// Throws CapExceeded above the module cap.
Decomposition decompose(const GModule& m, const DecomposeOptions& options = {});

// Whether two summands of one decomposition are isomorphic, decided inside the ring.
bool summands_isomorphic(const Decomposition& d, const Vector& e, const Vector& f);
// For permutation modules: whether the summand cut out by e is self-dual.
bool summand_self_dual(const Decomposition& d, const Vector& e);

bool is_isomorphic(const GModule& a, const GModule& b, std::uint64_t seed = 0);

// Higman: the system sum_{p in P} rho(p)^-1 X rho(p) = I is solvable.
bool higman_projective(const GroupData& group, const SubgroupData& sylow, const GModule& m);
// rank(sum_{p in P} rho(p)) * |P| = dim M, i.e. M is free over the Sylow subgroup.
bool norm_rank_projective(const GroupData& group, const SubgroupData& sylow, const GModule& m);
// Higman for dimension <= 24, the norm criterion above that.
bool is_projective(const GroupData& group, const SubgroupData& sylow, const GModule& m);

std::vector<std::pair<GModule, std::size_t>> projective_components(const GroupData& group,
                                                                   const SubgroupData& sylow,
                                                                   const GModule& m,
                                                                   const DecomposeOptions& options = {});

}  // namespace blockomega
