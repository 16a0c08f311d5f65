#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "blockomega/field.hpp"
#include "blockomega/matrix.hpp"
#include "blockomega/poly.hpp"

namespace blockomega {

// Independent, reproducible seed for sub-stream `stream` of `root` (splitmix64).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

struct Term {
  std::uint32_t index;
  Scalar coeff;
};

// A finite-dimensional associative unital algebra over GF(2^m), given by
// sparse structure constants: b_i b_j = sum over terms (k, c) of c b_k.
// Elements are coordinate vectors in this basis.
class Algebra {
 public:
  Algebra(FieldPtr field, std::size_t dim, std::vector<std::vector<Term>> products, Vector unit,
          bool commutative);
  // Same, from (i * dim + j, term) pairs in any order.
  static Algebra from_triples(FieldPtr field, std::size_t dim,
                              std::vector<std::pair<std::uint64_t, Term>> triples, Vector unit,
                              bool commutative);

  // Algebra spanned by `basis`, whose flattened entries form a reduced echelon
  // system with the given pivot positions. Products must stay in the span.
  static Algebra from_matrices(FieldPtr field, const std::vector<Matrix>& basis,
                               const std::vector<std::size_t>& pivots);

  std::size_t dimension() const noexcept { return dim_; }
  const FieldCtx& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Vector& unit() const noexcept { return unit_; }
  bool is_commutative() const noexcept { return commutative_; }
  std::size_t structure_terms() const noexcept { return terms_.size(); }

  Vector basis_vector(std::size_t i) const;
  Vector zero() const { return Vector(dim_, 0); }
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector add(Vector a, const Vector& b) const;
  Vector scale(Scalar s, Vector a) const;

  // Polynomial in x with x^0 := one.
  Vector evaluate(const Poly& p, const Vector& x, const Vector& one) const;
  Vector power(const Vector& x, std::uint64_t e, const Vector& one) const;
  // Minimal polynomial of x inside a subalgebra with identity `one`.
  Poly min_poly(const Vector& x, const Vector& one) const;
  bool is_nilpotent(const Vector& x) const;

  // Echelon basis of e * span(spanning) * f; spanning defaults to the full basis.
  std::vector<Vector> sandwich_basis(const Vector& e, const Vector& f,
                                     const std::vector<Vector>* spanning = nullptr) const;

 private:
  FieldPtr field_;
  std::size_t dim_;
  Vector unit_;
  bool commutative_;
  Algebra(FieldPtr field, std::size_t dim, Vector unit, bool commutative);
  std::vector<std::uint32_t> offsets_;  // dim*dim + 1
  std::vector<Term> terms_;
};

struct SplitOptions {
  std::uint64_t seed = 0;
  // Random draws per idempotent before the deterministic fallback runs.
  int random_draws = 64;
  // Largest GF(2)-dimension (dim * m) for which the radical is computed.
  std::size_t radical_cap = 32;
};

// A complete set of primitive orthogonal idempotents summing to `e`.
// Commutative algebras throw SplittingFieldTooSmall when an element has a
// nonlinear irreducible factor in its minimal polynomial. Throws
// DecompositionFailed when no strategy can split a non-local corner.
std::vector<Vector> primitive_idempotents(const Algebra& a, const Vector& e,
                                          const SplitOptions& options = {});

// Splits e once (nontrivially) if possible; nullopt when eAe is local.
std::optional<std::vector<Vector>> split_idempotent(const Algebra& a, const Vector& e,
                                                    const std::vector<Vector>& corner,
                                                    const SplitOptions& options);

// True iff the corner algebra with basis `corner` and identity e is local
// with residue field GF(2^m): every element is a scalar plus a nilpotent.
bool is_local_corner(const Algebra& a, const Vector& e, const std::vector<Vector>& corner);

// Orthogonal idempotents from the primary decomposition of x's minimal
// polynomial inside eAe; a single entry e when the polynomial is primary.
std::vector<Vector> primary_idempotents(const Algebra& a, const Vector& x, const Vector& e,
                                        const Factorization& fac);

// Jacobson radical of the subalgebra with basis `basis` (closed under
// products, containing its identity), as an echelon basis. Works over GF(2)
// by restriction of scalars with iterated trace forms; throws CapExceeded
// when dim * m exceeds `cap`.
std::vector<Vector> radical(const Algebra& a, const std::vector<Vector>& basis, std::size_t cap = 32);

// For primitive idempotents e, f: true iff eA ≅ fA, i.e. some element of
// eAf * fAe is invertible in eAe.
bool idempotents_equivalent(const Algebra& a, const Vector& e, const Vector& f);

}  // namespace blockomega
