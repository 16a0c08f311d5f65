#include "blockomega/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blockomega/errors.hpp"

namespace blockomega {

std::uint8_t CenterData::constant(std::size_t i, std::size_t j, std::size_t l) const {
  const Vector p = algebra->multiply(algebra->basis_vector(i), algebra->basis_vector(j));
  return static_cast<std::uint8_t>(p[l]);
}

Matrix CenterData::regular_matrix(std::size_t i) const {
  Matrix m(class_count, class_count);
  const Vector ci = algebra->basis_vector(i);
  for (std::size_t j = 0; j < class_count; ++j) {
    const Vector p = algebra->multiply(algebra->basis_vector(j), ci);
    std::copy(p.begin(), p.end(), m.row(j).begin());
  }
  return m;
}

CenterData center_structure(const GroupData& group, FieldPtr field) {
  CenterData c;
  c.field = field;
  const auto& classes = group.classes();
  const std::size_t t = classes.size();
  c.class_count = t;
  for (const auto& cls : classes) {
    c.class_sizes.push_back(cls.members.size());
    c.inverse_class.push_back(cls.inverse_class);
  }
  // a[i][j][l] = #{x in C_i : x^-1 rep_l in C_j} mod 2.
  std::vector<std::uint64_t> keys;
  keys.reserve(group.order() * t);
  for (std::size_t l = 0; l < t; ++l) {
    const std::size_t rep = classes[l].representative_index;
    for (std::size_t x = 0; x < group.order(); ++x) {
      const std::size_t y = group.multiply(group.inverse(x), rep);
      keys.push_back((std::uint64_t{group.class_of(x)} * t + group.class_of(y)) * t + l);
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<std::pair<std::uint64_t, Term>> triples;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    if ((j - i) % 2 == 1) {
      triples.push_back({keys[i] / t, Term{static_cast<std::uint32_t>(keys[i] % t), 1}});
    }
    i = j;
  }
  Vector unit(t, 0);
  unit[0] = 1;
  c.algebra = std::make_shared<const Algebra>(
      Algebra::from_triples(std::move(field), t, std::move(triples), std::move(unit), true));
  return c;
}

bool is_principal(const BlockIdempotent& e, const CenterData& center) {
  Scalar aug = 0;
  for (std::size_t i = 0; i < center.class_count; ++i) {
    if (center.class_sizes[i] % 2 == 1) aug ^= e.coefficients[i];
  }
  return aug == 1;
}

std::vector<BlockIdempotent> block_idempotents(const CenterData& center, std::uint64_t seed) {
  SplitOptions options;
  options.seed = seed;
  const auto& alg = *center.algebra;
  std::vector<BlockIdempotent> out;
  for (auto& v : primitive_idempotents(alg, alg.unit(), options)) out.push_back({std::move(v)});
  std::sort(out.begin(), out.end(), [&](const BlockIdempotent& a, const BlockIdempotent& b) {
    const bool pa = is_principal(a, center);
    const bool pb = is_principal(b, center);
    if (pa != pb) return pa;
    return a.coefficients < b.coefficients;
  });
  return out;
}

BlockIdempotent opposite(const BlockIdempotent& e, const CenterData& center) {
  BlockIdempotent o{Vector(e.coefficients.size(), 0)};
  for (std::size_t i = 0; i < center.class_count; ++i) o.coefficients[center.inverse_class[i]] = e.coefficients[i];
  return o;
}

bool is_real(const BlockIdempotent& e, const CenterData& center) { return opposite(e, center) == e; }

std::size_t k_of_block(const CenterData& center, const BlockIdempotent& e) {
  const auto& alg = *center.algebra;
  Matrix m(center.class_count, center.class_count);
  for (std::size_t j = 0; j < center.class_count; ++j) {
    const Vector p = alg.multiply(e.coefficients, alg.basis_vector(j));
    std::copy(p.begin(), p.end(), m.row(j).begin());
  }
  return rank(alg.field(), m);
}

bool is_defect_zero(const BlockInfo& info) { return info.kB == 1; }

std::vector<BlockInfo> classify_blocks(const CenterData& center, const std::vector<BlockIdempotent>& blocks) {
  std::vector<BlockInfo> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    BlockInfo info;
    info.index = b;
    info.idempotent = blocks[b];
    const auto o = opposite(blocks[b], center);
    const auto it = std::find(blocks.begin(), blocks.end(), o);
    if (it == blocks.end()) throw Inconsistent("opposite of a block idempotent is not a block idempotent");
    info.opposite_index = static_cast<std::size_t>(it - blocks.begin());
    info.is_real = info.opposite_index == b;
    info.kB = k_of_block(center, blocks[b]);
    info.is_defect_zero = is_defect_zero(info);
    out.push_back(std::move(info));
  }
  return out;
}

GModule block_component(const BlockIdempotent& e, const GModule& m, const GroupData& group) {
  const Matrix op = class_function_action(group, m, e.coefficients);
  return submodule(m, op, "e_B." + m.label());
}

namespace {

GModule regular_module(const GroupData& group, const FieldPtr& field) {
  const auto trivial = make_subgroup(group, {0});
  return perm_module(group, coset_action(group, trivial), field, "kG");
}

}  // namespace

std::size_t regular_block_dimension(const BlockIdempotent& e, const GroupData& group, const FieldPtr& field) {
  if (group.order() > kSimplicityGroupCap) {
    throw CapExceeded("regular module of order " + std::to_string(group.order()) + " exceeds cap");
  }
  const auto reg = regular_module(group, field);
  return rank(*field, class_function_action(group, reg, e.coefficients));
}

SimplicityReport validate_simplicity(const BlockIdempotent& e, const GroupData& group, const FieldPtr& field,
                                     std::uint64_t seed, std::size_t cap) {
  if (group.order() > cap) {
    throw CapExceeded("simplicity check needs |G| <= " + std::to_string(cap));
  }
  SimplicityReport rep;
  const auto& f = *field;
  const auto reg = regular_module(group, field);
  const auto ring = EndomorphismRing::orbital(*reg.embedding()->action, field);
  const auto& alg = ring.algebra();
  const Vector eb = class_function_in_ring(group, ring, *reg.embedding()->action, e.coefficients);

  // e_B is central, so the corner e_B E e_B is spanned by e_B b_i.
  EchelonBasis corner_basis(f, alg.dimension());
  for (std::size_t i = 0; i < alg.dimension(); ++i) corner_basis.insert(alg.multiply(eb, alg.basis_vector(i)));
  std::vector<Vector> corner = corner_basis.rows();
  rep.block_dimension = corner.size();
  const auto s = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(rep.block_dimension))));
  rep.perfect_square = s * s == rep.block_dimension;
  if (!rep.perfect_square) return rep;

  // Follow the smallest piece down to a primitive idempotent.
  Vector idem = eb;
  SplitOptions options;
  options.seed = seed;
  for (std::uint64_t round = 0;; ++round) {
    options.seed = derive_seed(seed, round);
    auto parts = split_idempotent(alg, idem, corner, options);
    if (!parts) break;
    std::vector<Vector> best_corner;
    Vector best;
    for (auto& p : *parts) {
      auto c = alg.sandwich_basis(p, p, &corner);
      if (best.empty() || c.size() < best_corner.size()) {
        best_corner = std::move(c);
        best = std::move(p);
      }
    }
    idem = std::move(best);
    corner = std::move(best_corner);
  }
  const GModule simple = submodule(reg, ring.to_matrix(idem), "simple");
  rep.simple_dimension = simple.dimension();
  rep.copies = rep.simple_dimension == 0 ? 0 : rep.block_dimension / rep.simple_dimension;
  if (rep.simple_dimension != s) return rep;

  // Absolute irreducibility: the images of G span all s x s matrices.
  EchelonBasis span(f, s * s);
  std::vector<Matrix> rho(group.order());
  rho[0] = Matrix::identity(s);
  span.insert(rho[0].flat());
  for (std::size_t x = 1; x < group.order() && span.size() < s * s; ++x) {
    rho[x] = multiply(f, rho[group.parent(x)], simple.action(group.parent_generator(x)));
    span.insert(rho[x].flat());
  }
  rep.absolutely_irreducible = span.size() == s * s;
  rep.is_simple = rep.absolutely_irreducible && rep.copies == s;
  return rep;
}

}  // namespace blockomega
