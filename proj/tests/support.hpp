#pragma once

// Brute-force helpers shared by the test binaries. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "blockomega/catalog.hpp"
#include "blockomega/field.hpp"
#include "blockomega/gmodule.hpp"
#include "blockomega/matrix.hpp"
#include "blockomega/permgroup.hpp"

namespace testsupport {

using namespace blockomega;

inline GroupData group(const std::string& name) {
  const auto spec = catalog_group(name);
  return enumerate_group(spec.degree, spec.generators);
}

inline const std::vector<std::string>& small_catalog() {
  static const std::vector<std::string> names{"C1", "C2", "C3", "C6", "S3", "S4", "A4", "D8", "D10", "D12", "Q8"};
  return names;
}

inline const std::vector<std::string>& full_catalog() {
  static const std::vector<std::string> names{"C1", "C2", "C3", "C6", "S3", "S4", "S5", "S6",
                                              "S7", "A4", "A5", "A6", "D8", "D10", "D12", "Q8"};
  return names;
}

// Carry-less product reduced modulo `modulus`, bit by bit.
inline std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, unsigned m) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < m; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  for (int i = 2 * static_cast<int>(m) - 2; i >= static_cast<int>(m); --i) {
    if ((r >> i) & 1) r ^= modulus << (i - m);
  }
  return r;
}

// Remainder of GF(2) polynomials encoded as integers.
inline std::uint64_t gf2_rem(std::uint64_t a, std::uint64_t b) {
  const int db = 63 - __builtin_clzll(b);
  while (a != 0 && 63 - __builtin_clzll(a) >= db) a ^= b << ((63 - __builtin_clzll(a)) - db);
  return a;
}

inline bool gf2_irreducible_by_trial(std::uint64_t p) {
  const int d = 63 - __builtin_clzll(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; q < (std::uint64_t{1} << (d / 2 + 1)); ++q) {
    const int dq = 63 - __builtin_clzll(q);
    if (dq >= 1 && dq <= d / 2 && gf2_rem(p, q) == 0) return false;
  }
  return true;
}

inline Matrix random_matrix(const FieldCtx& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix a(r, c);
  for (auto& x : a.flat()) x = static_cast<Scalar>(rng() & f.mask());
  return a;
}

// Permutation (as images) of every element: element index -> images.
inline std::vector<std::vector<std::uint32_t>> all_elements(const GroupData& g) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < g.order(); ++i) out.emplace_back(g.images(i).begin(), g.images(i).end());
  return out;
}

inline std::size_t slow_product(const GroupData& g, std::size_t a, std::size_t b) {
  std::vector<std::uint32_t> img(g.degree());
  const auto ia = g.images(a);
  const auto ib = g.images(b);
  for (std::size_t i = 0; i < g.degree(); ++i) img[i] = ib[ia[i]];
  return *g.find(img);
}

// Conjugacy classes by brute force, as sorted member lists sorted by first member.
inline std::vector<std::vector<std::size_t>> slow_classes(const GroupData& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<std::size_t> cls;
    for (std::size_t y = 0; y < g.order(); ++y) {
      // y^-1 x y
      std::size_t yinv = 0;
      for (std::size_t z = 0; z < g.order(); ++z) {
        if (slow_product(g, y, z) == 0) yinv = z;
      }
      cls.insert(slow_product(g, slow_product(g, yinv, x), y));
    }
    for (auto c : cls) seen[c] = 1;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

// Matrix of a module element action, multiplied out along the word.
inline Matrix slow_action(const GroupData& g, const GModule& m, std::size_t x) {
  Matrix r = Matrix::identity(m.dimension());
  for (auto gen : g.word(x)) r = multiply(m.field(), r, m.action(gen));
  return r;
}

// Basis of {X : rho_M(g) X = X rho_N(g) for all generators} from the raw
// linear system in the entries of X.
inline std::vector<Matrix> slow_hom(const GModule& m, const GModule& n) {
  const auto& f = m.field();
  const std::size_t a = m.dimension();
  const std::size_t b = n.dimension();
  const std::size_t unknowns = a * b;
  Matrix eq(m.generator_count() * unknowns, unknowns);
  for (std::size_t g = 0; g < m.generator_count(); ++g) {
    const Matrix& rm = m.action(g);
    const Matrix& rn = n.action(g);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        const std::size_t row = g * unknowns + i * b + j;
        // (rho_M X)_{ij} = sum_k rm(i,k) X(k,j)
        for (std::size_t k = 0; k < a; ++k) eq(row, k * b + j) ^= rm(i, k);
        // (X rho_N)_{ij} = sum_k X(i,k) rn(k,j)
        for (std::size_t k = 0; k < b; ++k) eq(row, i * b + k) ^= rn(k, j);
      }
    }
  }
  // Solutions are the nullspace of eq acting on column vectors of unknowns.
  const Matrix sol = nullspace(f, eq);
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < sol.rows(); ++r) {
    Matrix x(a, b);
    std::copy(sol.row(r).begin(), sol.row(r).end(), x.flat().begin());
    out.push_back(std::move(x));
  }
  return out;
}

// M is a summand of a free module iff id_M is a sum of maps M -> kG -> M.
inline bool free_summand_oracle(const GroupData& g, const GModule& m) {
  const auto& f = m.field();
  const auto reg = perm_module(g, coset_action(g, make_subgroup(g, {0})), m.field_ptr());
  const auto into = slow_hom(m, reg);
  const auto out = slow_hom(reg, m);
  const std::size_t d = m.dimension();
  EchelonBasis span(f, d * d);
  for (const auto& phi : into) {
    for (const auto& psi : out) span.insert(multiply(f, phi, psi).flat());
  }
  return span.contains(Matrix::identity(d).flat());
}

// Fixed points of a Sylow 2-subgroup times its order against dim M: equality
// exactly when the restriction to P is free.
inline bool sylow_socle_oracle(const GroupData& g, const SubgroupData& p, const GModule& m) {
  const auto& f = m.field();
  const std::size_t d = m.dimension();
  Matrix stacked(d, d * p.members.size());
  for (std::size_t k = 0; k < p.members.size(); ++k) {
    Matrix a = slow_action(g, m, p.members[k]);
    for (std::size_t i = 0; i < d; ++i) a(i, i) ^= 1;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) stacked(i, k * d + j) = a(i, j);
    }
  }
  const std::size_t fixed = d - rank(f, stacked);
  return fixed * p.order == d;
}

}  // namespace testsupport
