#include <doctest.h>

#include <map>
#include <random>

#include "blockomega/blocks.hpp"
#include "blockomega/errors.hpp"
#include "blockomega/symgroup.hpp"
#include "support.hpp"

using namespace blockomega;
using testsupport::group;

namespace {

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

struct Computed {
  GroupData g;
  FieldPtr f;
  CenterData center;
  std::vector<BlockIdempotent> blocks;
  std::vector<BlockInfo> infos;
};

Computed compute(const std::string& name, std::uint64_t seed = 0, unsigned scale = 1) {
  auto g = group(name);
  auto f = field_ctx(splitting_degree(g) * scale);
  auto center = center_structure(g, f);
  auto blocks = block_idempotents(center, seed);
  auto infos = classify_blocks(center, blocks);
  return {std::move(g), std::move(f), std::move(center), std::move(blocks), std::move(infos)};
}

std::size_t defect_zero_count(const std::vector<BlockInfo>& infos, bool real_only) {
  std::size_t n = 0;
  for (const auto& b : infos) n += b.is_defect_zero && (!real_only || b.is_real);
  return n;
}

}  // namespace

TEST_CASE("class sum structure constants against convolution counts") {
  for (const auto& name : {"C1", "C2", "C3", "S3", "S4", "A4", "A5", "D8", "D10", "Q8"}) {
    const auto g = group(name);
    const auto c = center_structure(g, field_ctx(1));
    const auto& classes = g.classes();
    const std::size_t t = classes.size();
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        for (std::size_t l = 0; l < t; ++l) {
          std::size_t count = 0;
          for (auto x : classes[i].members) {
            for (auto y : classes[j].members) count += testsupport::slow_product(g, x, y) == classes[l].representative_index;
          }
          CHECK_MESSAGE(c.constant(i, j, l) == count % 2, name);
        }
        CHECK(c.constant(0, j, i) == (i == j ? 1 : 0));
        CHECK(c.constant(i, j, 0) == c.constant(j, i, 0));
      }
      CHECK(c.regular_matrix(i) == c.regular_matrix(i));
    }
    std::mt19937_64 rng(4);
    const auto& a = *c.algebra;
    for (int k = 0; k < 20; ++k) {
      Vector x(t), y(t), z(t);
      for (std::size_t i = 0; i < t; ++i) {
        x[i] = rng() & 1;
        y[i] = rng() & 1;
        z[i] = rng() & 1;
      }
      CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
      CHECK(a.multiply(x, y) == a.multiply(y, x));
    }
  }
  const auto c2 = center_structure(group("C2"), field_ctx(1));
  CHECK(c2.constant(1, 1, 0) == 1);
  const auto c1 = center_structure(group("C1"), field_ctx(1));
  CHECK(c1.class_count == 1);
  CHECK(c1.constant(0, 0, 0) == 1);
}

TEST_CASE("block examples") {
  auto c2 = compute("C2");
  CHECK(c2.blocks.size() == 1);
  CHECK(c2.blocks[0].coefficients == Vector{1, 0});
  auto s3 = compute("S3");
  REQUIRE(s3.blocks.size() == 2);
  CHECK(is_principal(s3.blocks[0], s3.center));
  CHECK(s3.infos[0].kB == 2);
  CHECK(s3.infos[1].kB == 1);
  CHECK(s3.infos[1].is_defect_zero);
  CHECK_FALSE(s3.infos[0].is_defect_zero);
  CHECK(s3.infos[0].is_real);
  auto c3 = compute("C3");
  REQUIRE(c3.blocks.size() == 3);
  CHECK(c3.infos[0].is_real);
  CHECK_FALSE(c3.infos[1].is_real);
  CHECK(c3.infos[1].opposite_index == 2);
  for (const auto& b : c3.infos) CHECK(b.is_defect_zero);
  auto c1 = compute("C1");
  CHECK(c1.infos.size() == 1);
  CHECK(c1.infos[0].kB == 1);
}

TEST_CASE("block idempotents are complete, orthogonal and primitive") {
  for (const auto& name : testsupport::full_catalog()) {
    auto c = compute(name);
    const auto& a = *c.center.algebra;
    Vector sum = a.zero();
    std::size_t kb_total = 0;
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
      const auto& e = c.blocks[i].coefficients;
      CHECK(a.multiply(e, e) == e);
      CHECK_FALSE(is_zero(e));
      for (std::size_t j = 0; j < c.blocks.size(); ++j) {
        if (i != j) CHECK(is_zero(a.multiply(e, c.blocks[j].coefficients)));
      }
      CHECK(is_local_corner(a, e, a.sandwich_basis(e, e)));
      sum = a.add(sum, e);
      kb_total += c.infos[i].kB;
      CHECK(c.infos[i].is_defect_zero == (c.infos[i].kB == 1));
      // o permutes the blocks.
      CHECK(opposite(c.blocks[i], c.center) == c.blocks[c.infos[i].opposite_index]);
    }
    CHECK_MESSAGE(sum == a.unit(), name);
    CHECK(kb_total == c.center.class_count);
    CHECK(is_principal(c.blocks[0], c.center));
    if (c.g.order() % 2 == 0) CHECK_FALSE(c.infos[0].is_defect_zero);
    if (c.g.order() % 2 == 1) CHECK(defect_zero_count(c.infos, false) == c.blocks.size());
    bool all_real = true;
    for (const auto& cls : c.g.classes()) all_real = all_real && cls.is_real;
    if (all_real) {
      for (const auto& b : c.infos) CHECK(b.is_real);
    }
  }
}

TEST_CASE("blocks do not depend on the seed or the field degree") {
  for (const auto& name : {"S3", "C3", "A5", "D10", "S5", "A6", "C6"}) {
    const auto base = compute(name);
    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
      const auto other = compute(name, seed);
      CHECK_MESSAGE(other.blocks == base.blocks, name);
    }
    const auto doubled = compute(name, 0, 2);
    CHECK(doubled.blocks.size() == base.blocks.size());
    std::multiset<std::pair<std::size_t, bool>> x, y;
    for (const auto& b : base.infos) x.insert({b.kB, b.is_real});
    for (const auto& b : doubled.infos) y.insert({b.kB, b.is_real});
    CHECK(x == y);
  }
}

TEST_CASE("real defect-zero counts on the catalog") {
  const std::map<std::string, std::size_t> expected{{"C1", 1}, {"C2", 0}, {"C3", 1}, {"C6", 0}, {"S3", 1},
                                                    {"S4", 0}, {"S5", 0}, {"S6", 1}, {"S7", 0}, {"A4", 0},
                                                    {"A5", 1}, {"A6", 2}, {"D8", 0}, {"D10", 2}, {"D12", 0},
                                                    {"Q8", 0}};
  for (const auto& [name, count] : expected) {
    CHECK_MESSAGE(defect_zero_count(compute(name).infos, true) == count, name);
  }
}

TEST_CASE("k(B) of symmetric groups counts partitions by 2-core") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto c = compute("S" + std::to_string(n));
    std::map<Partition, std::size_t> by_core;
    for (const auto& p : partitions_of(n)) ++by_core[two_core(p)];
    std::multiset<std::size_t> expect, got;
    for (const auto& [core, k] : by_core) expect.insert(k);
    for (const auto& b : c.infos) got.insert(b.kB);
    CHECK_MESSAGE(got == expect, "n = " << n);
  }
}

TEST_CASE("block components") {
  auto c = compute("S3");
  const auto k = trivial_module(c.g, c.f);
  CHECK(block_component(c.blocks[0], k, c.g).dimension() == 1);
  CHECK(block_component(c.blocks[1], k, c.g).dimension() == 0);
  const auto omega = perm_module(c.g, conjugation_action(c.g, involutions(c.g)), c.f);
  CHECK(block_component(c.blocks[1], omega, c.g).dimension() == 2);
  for (const auto& name : {"S4", "A5", "D10", "C6", "A6"}) {
    auto x = compute(name);
    const auto m = perm_module(x.g, conjugation_action(x.g, involutions(x.g)), x.f);
    const auto reg = perm_module(x.g, coset_action(x.g, make_subgroup(x.g, {0})), x.f);
    std::size_t total = 0;
    for (std::size_t b = 0; b < x.blocks.size(); ++b) {
      const auto comp = block_component(x.blocks[b], m, x.g);
      total += comp.dimension();
      const auto op = class_function_action(x.g, m, x.blocks[b].coefficients);
      CHECK(multiply(*x.f, op, op) == op);
      if (x.infos[b].is_defect_zero && comp.dimension() > 0) {
        // Semisimple block: End has dimension multiplicity^2 with a single simple.
        const auto d = decompose(comp);
        REQUIRE(d.summands.size() == 1);
        CHECK(EndomorphismRing::generic(comp).dimension() == d.summands[0].multiplicity * d.summands[0].multiplicity);
      }
      if (x.infos[b].is_defect_zero) {
        CHECK(block_component(x.blocks[b], reg, x.g).dimension() == regular_block_dimension(x.blocks[b], x.g, x.f));
      }
    }
    CHECK_MESSAGE(total == m.dimension(), name);
  }
}

TEST_CASE("defect zero blocks are simple algebras") {
  auto s3 = compute("S3");
  const auto dz = validate_simplicity(s3.blocks[1], s3.g, s3.f);
  CHECK(dz.block_dimension == 4);
  CHECK(dz.perfect_square);
  CHECK(dz.is_simple);
  CHECK(dz.simple_dimension == 2);
  const auto pr = validate_simplicity(s3.blocks[0], s3.g, s3.f);
  CHECK(pr.block_dimension == 2);
  CHECK_FALSE(pr.is_simple);
  auto c1 = compute("C1");
  const auto triv = validate_simplicity(c1.blocks[0], c1.g, c1.f);
  CHECK(triv.block_dimension == 1);
  CHECK(triv.is_simple);

  for (const auto& name : testsupport::full_catalog()) {
    auto c = compute(name);
    if (c.g.order() > kSimplicityGroupCap) {
      CHECK_THROWS_AS(validate_simplicity(c.blocks[0], c.g, c.f), CapExceeded);
      continue;
    }
    for (std::size_t b = 0; b < c.blocks.size(); ++b) {
      if (!c.infos[b].is_defect_zero && c.g.order() > 120) continue;
      const auto r = validate_simplicity(c.blocks[b], c.g, c.f, 3);
      CHECK_MESSAGE(r.is_simple == c.infos[b].is_defect_zero, name << " block " << b);
    }
  }
}
