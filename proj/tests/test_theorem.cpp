#include <doctest.h>

#include <json.hpp>

#include "blockomega/errors.hpp"
#include "blockomega/theorem.hpp"
#include "support.hpp"

using namespace blockomega;
using testsupport::group;

namespace {

const ClassRecord* class_with_size(const VerificationReport& r, std::size_t size, std::size_t skip_identity = 1) {
  for (const auto& c : r.omega.classes) {
    if (c.class_size == size && (skip_identity == 0 || c.class_index != 0)) return &c;
  }
  return nullptr;
}

SubgroupData subgroup(const GroupData& g, std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<std::size_t> idx;
  for (const auto& s : gens) idx.push_back(g.index_of(Permutation::parse(degree, s)));
  return subgroup_generated(g, idx);
}

}  // namespace

TEST_CASE("S3 end to end") {
  const auto g = group("S3");
  const auto r = verify_group(g, "S3");
  CHECK(r.pass());
  CHECK(r.omega.dimension == 4);
  CHECK(r.omega.real_defect_zero_blocks == 1);
  CHECK(r.omega.projective_components == 1);
  REQUIRE(r.blocks.size() == 2);
  CHECK(r.blocks[1].info.simple_dimension == 2);
  CHECK(r.blocks[1].omega_dimension == 2);
  CHECK(r.blocks[1].end_dimension == 1);
  const auto* transpositions = class_with_size(r, 3);
  REQUIRE(transpositions);
  REQUIRE(transpositions->projective_components.size() == 1);
  CHECK(transpositions->projective_components[0].dimension == 2);
  CHECK(transpositions->projective_components[0].multiplicity == 1);
  CHECK(r.omega.classes[0].projective_components.empty());
}

TEST_CASE("S4 has no projective components in kOmega") {
  const auto r = verify_group(group("S4"), "S4");
  CHECK(r.pass());
  CHECK(r.omega.dimension == 10);
  CHECK(r.omega.real_defect_zero_blocks == 0);
  CHECK(r.omega.projective_components == 0);
}

TEST_CASE("odd order groups") {
  const auto r = verify_group(group("C3"), "C3");
  CHECK(r.pass());
  CHECK(r.omega.dimension == 1);
  CHECK(r.omega.real_defect_zero_blocks == 1);
  CHECK(r.omega.projective_components == 1);
  REQUIRE(r.omega.classes.size() == 1);
  REQUIRE(r.omega.classes[0].projective_components.size() == 1);
  CHECK(r.omega.classes[0].projective_components[0].dimension == 1);
  // The nonreal pair contributes nothing.
  for (const auto& b : r.blocks) {
    if (!b.info.is_real) CHECK(b.omega_dimension == 0);
  }
}

TEST_CASE("A5: the involution class carries the 4-dimensional projective") {
  const auto r = verify_group(group("A5"), "A5");
  CHECK(r.pass());
  CHECK(r.omega.dimension == 16);
  const auto* inv = class_with_size(r, 15);
  REQUIRE(inv);
  REQUIRE(inv->projective_components.size() == 1);
  CHECK(inv->projective_components[0].dimension == 4);
  CHECK(inv->projective_components[0].multiplicity == 1);
}

TEST_CASE("catalog invariants") {
  for (const auto& name : testsupport::full_catalog()) {
    const auto g = group(name);
    const auto r = verify_group(g, name);
    CHECK_MESSAGE(r.pass(), name);
    CHECK(r.skipped.empty());
    std::size_t by_class = 0;
    std::size_t coset_total = 0;
    for (const auto& c : r.omega.classes) {
      by_class += c.class_size;
      coset_total += c.module_dimension;
    }
    CHECK(by_class == r.omega.dimension);
    CHECK(coset_total == r.omega.dimension);
    std::size_t by_block = 0;
    for (const auto& b : r.blocks) by_block += b.omega_dimension;
    CHECK(by_block == r.omega.dimension);
    // Each real defect-zero block is hit by exactly one involution class.
    for (const auto& b : r.blocks) {
      if (!(b.info.is_defect_zero && b.info.is_real)) continue;
      std::size_t hits = 0;
      for (const auto& c : r.omega.classes) {
        for (const auto& p : c.projective_components) hits += p.block == b.info.index;
      }
      CHECK_MESSAGE(hits == 1, name);
    }
    if (r.omega.real_defect_zero_blocks == 0 && g.order() % 2 == 0) {
      CHECK(r.omega.projective_components == 0);
    }
  }
}

TEST_CASE("block components of kOmega agree with the report") {
  for (const auto& name : {"S3", "A5", "D10", "A6"}) {
    const auto g = group(name);
    const auto r = verify_bijection(g, name);
    const auto f = field_ctx(r.field_degree);
    const auto m = perm_module(g, conjugation_action(g, involutions(g)), f);
    for (const auto& b : r.blocks) {
      CHECK(block_component(b.info.idempotent, m, g).dimension() == b.omega_dimension);
    }
  }
}

TEST_CASE("verdicts are stable across seeds") {
  for (const auto& name : {"S3", "S4", "A5", "A6", "D10", "S6"}) {
    const auto g = group(name);
    const auto base = verify_group(g, name);
    for (std::uint64_t seed : {1ull, 2ull, 12345ull}) {
      VerificationConfig c;
      c.seed = seed;
      const auto r = verify_group(g, name, c);
      CHECK(r.pass() == base.pass());
      CHECK(r.omega.projective_components == base.omega.projective_components);
      CHECK(r.omega.real_defect_zero_blocks == base.omega.real_defect_zero_blocks);
      CHECK(r.omega.components.size() == base.omega.components.size());
    }
  }
}

TEST_CASE("json output") {
  const auto g = group("S3");
  const auto a = to_json(verify_group(g, "S3"));
  const auto b = to_json(verify_group(g, "S3"));
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  for (const char* key : {"group", "order", "field_degree", "blocks", "omega", "verdicts", "skipped", "timing_ms"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK(j["timing_ms"].is_null());
  CHECK(j["omega"].contains("dim"));
  CHECK(j["omega"].contains("components"));
  CHECK(j["verdicts"]["result"] == "PASS");
  const auto timed = nlohmann::json::parse(to_json(verify_group(g, "S3"), true));
  CHECK(timed["timing_ms"].is_object());
  CHECK(timed["timing_ms"].contains("total"));
}

TEST_CASE("field degree override and caps") {
  const auto g = group("S3");
  CHECK(choose_field(g, std::nullopt)->degree() == 2);
  CHECK(choose_field(g, 4u)->degree() == 4);
  CHECK_THROWS_AS(choose_field(g, 3u), DegreeOutOfRange);
  VerificationConfig c;
  c.field_degree = 4;
  CHECK(verify_group(g, "S3", c).pass());
  VerificationConfig tiny;
  tiny.module_cap = 3;
  CHECK_THROWS_AS(verify_bijection(g, "S3", tiny), CapExceeded);
  // Class modules are never larger than kOmega, so passing the kOmega cap covers them.
  VerificationConfig mid;
  mid.module_cap = 10;
  const auto s4 = verify_group(group("S4"), "S4", mid);
  CHECK(s4.skipped.empty());
  CHECK(s4.pass());
}

TEST_CASE("strongly embedded subgroups") {
  const auto a5 = group("A5");
  const auto a4 = subgroup(a5, 5, {"(0 1 2)", "(0 1)(2 3)"});
  const auto r = verify_strongly_embedded(a5, a4, "A5");
  CHECK(r.pass());
  CHECK(r.module_dimension == 5);
  CHECK(r.trivial_summands == 1);
  REQUIRE(r.components.size() == 2);
  CHECK(r.components[1].dimension == 4);
  CHECK(r.components[1].projective);
  CHECK(r.components[1].irreducible_certified);
  CHECK(r.components[1].self_dual == true);
  const auto s3 = group("S3");
  const auto rs = verify_strongly_embedded(s3, subgroup(s3, 3, {"(0 1)"}), "S3");
  CHECK(rs.pass());
  REQUIRE(rs.components.size() == 2);
  CHECK(rs.components[1].dimension == 2);
  CHECK_THROWS_AS(verify_strongly_embedded(a5, subgroup(a5, 5, {"(0 1 2)"}), "A5"), NotStronglyEmbedded);
  CHECK_THROWS_AS(verify_strongly_embedded(s3, subgroup(s3, 3, {"(0 1)", "(0 1 2)"}), "S3"), NotStronglyEmbedded);
  // Every strongly embedded subgroup generated by two elements of these groups satisfies the conclusion.
  for (const auto& name : {"S3", "A4", "A5", "D10", "S4"}) {
    const auto g = group(name);
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (std::size_t y = x; y < g.order(); y += 3) {
        const auto h = subgroup_generated(g, std::vector<std::size_t>{x, y});
        if (!seen.insert(h.members).second || !is_strongly_embedded(g, h)) continue;
        CHECK_MESSAGE(verify_strongly_embedded(g, h, name).pass(), name << " |H| = " << h.order);
      }
    }
  }
}
