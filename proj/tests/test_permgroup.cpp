#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "blockomega/catalog.hpp"
#include "blockomega/errors.hpp"
#include "blockomega/permgroup.hpp"
#include "support.hpp"

using namespace blockomega;
using testsupport::group;

TEST_CASE("permutations") {
  const auto a = Permutation::parse(4, "(0 1 2)");
  const auto b = Permutation::parse(4, "(2,3)");
  CHECK((a * b)[0] == 1);
  CHECK((a * b)[1] == 3);  // 1 -> 2 under a, then 2 -> 3 under b
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK(Permutation::parse(5, "(0 1)(2 3 4)").order() == 6);
  CHECK(Permutation::identity(3).to_string() == "()");
  CHECK(Permutation::parse(4, "(0 1)(2 3)").to_string() == "(0 1)(2 3)");
  CHECK(Permutation::parse(5, "(0 1)(2 3 4)").cycle_type() == std::vector<std::size_t>{3, 2});
  CHECK_THROWS_AS(Permutation(std::vector<std::uint32_t>{0, 0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::parse(3, "(0 3)"), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::parse(3, "(0 1 0)"), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::parse(3, "(0 1"), ParseError);
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_group(3, {Permutation::parse(3, "(0 1)"), Permutation::parse(3, "(0 1 2)")}).order() == 6);
  const auto trivial = enumerate_group(1, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.classes().size() == 1);
  CHECK(enumerate_group(5, {Permutation::parse(5, "(0 1 2 3 4)"), Permutation::parse(5, "(0 1 2)")}).order() == 60);
  CHECK_THROWS_AS(enumerate_group(6, {Permutation::parse(6, "(0 1)"), Permutation::parse(6, "(0 1 2 3 4 5)")}, 100),
                  CapExceeded);
  CHECK_THROWS_AS(enumerate_group(3, {Permutation::parse(4, "(0 1)")}), InvalidPermutation);
}

TEST_CASE("catalog orders and generator files") {
  const std::map<std::string, std::size_t> orders{{"C1", 1},   {"C2", 2},   {"C3", 3},  {"C6", 6},
                                                  {"S3", 6},   {"S4", 24},  {"S5", 120}, {"S6", 720},
                                                  {"S7", 5040}, {"A4", 12}, {"A5", 60}, {"A6", 360},
                                                  {"D8", 8},   {"D10", 10}, {"D12", 12}, {"Q8", 8}};
  for (const auto& [name, order] : orders) CHECK_MESSAGE(group(name).order() == order, name);
  CHECK_THROWS_AS(catalog_group("X3"), ParseError);
  CHECK_THROWS_AS(catalog_group("D7"), ParseError);
  const auto spec = parse_generators("# comment\n\ndegree 4\n(0 1 2 3)\n(0 2)\n");
  CHECK(spec.degree == 4);
  CHECK(enumerate_group(spec.degree, spec.generators).order() == 8);
  CHECK_THROWS_AS(parse_generators("(0 1)\n"), ParseError);
  CHECK_THROWS_AS(parse_generators("degree x\n"), ParseError);
  // Q8 has a unique involution and every other non-identity element has order 4.
  const auto q = group("Q8");
  std::size_t inv = 0;
  for (std::size_t x = 1; x < q.order(); ++x) inv += q.element_order(x) == 2;
  CHECK(inv == 1);
}

TEST_CASE("conjugacy classes against brute force") {
  for (const auto& name : {"C1", "C3", "C6", "S3", "S4", "A4", "A5", "D8", "D10", "D12", "Q8"}) {
    const auto g = group(name);
    auto slow = testsupport::slow_classes(g);
    std::vector<std::vector<std::size_t>> fast;
    for (const auto& c : g.classes()) fast.push_back(c.members);
    std::sort(slow.begin(), slow.end());
    std::sort(fast.begin(), fast.end());
    CHECK_MESSAGE(fast == slow, name);
    CHECK(g.classes()[0].members == std::vector<std::size_t>{0});
    for (std::size_t i = 0; i < g.classes().size(); ++i) {
      const auto& c = g.classes()[i];
      CHECK(c.members.size() * c.centralizer_order == g.order());
      CHECK(g.classes()[c.inverse_class].inverse_class == i);
      CHECK(g.classes()[c.inverse_class].members.size() == c.members.size());
      CHECK(c.is_real == (c.inverse_class == i));
      CHECK(g.class_of(g.inverse(c.representative_index)) == c.inverse_class);
      for (auto x : c.members) CHECK(g.class_of(x) == i);
    }
  }
  const auto s3 = group("S3");
  std::multiset<std::size_t> sizes;
  for (const auto& c : s3.classes()) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  const auto c3 = group("C3");
  CHECK(c3.classes().size() == 3);
  CHECK(c3.classes()[1].inverse_class == 2);
  const auto a5 = group("A5");
  CHECK(a5.classes().size() == 5);
  for (const auto& c : a5.classes()) CHECK(c.is_real);
}

TEST_CASE("group operations agree with permutation arithmetic") {
  for (const auto& name : {"S4", "A5", "Q8", "D10"}) {
    const auto g = group(name);
    for (std::size_t a = 0; a < g.order(); a += 3) {
      for (std::size_t b = 0; b < g.order(); b += 5) {
        CHECK(g.multiply(a, b) == testsupport::slow_product(g, a, b));
        CHECK(g.element(g.conjugate(a, b)) == g.element(b).inverse() * g.element(a) * g.element(b));
      }
      CHECK(g.multiply(a, g.inverse(a)) == 0);
      Permutation w = Permutation::identity(g.degree());
      for (auto gen : g.word(a)) w = w * g.generators()[gen];
      CHECK(w == g.element(a));
      CHECK(g.element(a).order() == g.element_order(a));
    }
    std::uint64_t lcm = 1;
    for (std::size_t x = 0; x < g.order(); ++x) lcm = std::lcm(lcm, g.element_order(x));
    CHECK(g.exponent() == lcm);
  }
}

TEST_CASE("involutions") {
  CHECK(involutions(group("S3")).size() == 4);
  CHECK(involutions(group("C3")) == std::vector<std::size_t>{0});
  CHECK(involutions(group("S4")).size() == 10);
  for (const auto& name : testsupport::small_catalog()) {
    const auto g = group(name);
    std::vector<std::size_t> slow;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (testsupport::slow_product(g, x, x) == 0) slow.push_back(x);
    }
    CHECK(involutions(g) == slow);
    std::size_t by_class = 0;
    for (const auto& c : g.classes()) {
      if (g.element_order(c.representative_index) <= 2) {
        CHECK(c.is_real);
        by_class += c.members.size();
      }
    }
    CHECK(by_class == slow.size());
  }
}

TEST_CASE("centralizers") {
  const auto s3 = group("S3");
  CHECK(centralizer(s3, s3.index_of(Permutation::parse(3, "(0 1)"))).order == 2);
  const auto s4 = group("S4");
  CHECK(centralizer(s4, s4.index_of(Permutation::parse(4, "(0 1)(2 3)"))).order == 8);
  for (const auto& name : testsupport::small_catalog()) {
    const auto g = group(name);
    CHECK(centralizer(g, 0).order == g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::vector<std::size_t> slow;
      for (std::size_t y = 0; y < g.order(); ++y) {
        if (testsupport::slow_product(g, x, y) == testsupport::slow_product(g, y, x)) slow.push_back(y);
      }
      CHECK(centralizer(g, x).members == slow);
    }
  }
}

TEST_CASE("Sylow 2-subgroups") {
  CHECK(sylow2(group("S3")).order == 2);
  CHECK(sylow2(group("C3")).order == 1);
  const auto a5 = group("A5");
  const auto p = sylow2(a5);
  CHECK(p.order == 4);
  for (auto x : p.members) CHECK(a5.element_order(x) <= 2);
  for (const auto& name : testsupport::full_catalog()) {
    const auto g = group(name);
    std::size_t two = 1;
    while (g.order() % (two * 2) == 0) two *= 2;
    for (std::uint64_t seed : {0ull, 1ull, 17ull}) {
      const auto s = sylow2(g, seed);
      CHECK_MESSAGE(s.order == two, name);
      for (auto a : s.members) {
        for (auto b : s.members) CHECK(s.contains(g.multiply(a, b)));
      }
    }
  }
}

TEST_CASE("coset actions") {
  const auto s3 = group("S3");
  const auto h = subgroup_generated(s3, std::vector<std::size_t>{s3.index_of(Permutation::parse(3, "(0 1)"))});
  CHECK(coset_action(s3, h).degree == 3);
  const auto a5 = group("A5");
  const auto a4 = subgroup_generated(
      a5, std::vector<std::size_t>{a5.index_of(Permutation::parse(5, "(0 1 2)")),
                                   a5.index_of(Permutation::parse(5, "(0 1)(2 3)"))});
  CHECK(a4.order == 12);
  CHECK(coset_action(a5, a4).degree == 5);
  for (const auto& name : testsupport::small_catalog()) {
    const auto g = group(name);
    for (std::size_t x = 0; x < g.order(); x += 2) {
      const auto h2 = subgroup_generated(g, std::vector<std::size_t>{x});
      const auto act = coset_action(g, h2);
      CHECK(act.degree * h2.order == g.order());
      CHECK(orbits(act).size() == 1);
      // Point images agree with multiplying coset representatives.
      for (std::size_t y = 0; y < g.order(); ++y) {
        const auto img = element_permutation(g, act, y);
        for (std::size_t c = 0; c < act.degree; ++c) {
          CHECK(img[c] == h2.coset_of[g.multiply(h2.coset_representatives[c], y)]);
        }
      }
    }
    std::vector<std::size_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    CHECK(coset_action(g, make_subgroup(g, all)).degree == 1);
  }
  CHECK_THROWS_AS(make_subgroup(s3, {0, s3.index_of(Permutation::parse(3, "(0 1 2)"))}), InvalidAction);
}

TEST_CASE("conjugation action on involutions") {
  const auto s4 = group("S4");
  const auto omega = involutions(s4);
  const auto act = conjugation_action(s4, omega);
  CHECK(orbits(act).size() == 3);
  for (std::size_t y = 0; y < s4.order(); ++y) {
    const auto img = element_permutation(s4, act, y);
    for (std::size_t i = 0; i < omega.size(); ++i) CHECK(omega[img[i]] == s4.conjugate(omega[i], y));
  }
  const auto pi = point_images(s4, act, 4);
  for (std::size_t y = 0; y < s4.order(); ++y) CHECK(pi[y] == element_permutation(s4, act, y)[4]);
}

namespace {

bool slow_strongly_embedded(const GroupData& g, const SubgroupData& h) {
  if (h.order == g.order() || h.order % 2 == 1) return false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    std::size_t common = 0;
    for (auto a : h.members) common += h.contains(g.conjugate(a, x));
    if (common % 2 == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("strongly embedded subgroups") {
  const auto a5 = group("A5");
  const auto a4 = subgroup_generated(
      a5, std::vector<std::size_t>{a5.index_of(Permutation::parse(5, "(0 1 2)")),
                                   a5.index_of(Permutation::parse(5, "(0 1)(2 3)"))});
  CHECK(is_strongly_embedded(a5, a4));
  const auto s3 = group("S3");
  const auto t = subgroup_generated(s3, std::vector<std::size_t>{s3.index_of(Permutation::parse(3, "(0 1)"))});
  CHECK(is_strongly_embedded(s3, t));
  const auto s4 = group("S4");
  std::vector<std::size_t> all(s4.order());
  std::iota(all.begin(), all.end(), 0);
  CHECK_FALSE(is_strongly_embedded(s4, make_subgroup(s4, all)));
  for (const auto& name : {"S3", "S4", "A4", "A5", "D8", "D10", "D12", "Q8", "C6"}) {
    const auto g = group(name);
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (std::size_t y = x; y < g.order(); y += 7) {
        const auto h = subgroup_generated(g, std::vector<std::size_t>{x, y});
        CHECK_MESSAGE(is_strongly_embedded(g, h) == slow_strongly_embedded(g, h), name);
      }
    }
  }
}
