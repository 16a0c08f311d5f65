#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blockomega {

inline constexpr std::size_t kDefaultGroupCap = 200'000;

// A permutation of {0, ..., degree-1}. Products compose left to right:
// (a * b) applies a first, so i^(ab) = (i^a)^b.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);
  // Disjoint-cycle notation such as "(0 1)(2 3)"; "()" is the identity.
  static Permutation parse(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::uint64_t order() const;
  // Cycle lengths in decreasing order, fixed points included as 1s.
  std::vector<std::size_t> cycle_type() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct ConjugacyClass {
  Permutation representative;
  std::size_t representative_index = 0;
  std::vector<std::size_t> members;  // sorted element indices
  std::uint64_t centralizer_order = 0;
  std::size_t inverse_class = 0;
  bool is_real = false;
};

// A finite permutation group with every element enumerated.
//
// Element 0 is the identity; the rest appear in breadth-first order from the
// generators, and every non-identity element x records the BFS tree edge
// x = parent(x) * generator(parent_generator(x)). Immutable after
// construction and safe for concurrent reads.
class GroupData {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return order_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  std::span<const std::uint32_t> images(std::size_t i) const noexcept {
    return {flat_.data() + i * degree_, degree_};
  }
  Permutation element(std::size_t i) const;
  std::optional<std::size_t> find(std::span<const std::uint32_t> images) const;
  // Throws InvalidPermutation if p is not a member.
  std::size_t index_of(const Permutation& p) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const noexcept { return inverse_[a]; }
  // g^-1 a g
  std::size_t conjugate(std::size_t a, std::size_t g) const;
  std::size_t times_generator(std::size_t a, std::size_t gen) const noexcept {
    return right_gen_[a * generators_.size() + gen];
  }
  std::size_t parent(std::size_t i) const noexcept { return parent_[i]; }
  std::size_t parent_generator(std::size_t i) const noexcept { return parent_gen_[i]; }
  // Generator indices g1..gk with element = gen(g1) * ... * gen(gk).
  std::vector<std::size_t> word(std::size_t i) const;

  std::uint64_t element_order(std::size_t i) const noexcept { return element_order_[i]; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t i) const noexcept { return class_of_[i]; }

 private:
  friend GroupData enumerate_group(std::size_t, const std::vector<Permutation>&, std::size_t);

  std::size_t insert_or_find(std::span<const std::uint32_t> images, bool& inserted);
  void rehash(std::size_t capacity);
  std::uint64_t hash(std::span<const std::uint32_t> images) const noexcept;

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::uint64_t exponent_ = 1;
  std::vector<Permutation> generators_;
  std::vector<std::uint32_t> flat_;
  std::vector<std::uint32_t> slots_;  // open addressing, element index + 1
  std::vector<std::size_t> right_gen_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_gen_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint64_t> element_order_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

// Breadth-first closure of the generators. Throws CapExceeded once more than
// `cap` elements appear and InvalidPermutation on degree mismatches.
GroupData enumerate_group(std::size_t degree, const std::vector<Permutation>& generators,
                          std::size_t cap = kDefaultGroupCap);

// Orbits of the conjugation action with inverse-class pairing; class 0 is {e}.
const std::vector<ConjugacyClass>& conjugacy_classes(const GroupData& group);

// Sorted indices of all t with t^2 = e, the identity included.
std::vector<std::size_t> involutions(const GroupData& group);

struct SubgroupData {
  std::vector<std::size_t> members;  // sorted element indices of the parent group
  std::size_t order = 0;
  // One representative per right coset Hx; the coset of the identity first.
  std::vector<std::size_t> coset_representatives;
  // coset_of[x] = index of the right coset containing element x.
  std::vector<std::size_t> coset_of;

  bool contains(std::size_t element) const;
};

// Wraps a set of element indices closed under multiplication.
SubgroupData make_subgroup(const GroupData& group, std::vector<std::size_t> members);
// Subgroup generated by the given elements.
SubgroupData subgroup_generated(const GroupData& group, std::span<const std::size_t> generators);
SubgroupData centralizer(const GroupData& group, std::size_t element);
// A Sylow 2-subgroup found by greedy growth inside normalisers; `seed` only
// affects which 2-elements are tried first.
SubgroupData sylow2(const GroupData& group, std::uint64_t seed = 0);

// A right action of the group on {0, ..., degree-1}, given on generators.
struct PermAction {
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> generator_images;  // [generator][point]
};

// Right coset action of the group on H\G; coset 0 is H itself.
PermAction coset_action(const GroupData& group, const SubgroupData& subgroup);
// Conjugation t -> g^-1 t g on a conjugation-closed set of elements; point i
// corresponds to points[i].
PermAction conjugation_action(const GroupData& group, std::span<const std::size_t> points);
// For one point p, the image p^x for every element x (indexed by element).
std::vector<std::uint32_t> point_images(const GroupData& group, const PermAction& action,
                                        std::uint32_t point);
// The full permutation of points induced by a single element.
std::vector<std::uint32_t> element_permutation(const GroupData& group, const PermAction& action,
                                               std::size_t element);
std::vector<std::vector<std::uint32_t>> orbits(const PermAction& action);

// |H| even, and |H cap H^g| odd for every g outside H; false for H = G.
bool is_strongly_embedded(const GroupData& group, const SubgroupData& subgroup);

}  // namespace blockomega
