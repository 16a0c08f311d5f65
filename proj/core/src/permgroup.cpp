#include "blockomega/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

#include "blockomega/errors.hpp"

namespace blockomega {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw InvalidPermutation("images do not form a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0U);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0U);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto p = cycle[i];
      if (p >= degree) {
        throw InvalidPermutation("point " + std::to_string(p) + " outside degree " + std::to_string(degree));
      }
      if (used[p]) throw InvalidPermutation("cycles are not disjoint at point " + std::to_string(p));
      used[p] = true;
      img[p] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("malformed cycle: " + std::string(text));
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 0xFFFFFFFFULL) throw ParseError("point index too large");
        ++i;
      }
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw InvalidPermutation("degree mismatch in product");
  std::vector<std::uint32_t> img(degree());
  for (std::size_t i = 0; i < degree(); ++i) img[i] = other.images_[images_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(degree());
  for (std::size_t i = 0; i < degree(); ++i) img[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (auto len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out << ' ';
      out << j;
    }
    out << ')';
  }
  const auto s = out.str();
  return s.empty() ? "()" : s;
}

// GroupData ---------------------------------------------------------------

Permutation GroupData::element(std::size_t i) const {
  auto img = images(i);
  return Permutation(std::vector<std::uint32_t>(img.begin(), img.end()));
}

std::uint64_t GroupData::hash(std::span<const std::uint32_t> images) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (auto v : images) {
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6U) + (h >> 2U);
    h *= 0xBF58476D1CE4E5B9ULL;
  }
  return h ^ (h >> 31U);
}

std::optional<std::size_t> GroupData::find(std::span<const std::uint32_t> img) const {
  if (img.size() != degree_ || slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(img) & mask;; s = (s + 1) & mask) {
    const auto slot = slots_[s];
    if (slot == 0) return std::nullopt;
    const std::size_t idx = slot - 1;
    if (std::equal(img.begin(), img.end(), flat_.begin() + static_cast<std::ptrdiff_t>(idx * degree_))) {
      return idx;
    }
  }
}

void GroupData::rehash(std::size_t capacity) {
  slots_.assign(capacity, 0);
  const std::size_t mask = capacity - 1;
  for (std::size_t idx = 0; idx < order_; ++idx) {
    std::size_t s = hash(images(idx)) & mask;
    while (slots_[s] != 0) s = (s + 1) & mask;
    slots_[s] = static_cast<std::uint32_t>(idx + 1);
  }
}

std::size_t GroupData::insert_or_find(std::span<const std::uint32_t> img, bool& inserted) {
  if (auto idx = find(img)) {
    inserted = false;
    return *idx;
  }
  inserted = true;
  flat_.insert(flat_.end(), img.begin(), img.end());
  ++order_;
  if (2 * order_ > slots_.size()) {
    rehash(std::max<std::size_t>(16, slots_.size() * 2));
  } else {
    const std::size_t mask = slots_.size() - 1;
    std::size_t s = hash(img) & mask;
    while (slots_[s] != 0) s = (s + 1) & mask;
    slots_[s] = static_cast<std::uint32_t>(order_);
  }
  return order_ - 1;
}

std::size_t GroupData::index_of(const Permutation& p) const {
  auto idx = find(p.images());
  if (!idx) throw InvalidPermutation("permutation " + p.to_string() + " is not in the group");
  return *idx;
}

std::size_t GroupData::multiply(std::size_t a, std::size_t b) const {
  thread_local std::vector<std::uint32_t> buf;
  buf.resize(degree_);
  const auto ia = images(a);
  const auto ib = images(b);
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = ib[ia[i]];
  return *find(buf);
}

std::size_t GroupData::conjugate(std::size_t a, std::size_t g) const {
  return multiply(multiply(inverse_[g], a), g);
}

std::vector<std::size_t> GroupData::word(std::size_t i) const {
  std::vector<std::size_t> w;
  for (; i != 0; i = parent_[i]) w.push_back(parent_gen_[i]);
  std::reverse(w.begin(), w.end());
  return w;
}

GroupData enumerate_group(std::size_t degree, const std::vector<Permutation>& generators,
                          std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidPermutation("generator degree does not match group degree");
  }
  GroupData G;
  G.degree_ = degree;
  G.generators_ = generators;
  const std::size_t ngens = generators.size();
  bool inserted = false;
  G.insert_or_find(Permutation::identity(degree).images(), inserted);
  G.parent_.push_back(0);
  G.parent_gen_.push_back(0);

  std::vector<std::uint32_t> buf(degree);
  for (std::size_t head = 0; head < G.order_; ++head) {
    G.right_gen_.resize(G.order_ * ngens);
    for (std::size_t g = 0; g < ngens; ++g) {
      const auto gi = generators[g].images();
      const std::uint32_t* x = G.flat_.data() + head * degree;
      for (std::size_t i = 0; i < degree; ++i) buf[i] = gi[x[i]];
      const std::size_t y = G.insert_or_find(buf, inserted);
      if (inserted) {
        if (G.order_ > cap) {
          throw CapExceeded("group order exceeds cap of " + std::to_string(cap) + " elements");
        }
        G.parent_.push_back(head);
        G.parent_gen_.push_back(g);
      }
      G.right_gen_[head * ngens + g] = y;
    }
  }
  G.right_gen_.resize(G.order_ * ngens);

  G.inverse_.resize(G.order_);
  G.element_order_.resize(G.order_);
  for (std::size_t x = 0; x < G.order_; ++x) {
    const auto img = G.images(x);
    for (std::size_t i = 0; i < degree; ++i) buf[img[i]] = static_cast<std::uint32_t>(i);
    G.inverse_[x] = *G.find(buf);
    const auto ord = G.element(x).order();
    G.element_order_[x] = ord;
    G.exponent_ = std::lcm(G.exponent_, ord);
  }

  // Conjugacy classes: orbits under conjugation by the generators.
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  G.class_of_.assign(G.order_, kUnassigned);
  std::vector<std::size_t> gen_index(ngens), gen_inverse(ngens);
  for (std::size_t g = 0; g < ngens; ++g) {
    gen_index[g] = G.right_gen_[g];  // identity * generator
    gen_inverse[g] = G.inverse_[gen_index[g]];
  }
  for (std::size_t x = 0; x < G.order_; ++x) {
    if (G.class_of_[x] != kUnassigned) continue;
    const std::size_t cls = G.classes_.size();
    ConjugacyClass c;
    c.representative = G.element(x);
    c.representative_index = x;
    std::vector<std::size_t> stack{x};
    G.class_of_[x] = cls;
    while (!stack.empty()) {
      const auto y = stack.back();
      stack.pop_back();
      c.members.push_back(y);
      for (std::size_t g = 0; g < ngens; ++g) {
        const auto z = G.multiply(G.multiply(gen_inverse[g], y), gen_index[g]);
        if (G.class_of_[z] == kUnassigned) {
          G.class_of_[z] = cls;
          stack.push_back(z);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.centralizer_order = G.order_ / c.members.size();
    G.classes_.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < G.classes_.size(); ++i) {
    auto& c = G.classes_[i];
    c.inverse_class = G.class_of_[G.inverse_[c.representative_index]];
    c.is_real = c.inverse_class == i;
  }
  return G;
}

const std::vector<ConjugacyClass>& conjugacy_classes(const GroupData& group) { return group.classes(); }

std::vector<std::size_t> involutions(const GroupData& group) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (group.element_order(x) <= 2) out.push_back(x);
  }
  return out;
}

// Subgroups ---------------------------------------------------------------

bool SubgroupData::contains(std::size_t element) const {
  return std::binary_search(members.begin(), members.end(), element);
}

SubgroupData make_subgroup(const GroupData& group, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) throw InvalidAction("subgroup must contain the identity");
  if (group.order() % members.size() != 0) throw InvalidAction("subgroup order does not divide group order");
  SubgroupData H;
  H.order = members.size();
  H.members = std::move(members);
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  H.coset_of.assign(group.order(), kUnassigned);
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (H.coset_of[x] != kUnassigned) continue;
    const std::size_t c = H.coset_representatives.size();
    H.coset_representatives.push_back(x);
    for (auto h : H.members) {
      const auto y = group.multiply(h, x);
      if (H.coset_of[y] != kUnassigned) throw InvalidAction("element set is not a subgroup");
      H.coset_of[y] = c;
    }
  }
  return H;
}

SubgroupData subgroup_generated(const GroupData& group, std::span<const std::size_t> generators) {
  std::vector<bool> in(group.order(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto g : generators) {
      const auto y = group.multiply(members[head], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return make_subgroup(group, std::move(members));
}

SubgroupData centralizer(const GroupData& group, std::size_t element) {
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (group.multiply(x, element) == group.multiply(element, x)) members.push_back(x);
  }
  return make_subgroup(group, std::move(members));
}

namespace {

std::size_t two_part(std::size_t n) {
  std::size_t p = 1;
  while (n % 2 == 0) {
    n /= 2;
    p *= 2;
  }
  return p;
}

bool is_two_power(std::uint64_t n) { return (n & (n - 1)) == 0; }

// Grows a 2-subgroup one normalising 2-element at a time. If P is a proper
// subgroup of a Sylow 2-subgroup Q then N_Q(P) > P, so a candidate exists at
// every step until |P| is the full 2-part.
std::optional<SubgroupData> grow_sylow(const GroupData& group, std::mt19937_64* rng) {
  const std::size_t target = two_part(group.order());
  std::vector<std::size_t> gens;
  SubgroupData P = make_subgroup(group, {0});
  while (P.order < target) {
    std::vector<std::size_t> candidates;
    for (std::size_t x = 0; x < group.order(); ++x) {
      if (!is_two_power(group.element_order(x)) || P.contains(x)) continue;
      bool normalises = true;
      for (auto g : gens) {
        if (!P.contains(group.conjugate(g, x))) {
          normalises = false;
          break;
        }
      }
      if (normalises) candidates.push_back(x);
    }
    if (candidates.empty()) return std::nullopt;
    const std::size_t pick = rng != nullptr ? (*rng)() % candidates.size() : 0;
    gens.push_back(candidates[pick]);
    P = subgroup_generated(group, gens);
    if (!is_two_power(P.order)) return std::nullopt;
  }
  return P;
}

}  // namespace

SubgroupData sylow2(const GroupData& group, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 4; ++attempt) {
    if (auto P = grow_sylow(group, &rng)) return std::move(*P);
  }
  // Deterministic pass: always take the first candidate in element order.
  if (auto P = grow_sylow(group, nullptr)) return std::move(*P);
  throw InvalidAction("failed to construct a Sylow 2-subgroup");
}

// Actions -----------------------------------------------------------------

PermAction coset_action(const GroupData& group, const SubgroupData& subgroup) {
  PermAction a;
  a.degree = subgroup.coset_representatives.size();
  a.generator_images.assign(group.generator_count(), std::vector<std::uint32_t>(a.degree));
  for (std::size_t g = 0; g < group.generator_count(); ++g) {
    for (std::size_t c = 0; c < a.degree; ++c) {
      const auto y = group.times_generator(subgroup.coset_representatives[c], g);
      a.generator_images[g][c] = static_cast<std::uint32_t>(subgroup.coset_of[y]);
    }
  }
  return a;
}

PermAction conjugation_action(const GroupData& group, std::span<const std::size_t> points) {
  std::vector<std::uint32_t> position(group.order(), static_cast<std::uint32_t>(-1));
  for (std::size_t i = 0; i < points.size(); ++i) position[points[i]] = static_cast<std::uint32_t>(i);
  PermAction a;
  a.degree = points.size();
  a.generator_images.assign(group.generator_count(), std::vector<std::uint32_t>(a.degree));
  for (std::size_t g = 0; g < group.generator_count(); ++g) {
    const std::size_t gen = group.times_generator(0, g);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto img = position[group.conjugate(points[i], gen)];
      if (img == static_cast<std::uint32_t>(-1)) throw InvalidAction("point set not closed under conjugation");
      a.generator_images[g][i] = img;
    }
  }
  return a;
}

std::vector<std::uint32_t> point_images(const GroupData& group, const PermAction& action,
                                        std::uint32_t point) {
  std::vector<std::uint32_t> img(group.order());
  img[0] = point;
  for (std::size_t x = 1; x < group.order(); ++x) {
    img[x] = action.generator_images[group.parent_generator(x)][img[group.parent(x)]];
  }
  return img;
}

std::vector<std::uint32_t> element_permutation(const GroupData& group, const PermAction& action,
                                               std::size_t element) {
  std::vector<std::uint32_t> perm(action.degree);
  std::iota(perm.begin(), perm.end(), 0U);
  for (auto g : group.word(element)) {
    for (auto& p : perm) p = action.generator_images[g][p];
  }
  return perm;
}

std::vector<std::vector<std::uint32_t>> orbits(const PermAction& action) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(action.degree, false);
  for (std::uint32_t p = 0; p < action.degree; ++p) {
    if (seen[p]) continue;
    std::vector<std::uint32_t> orbit{p};
    seen[p] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& gi : action.generator_images) {
        const auto q = gi[orbit[head]];
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_strongly_embedded(const GroupData& group, const SubgroupData& subgroup) {
  if (subgroup.order == group.order() || subgroup.order % 2 != 0) return false;
  for (std::size_t c = 1; c < subgroup.coset_representatives.size(); ++c) {
    const auto g = subgroup.coset_representatives[c];
    std::size_t meet = 0;
    for (auto h : subgroup.members) {
      if (subgroup.contains(group.conjugate(h, g))) ++meet;
    }
    if (meet % 2 == 0) return false;
  }
  return true;
}

}  // namespace blockomega
