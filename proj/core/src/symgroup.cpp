#include "blockomega/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "blockomega/errors.hpp"
#include "blockomega/permgroup.hpp"

namespace blockomega {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  std::erase(parts_, 0u);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::staircase(std::uint32_t m) {
  std::vector<std::uint32_t> parts;
  for (std::uint32_t i = m; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

std::size_t Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> cur;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t left, std::uint32_t cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint32_t p = static_cast<std::uint32_t>(std::min<std::size_t>(left, cap)); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, static_cast<std::uint32_t>(n));
  return out;
}

std::uint64_t CycleType::centralizer_order() const {
  std::map<std::uint32_t, std::uint32_t> mult;
  for (auto p : parts.parts()) ++mult[p];
  unsigned __int128 z = 1;
  const auto limit = static_cast<unsigned __int128>(std::numeric_limits<std::uint64_t>::max());
  for (auto [len, count] : mult) {
    for (std::uint32_t j = 1; j <= count; ++j) {
      z *= static_cast<unsigned __int128>(len) * j;
      if (z > limit) throw CapExceeded("centralizer order exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(z);
}

bool CycleType::centralizer_order_is_odd() const {
  const auto& p = parts.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] % 2 == 0) return false;
    if (i > 0 && p[i] == p[i - 1]) return false;
  }
  return true;
}

namespace {

// First-column hook lengths with as many beads as parts.
std::vector<std::uint32_t> beta_set(const Partition& p) {
  const auto& parts = p.parts();
  const auto k = static_cast<std::uint32_t>(parts.size());
  std::vector<std::uint32_t> beta(k);
  for (std::uint32_t i = 0; i < k; ++i) beta[i] = parts[i] + (k - 1 - i);
  return beta;
}

Partition from_beta(std::vector<std::uint32_t> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const auto k = static_cast<std::uint32_t>(beta.size());
  std::vector<std::uint32_t> parts(k);
  for (std::uint32_t i = 0; i < k; ++i) parts[i] = beta[i] - (k - 1 - i);
  return Partition(std::move(parts));
}

using Memo = std::map<std::pair<std::vector<std::uint32_t>, std::size_t>, __int128>;

__int128 mn_rec(const Partition& shape, const std::vector<std::uint32_t>& cycles, std::size_t idx, Memo& memo) {
  if (idx == cycles.size()) return shape.empty() ? 1 : 0;
  auto key = std::make_pair(shape.parts(), idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::uint32_t r = cycles[idx];
  const auto beta = beta_set(shape);
  const std::set<std::uint32_t> beads(beta.begin(), beta.end());
  __int128 total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const std::uint32_t b = beta[i];
    if (b < r || beads.count(b - r)) continue;
    std::size_t between = 0;
    for (auto c : beta) between += (c > b - r && c < b);
    auto moved = beta;
    moved[i] = b - r;
    const __int128 sub = mn_rec(from_beta(std::move(moved)), cycles, idx + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Partition two_core(const Partition& p) {
  auto beta = beta_set(p);
  std::set<std::uint32_t> beads(beta.begin(), beta.end());
  for (bool moved = true; moved;) {
    moved = false;
    for (auto b : beads) {
      if (b >= 2 && !beads.count(b - 2)) {
        beads.erase(b);
        beads.insert(b - 2);
        moved = true;
        break;
      }
    }
  }
  return from_beta({beads.begin(), beads.end()});
}

bool is_triangular(std::size_t n) {
  std::size_t m = 0;
  while (m * (m + 1) / 2 < n) ++m;
  return m * (m + 1) / 2 == n;
}

std::vector<SymmetricBlock> blocks_of_Sn(std::size_t n) {
  std::vector<SymmetricBlock> out;
  for (std::uint32_t m = 0;; ++m) {
    const std::size_t s = std::size_t{m} * (m + 1) / 2;
    if (s > n) break;
    if ((n - s) % 2 == 0) out.push_back({Partition::staircase(m), s == n});
  }
  return out;
}

std::int64_t mn_character(const Partition& shape, const CycleType& type) {
  if (shape.size() != type.parts.size()) {
    throw DimensionMismatch("shape of size " + std::to_string(shape.size()) + " against cycle type of size " +
                            std::to_string(type.parts.size()));
  }
  Memo memo;
  const __int128 v = mn_rec(shape, type.parts.parts(), 0, memo);
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw CapExceeded("character value exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

CycleType diagonal_hooks(std::uint32_t m) {
  std::vector<std::uint32_t> parts;
  for (std::int64_t h = 2 * std::int64_t{m} - 1; h > 0; h -= 4) parts.push_back(static_cast<std::uint32_t>(h));
  return CycleType{Partition(std::move(parts))};
}

InvolutionSpec involution_spec(std::uint32_t m) {
  InvolutionSpec s;
  s.m = m;
  s.n = std::size_t{m} * (m + 1) / 2;
  s.transpositions = (std::size_t{m} * m + 1) / 4;
  s.fixed_points = s.n - 2 * s.transpositions;
  s.parts_count = diagonal_hooks(m).parts.length();
  s.parts_count_floor_formula = m >= 1 ? (m - 1) / 2 : 0;
  s.parts_count_discrepancy = s.parts_count != s.parts_count_floor_formula;
  if ((s.n - s.parts_count) % 2 != 0 || (s.n - s.parts_count) / 2 != s.transpositions) {
    throw InconsistentCombinatorics("transposition count " + std::to_string(s.transpositions) +
                                    " disagrees with (n - #parts) / 2 for m = " + std::to_string(m));
  }
  return s;
}

InnerProduct inner_product_with_trivial(std::uint32_t m) {
  const auto spec = involution_spec(m);
  const std::size_t n = spec.n;
  if (n > 12) throw CapExceeded("centralizer enumeration limited to n <= 12, got n = " + std::to_string(n));
  const auto c = static_cast<std::uint32_t>(spec.transpositions);
  const auto first_fixed = 2 * c;
  std::vector<Permutation> gens;
  if (c >= 1) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (c >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 2}, {1, 3}}));
  if (c >= 3) {
    std::vector<std::uint32_t> evens, odds;
    for (std::uint32_t i = 0; i < c; ++i) {
      evens.push_back(2 * i);
      odds.push_back(2 * i + 1);
    }
    gens.push_back(Permutation::from_cycles(n, {evens, odds}));
  }
  if (spec.fixed_points >= 2) gens.push_back(Permutation::from_cycles(n, {{first_fixed, first_fixed + 1}}));
  if (spec.fixed_points >= 3) {
    std::vector<std::uint32_t> cyc;
    for (auto i = first_fixed; i < n; ++i) cyc.push_back(i);
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  const auto group = enumerate_group(n, gens);

  std::map<Partition, std::uint64_t> by_type;
  for (std::size_t x = 0; x < group.order(); ++x) {
    std::vector<std::uint32_t> ct;
    for (auto l : group.element(x).cycle_type()) ct.push_back(static_cast<std::uint32_t>(l));
    ++by_type[Partition(std::move(ct))];
  }
  const auto shape = Partition::staircase(m);
  InnerProduct ip;
  ip.group_order = group.order();
  for (const auto& [type, count] : by_type) {
    ip.sum += static_cast<std::int64_t>(count) * mn_character(shape, CycleType{type});
  }
  const auto order = static_cast<std::int64_t>(ip.group_order);
  if (ip.sum % order != 0) {
    throw InconsistentCombinatorics("character sum " + std::to_string(ip.sum) + " not divisible by |C(t)| = " +
                                    std::to_string(order));
  }
  ip.value = ip.sum / order;
  return ip;
}

bool odd_centralizer_check(std::uint32_t m) { return diagonal_hooks(m).centralizer_order_is_odd(); }

}  // namespace blockomega
