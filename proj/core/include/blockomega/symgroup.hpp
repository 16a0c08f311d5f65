#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace blockomega {

// A partition, parts weakly decreasing and positive.
class Partition {
 public:
  Partition() = default;
  // Sorts into decreasing order and drops zero parts.
  explicit Partition(std::vector<std::uint32_t> parts);
  static Partition staircase(std::uint32_t m);

  const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
};

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(std::size_t n);

// A conjugacy class of the symmetric group, named by its cycle lengths.
struct CycleType {
  Partition parts;
  // prod_i i^{m_i} m_i!; throws CapExceeded past 64 bits.
  std::uint64_t centralizer_order() const;
  // Parity of the centralizer order without computing it.
  bool centralizer_order_is_odd() const;
};

Partition two_core(const Partition& p);

struct SymmetricBlock {
  Partition core;
  bool defect_zero = false;
};
// One entry per staircase core of size s <= n with n - s even, by increasing s.
std::vector<SymmetricBlock> blocks_of_Sn(std::size_t n);

bool is_triangular(std::size_t n);

// chi_shape(type) by the Murnaghan-Nakayama rule. Throws DimensionMismatch
// if the sizes differ and CapExceeded if the value leaves 64 bits.
std::int64_t mn_character(const Partition& shape, const CycleType& type);

// [2m-1, 2m-5, ...]: the cycle type of the diagonal hook lengths of the staircase.
CycleType diagonal_hooks(std::uint32_t m);

struct InvolutionSpec {
  std::uint32_t m = 0;
  std::size_t n = 0;
  std::size_t transpositions = 0;  // floor((m^2 + 1) / 4)
  std::size_t fixed_points = 0;
  std::size_t parts_count = 0;                // parts of diagonal_hooks(m), i.e. ceil(m / 2)
  std::size_t parts_count_floor_formula = 0;  // floor((m - 1) / 2)
  bool parts_count_discrepancy = false;
};
// Throws InconsistentCombinatorics unless transpositions = (n - parts_count) / 2.
InvolutionSpec involution_spec(std::uint32_t m);

struct InnerProduct {
  std::int64_t sum = 0;          // sum over C(t) of chi(x)
  std::uint64_t group_order = 0;  // |C(t)|
  std::int64_t value = 0;        // sum / |C(t)|
};
// <chi_staircase restricted to C(t), 1> for the involution t of involution_spec(m),
// with C(t) enumerated as a permutation group. Needs n <= 12 (CapExceeded).
InnerProduct inner_product_with_trivial(std::uint32_t m);

bool odd_centralizer_check(std::uint32_t m);

}  // namespace blockomega
