#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace blockomega {

class GroupData;

// Bit-packed element of GF(2^m): bit i is the coefficient of x^i in the
// residue modulo the field polynomial.
using Scalar = std::uint32_t;

inline constexpr unsigned kMaxFieldDegree = 32;

// GF(2^m) = GF(2)[x] / (modulus). Immutable after construction.
//
// Degrees up to 16 use log/antilog tables; larger degrees fall back to
// carry-less multiplication. Both paths serve m = 1 as well.
class FieldCtx {
 public:
  explicit FieldCtx(unsigned m);

  unsigned degree() const noexcept { return m_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << m_; }
  Scalar mask() const noexcept { return static_cast<Scalar>(size() - 1); }
  // A primitive element when tables are in use, otherwise 0.
  Scalar generator() const noexcept { return generator_; }

  Scalar mul(Scalar a, Scalar b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return clmul_reduce(a, b);
  }
  Scalar square(Scalar a) const noexcept { return mul(a, a); }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  // Inverse of the Frobenius map a -> a^2.
  Scalar sqrt(Scalar a) const noexcept;

  // y += a * x
  void axpy(Scalar a, std::span<const Scalar> x, std::span<Scalar> y) const noexcept;
  void scale(Scalar a, std::span<Scalar> x) const noexcept;

  bool operator==(const FieldCtx& other) const noexcept {
    return m_ == other.m_ && modulus_ == other.modulus_;
  }

 private:
  Scalar clmul_reduce(Scalar a, Scalar b) const noexcept;

  unsigned m_;
  std::uint64_t modulus_;
  Scalar generator_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Scalar> exp_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

// Smallest integer-encoded irreducible polynomial of degree m over GF(2).
std::uint64_t smallest_irreducible(unsigned m);

// Rabin irreducibility test for a GF(2) polynomial encoded as bits.
bool gf2_is_irreducible(std::uint64_t poly);

// Throws DegreeOutOfRange unless 1 <= m <= 32.
FieldPtr field_ctx(unsigned m);

// Multiplicative order of 2 modulo the odd part of `exponent` (1 if the odd
// part is 1). GF(2^result) is a splitting field for a group of that exponent.
unsigned splitting_degree(std::uint64_t exponent);
unsigned splitting_degree(const GroupData& group);

}  // namespace blockomega
