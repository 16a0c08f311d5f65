#include "blockomega/field.hpp"

#include <map>
#include <mutex>
#include <string>

#include "blockomega/errors.hpp"
#include "blockomega/permgroup.hpp"

namespace blockomega {
namespace {

int gf2_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = gf2_degree(m);
  for (int da = gf2_degree(a); da >= dm; da = gf2_degree(a)) a ^= m << (da - dm);
  return a;
}

// Product of two residues of degree < 32, reduced modulo m.
std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1U;
    a <<= 1U;
    if (gf2_degree(a) >= gf2_degree(m)) a ^= m;
  }
  return gf2_mod(r, m);
}

std::uint64_t gf2_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = gf2_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^k) mod m
std::uint64_t gf2_frobenius_power(unsigned k, std::uint64_t m) {
  std::uint64_t r = gf2_mod(2, m);
  for (unsigned i = 0; i < k; ++i) r = gf2_mulmod(r, r, m);
  return r;
}

}  // namespace

bool gf2_is_irreducible(std::uint64_t poly) {
  const int n = gf2_degree(poly);
  if (n < 1) return false;
  if (n == 1) return true;
  if (gf2_frobenius_power(static_cast<unsigned>(n), poly) != gf2_mod(2, poly)) return false;
  unsigned rest = static_cast<unsigned>(n);
  for (unsigned r = 2; r <= rest; ++r) {
    if (rest % r != 0) continue;
    while (rest % r == 0) rest /= r;
    const std::uint64_t h = gf2_frobenius_power(static_cast<unsigned>(n) / r, poly) ^ 2U;
    if (gf2_gcd(poly, gf2_mod(h, poly)) != 1) return false;
  }
  return true;
}

std::uint64_t smallest_irreducible(unsigned m) {
  if (m < 1 || m > kMaxFieldDegree) {
    throw DegreeOutOfRange("field degree " + std::to_string(m) + " outside [1, 32]");
  }
  const std::uint64_t lo = std::uint64_t{1} << m;
  for (std::uint64_t p = lo; p < 2 * lo; ++p) {
    if (gf2_is_irreducible(p)) return p;
  }
  throw DegreeOutOfRange("no irreducible polynomial found");  // unreachable
}

FieldCtx::FieldCtx(unsigned m) : m_(m), modulus_(smallest_irreducible(m)) {
  if (m_ > 16) return;
  const std::uint64_t q = size();
  // Smallest element whose multiplicative order is q - 1.
  for (Scalar g = (q == 2 ? 1 : 2); g < q; ++g) {
    std::uint64_t order = 0;
    Scalar x = g;
    do {
      x = clmul_reduce(x, g);
      ++order;
    } while (x != g && order < q);
    if (order == q - 1) {
      generator_ = g;
      break;
    }
  }
  log_.assign(q, 0);
  exp_.assign(2 * (q - 1) + 1, 0);
  Scalar x = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    exp_[i] = x;
    exp_[i + q - 1] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = clmul_reduce(x, generator_);
  }
}

Scalar FieldCtx::clmul_reduce(Scalar a, Scalar b) const noexcept {
  if (m_ == 1) return a & b;
  return static_cast<Scalar>(gf2_mulmod(a, b, modulus_));
}

Scalar FieldCtx::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1;
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

Scalar FieldCtx::inv(Scalar a) const {
  if (a == 0) throw Inconsistent("inverse of zero in GF(2^m)");
  if (!log_.empty()) return exp_[(size() - 1 - log_[a]) % (size() - 1)];
  return pow(a, size() - 2);
}

Scalar FieldCtx::sqrt(Scalar a) const noexcept {
  Scalar r = a;
  for (unsigned i = 1; i < m_; ++i) r = mul(r, r);
  return r;
}

void FieldCtx::axpy(Scalar a, std::span<const Scalar> x, std::span<Scalar> y) const noexcept {
  if (a == 0) return;
  const std::size_t n = x.size();
  if (a == 1) {
    for (std::size_t i = 0; i < n; ++i) y[i] ^= x[i];
    return;
  }
  if (!log_.empty()) {
    const std::uint32_t la = log_[a];
    const Scalar* ex = exp_.data() + la;
    const std::uint32_t* lg = log_.data();
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar xi = x[i];
      if (xi != 0) y[i] ^= ex[lg[xi]];
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != 0) y[i] ^= clmul_reduce(a, x[i]);
  }
}

void FieldCtx::scale(Scalar a, std::span<Scalar> x) const noexcept {
  if (a == 1) return;
  for (auto& v : x) v = mul(a, v);
}

FieldPtr field_ctx(unsigned m) {
  if (m < 1 || m > kMaxFieldDegree) {
    throw DegreeOutOfRange("field degree " + std::to_string(m) + " outside [1, 32]");
  }
  static std::mutex mutex;
  static std::map<unsigned, FieldPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const FieldCtx>(m);
  return slot;
}

unsigned splitting_degree(std::uint64_t exponent) {
  while (exponent != 0 && exponent % 2 == 0) exponent /= 2;
  if (exponent <= 1) return 1;
  unsigned m = 1;
  std::uint64_t r = 2 % exponent;
  while (r != 1) {
    r = (r * 2) % exponent;
    ++m;
  }
  return m;
}

unsigned splitting_degree(const GroupData& group) { return splitting_degree(group.exponent()); }

}  // namespace blockomega
