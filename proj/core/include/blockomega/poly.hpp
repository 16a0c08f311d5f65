#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blockomega/matrix.hpp"

namespace blockomega {

// Univariate polynomial over GF(2^m), coefficients low degree first.
// The representation is kept normalised: no trailing zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Vector coeffs);
  static Poly constant(Scalar c) { return Poly(Vector{c}); }
  static Poly x() { return Poly(Vector{0, 1}); }
  static Poly monomial(std::size_t degree, Scalar c = 1);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  Scalar coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Scalar lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const Vector& coeffs() const noexcept { return c_; }

  friend bool operator==(const Poly&, const Poly&) = default;
  friend auto operator<=>(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return std::lexicographical_compare_three_way(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(),
                                                  b.c_.rend());
  }

  std::string to_string() const;

 private:
  void normalize();
  Vector c_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& f, const Poly& a, const Poly& b);
Poly poly_scale(const FieldCtx& f, Scalar s, const Poly& a);
std::pair<Poly, Poly> poly_divmod(const FieldCtx& f, const Poly& a, const Poly& b);
Poly poly_mod(const FieldCtx& f, const Poly& a, const Poly& b);
Poly poly_div(const FieldCtx& f, const Poly& a, const Poly& b);
Poly poly_monic(const FieldCtx& f, const Poly& a);
// Monic gcd (zero if both inputs are zero).
Poly poly_gcd(const FieldCtx& f, Poly a, Poly b);
// Returns (g, s, t) with s*a + t*b = g monic.
struct Xgcd {
  Poly g, s, t;
};
Xgcd poly_xgcd(const FieldCtx& f, const Poly& a, const Poly& b);
// Inverse of a modulo m; requires gcd(a, m) = 1.
Poly poly_inverse_mod(const FieldCtx& f, const Poly& a, const Poly& m);
Poly poly_powmod(const FieldCtx& f, Poly base, std::uint64_t e, const Poly& m);
Poly poly_derivative(const Poly& a);
// g with g^2 = a; requires a' = 0 (characteristic 2).
Poly poly_frobenius_root(const FieldCtx& f, const Poly& a);
Poly poly_pow(const FieldCtx& f, const Poly& a, unsigned e);

// Complete factorisation over GF(2^m): unit * prod factor^multiplicity, with
// monic irreducible factors sorted by (degree, coefficients).
struct Factorization {
  Scalar unit = 0;
  std::vector<std::pair<Poly, unsigned>> factors;
};
Factorization factor(const FieldCtx& f, const Poly& a, std::uint64_t seed = 0);

// Square-free decomposition of a monic polynomial: pairs (square-free part, multiplicity).
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const FieldCtx& f, const Poly& a);
// Distinct-degree factorisation of a monic square-free polynomial: (product of
// all irreducible factors of degree d, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree_factorization(const FieldCtx& f, const Poly& a);
// Splits a monic square-free product of irreducibles of degree d with the
// additive trace map; returns the irreducible factors.
std::vector<Poly> equal_degree_factorization(const FieldCtx& f, const Poly& a, unsigned d,
                                             std::uint64_t seed);

bool is_irreducible(const FieldCtx& f, const Poly& a);

// p(A) for a square matrix A.
Matrix evaluate(const FieldCtx& f, const Poly& p, const Matrix& a);

// Monic minimal polynomial of a square matrix.
Poly min_poly(const FieldCtx& f, const Matrix& a, std::uint64_t seed = 0);

}  // namespace blockomega
