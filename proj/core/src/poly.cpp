#include "blockomega/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "blockomega/errors.hpp"

namespace blockomega {

Poly::Poly(Vector coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(std::size_t degree, Scalar c) {
  Vector v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) out << c_[i];
    if (i >= 1) out << (c_[i] != 1 ? "*" : "") << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

Poly poly_add(const Poly& a, const Poly& b) {
  Vector c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] ^= a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] ^= b.coeffs()[i];
  return Poly(std::move(c));
}

Poly poly_mul(const FieldCtx& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vector c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    f.axpy(a.coeffs()[i], b.coeffs(), std::span(c).subspan(i, b.coeffs().size()));
  }
  return Poly(std::move(c));
}

Poly poly_scale(const FieldCtx& f, Scalar s, const Poly& a) {
  Vector c = a.coeffs();
  f.scale(s, c);
  return Poly(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const FieldCtx& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Inconsistent("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  Vector r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  Vector q(r.size() - db, 0);
  const Scalar inv_lead = f.inv(b.lead());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const Scalar c = f.mul(r[i], inv_lead);
    q[i - db] = c;
    f.axpy(c, b.coeffs(), std::span(r).subspan(i - db, db + 1));
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_mod(const FieldCtx& f, const Poly& a, const Poly& b) { return poly_divmod(f, a, b).second; }
Poly poly_div(const FieldCtx& f, const Poly& a, const Poly& b) { return poly_divmod(f, a, b).first; }

Poly poly_monic(const FieldCtx& f, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(f, f.inv(a.lead()), a);
}

Poly poly_gcd(const FieldCtx& f, Poly a, Poly b) {
  while (!b.is_zero()) {
    a = poly_mod(f, a, b);
    std::swap(a, b);
  }
  return poly_monic(f, a);
}

Xgcd poly_xgcd(const FieldCtx& f, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(f, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_add(s0, poly_mul(f, q, s1));
    Poly t2 = poly_add(t0, poly_mul(f, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = f.inv(r0.lead());
  return {poly_scale(f, inv, r0), poly_scale(f, inv, s0), poly_scale(f, inv, t0)};
}

Poly poly_inverse_mod(const FieldCtx& f, const Poly& a, const Poly& m) {
  auto x = poly_xgcd(f, poly_mod(f, a, m), m);
  if (!x.g.is_one()) throw Inconsistent("polynomial not invertible modulo m");
  return poly_mod(f, x.s, m);
}

Poly poly_powmod(const FieldCtx& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly result = poly_mod(f, Poly::constant(1), m);
  base = poly_mod(f, base, m);
  while (e != 0) {
    if (e & 1U) result = poly_mod(f, poly_mul(f, result, base), m);
    e >>= 1U;
    if (e != 0) base = poly_mod(f, poly_mul(f, base, base), m);
  }
  return result;
}

Poly poly_pow(const FieldCtx& f, const Poly& a, unsigned e) {
  Poly result = Poly::constant(1);
  for (unsigned i = 0; i < e; ++i) result = poly_mul(f, result, a);
  return result;
}

Poly poly_derivative(const Poly& a) {
  // Characteristic 2: only odd-degree terms survive, with coefficient 1 * c.
  if (a.degree() < 1) return {};
  Vector d(a.coeffs().size() - 1, 0);
  for (std::size_t i = 1; i < a.coeffs().size(); i += 2) d[i - 1] = a.coeffs()[i];
  return Poly(std::move(d));
}

Poly poly_frobenius_root(const FieldCtx& f, const Poly& a) {
  Vector r((a.coeffs().size() + 1) / 2, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i % 2 == 1 && a.coeffs()[i] != 0) throw Inconsistent("not a perfect square");
    if (i % 2 == 0) r[i / 2] = f.sqrt(a.coeffs()[i]);
  }
  return Poly(std::move(r));
}

namespace {

// x^(q^k) mod m with q = 2^deg(field), via repeated squaring.
Poly frobenius_iterate(const FieldCtx& f, Poly h, unsigned squarings, const Poly& m) {
  for (unsigned i = 0; i < squarings; ++i) h = poly_mod(f, poly_mul(f, h, h), m);
  return h;
}

void append_with_multiplicity(std::vector<std::pair<Poly, unsigned>>& out,
                              const std::vector<std::pair<Poly, unsigned>>& parts, unsigned scale) {
  for (const auto& [p, e] : parts) out.emplace_back(p, e * scale);
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const FieldCtx& f, const Poly& input) {
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly a = poly_monic(f, input);
  if (a.degree() < 1) return out;
  const Poly da = poly_derivative(a);
  if (da.is_zero()) {
    append_with_multiplicity(out, squarefree_decomposition(f, poly_frobenius_root(f, a)), 2);
    return out;
  }
  Poly c = poly_gcd(f, a, da);
  Poly w = poly_div(f, a, c);
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(f, w, c);
    Poly z = poly_div(f, w, y);
    if (!z.is_one()) out.emplace_back(std::move(z), i);
    ++i;
    w = std::move(y);
    c = poly_div(f, c, w);
  }
  if (!c.is_one()) {
    append_with_multiplicity(out, squarefree_decomposition(f, poly_frobenius_root(f, c)), 2);
  }
  return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree_factorization(const FieldCtx& f, const Poly& input) {
  std::vector<std::pair<Poly, unsigned>> out;
  Poly rest = poly_monic(f, input);
  Poly h = poly_mod(f, Poly::x(), rest.degree() >= 1 ? rest : Poly::x());
  for (unsigned d = 1; rest.degree() >= static_cast<int>(2 * d); ++d) {
    h = frobenius_iterate(f, h, f.degree(), rest);
    Poly g = poly_gcd(f, rest, poly_add(h, Poly::x()));
    if (!g.is_one()) {
      rest = poly_div(f, rest, g);
      h = poly_mod(f, h, rest);
      out.emplace_back(std::move(g), d);
    }
  }
  if (rest.degree() >= 1) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<Poly> equal_degree_factorization(const FieldCtx& f, const Poly& input, unsigned d,
                                             std::uint64_t seed) {
  const Poly a = poly_monic(f, input);
  if (a.degree() <= static_cast<int>(d)) return {a};
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(a.degree());
  const unsigned trace_terms = f.degree() * d;
  for (;;) {
    Vector r(n, 0);
    for (auto& c : r) c = static_cast<Scalar>(rng()) & f.mask();
    Poly t = Poly(r);
    Poly acc = t;
    // T(r) = r + r^2 + r^4 + ... + r^(2^(md - 1)) mod a
    for (unsigned i = 1; i < trace_terms; ++i) {
      t = poly_mod(f, poly_mul(f, t, t), a);
      acc = poly_add(acc, t);
    }
    Poly g = poly_gcd(f, a, acc);
    if (g.degree() > 0 && g.degree() < a.degree()) {
      auto left = equal_degree_factorization(f, g, d, rng());
      auto right = equal_degree_factorization(f, poly_div(f, a, g), d, rng());
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

Factorization factor(const FieldCtx& f, const Poly& a, std::uint64_t seed) {
  if (a.is_zero()) throw Inconsistent("factor of the zero polynomial");
  Factorization out;
  out.unit = a.lead();
  std::mt19937_64 rng(seed);
  for (const auto& [sqf, mult] : squarefree_decomposition(f, a)) {
    for (const auto& [part, d] : distinct_degree_factorization(f, sqf)) {
      for (auto& p : equal_degree_factorization(f, part, d, rng())) out.factors.emplace_back(std::move(p), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  // Merge equal factors produced by different square-free layers.
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& fe : out.factors) {
    if (!merged.empty() && merged.back().first == fe.first) {
      merged.back().second += fe.second;
    } else {
      merged.push_back(std::move(fe));
    }
  }
  out.factors = std::move(merged);
  return out;
}

bool is_irreducible(const FieldCtx& f, const Poly& input) {
  if (input.degree() < 1) return false;
  const Poly a = poly_monic(f, input);
  const auto n = static_cast<unsigned>(a.degree());
  // Rabin: x^(q^n) = x mod a, and gcd(x^(q^(n/r)) - x, a) = 1 for primes r | n.
  const Poly x = poly_mod(f, Poly::x(), a);
  if (frobenius_iterate(f, x, f.degree() * n, a) != x) return false;
  unsigned rest = n;
  for (unsigned r = 2; r <= rest; ++r) {
    if (rest % r != 0) continue;
    while (rest % r == 0) rest /= r;
    Poly h = frobenius_iterate(f, x, f.degree() * (n / r), a);
    if (!poly_gcd(f, a, poly_add(h, x)).is_one()) return false;
  }
  return true;
}

Matrix evaluate(const FieldCtx& f, const Poly& p, const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("evaluate: matrix not square");
  Matrix result(a.rows(), a.cols());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    result = multiply(f, result, a);
    for (std::size_t k = 0; k < a.rows(); ++k) result(k, k) ^= p.coeffs()[i];
  }
  return result;
}

namespace {

// Minimal polynomial of `a` relative to the row vector v (Krylov sequence).
Poly local_min_poly(const FieldCtx& f, const Matrix& a, Vector v) {
  EchelonBasis krylov(f, a.rows(), /*track=*/true);
  for (;;) {
    auto red = krylov.reduce(v);
    if (red.in_span()) {
      Vector c = std::move(red.coefficients);
      c.push_back(1);  // v_k + sum c_j v_j = 0 in characteristic 2
      return Poly(std::move(c));
    }
    krylov.insert(v);
    v = vec_mat(f, v, a);
  }
}

Poly poly_lcm(const FieldCtx& f, const Poly& p, const Poly& q) {
  return poly_monic(f, poly_div(f, poly_mul(f, p, q), poly_gcd(f, p, q)));
}

}  // namespace

Poly min_poly(const FieldCtx& f, const Matrix& a, std::uint64_t seed) {
  if (!a.is_square()) throw DimensionMismatch("min_poly: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return Poly::constant(1);
  std::mt19937_64 rng(seed);
  Poly acc = Poly::constant(1);
  // A few random vectors usually suffice; standard basis vectors guarantee it.
  for (std::size_t attempt = 0; attempt < 4; ++attempt) {
    Vector v(n);
    for (auto& c : v) c = static_cast<Scalar>(rng()) & f.mask();
    acc = poly_lcm(f, acc, local_min_poly(f, a, std::move(v)));
    if (evaluate(f, acc, a).is_zero()) return acc;
  }
  Matrix residual = evaluate(f, acc, a);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = residual.row(i);
    if (std::all_of(row.begin(), row.end(), [](Scalar s) { return s == 0; })) continue;
    Vector v(n, 0);
    v[i] = 1;
    acc = poly_lcm(f, acc, local_min_poly(f, a, std::move(v)));
    residual = evaluate(f, acc, a);
  }
  return acc;
}

}  // namespace blockomega
