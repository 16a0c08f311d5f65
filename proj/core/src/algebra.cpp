#include "blockomega/algebra.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "blockomega/errors.hpp"

namespace blockomega {

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

Algebra::Algebra(FieldPtr field, std::size_t dim, std::vector<std::vector<Term>> products, Vector unit,
                 bool commutative)
    : field_(std::move(field)), dim_(dim), unit_(std::move(unit)), commutative_(commutative) {
  if (products.size() != dim * dim) throw DimensionMismatch("structure constants need dim^2 entries");
  if (unit_.size() != dim) throw DimensionMismatch("unit has wrong length");
  offsets_.resize(dim * dim + 1);
  std::size_t total = 0;
  for (const auto& p : products) total += p.size();
  terms_.reserve(total);
  for (std::size_t ij = 0; ij < products.size(); ++ij) {
    offsets_[ij] = static_cast<std::uint32_t>(terms_.size());
    for (const auto& t : products[ij]) {
      if (t.index >= dim) throw DimensionMismatch("structure constant index out of range");
      if (t.coeff != 0) terms_.push_back(t);
    }
  }
  offsets_[dim * dim] = static_cast<std::uint32_t>(terms_.size());
}

Algebra::Algebra(FieldPtr field, std::size_t dim, Vector unit, bool commutative)
    : field_(std::move(field)), dim_(dim), unit_(std::move(unit)), commutative_(commutative) {
  if (unit_.size() != dim) throw DimensionMismatch("unit has wrong length");
}

Algebra Algebra::from_triples(FieldPtr field, std::size_t dim,
                              std::vector<std::pair<std::uint64_t, Term>> triples, Vector unit,
                              bool commutative) {
  Algebra a(std::move(field), dim, std::move(unit), commutative);
  std::sort(triples.begin(), triples.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second.index < y.second.index;
  });
  a.offsets_.assign(dim * dim + 1, 0);
  a.terms_.reserve(triples.size());
  std::size_t pos = 0;
  for (std::uint64_t ij = 0; ij < dim * dim; ++ij) {
    a.offsets_[ij] = static_cast<std::uint32_t>(a.terms_.size());
    while (pos < triples.size() && triples[pos].first == ij) {
      const Term& t = triples[pos].second;
      if (t.index >= dim) throw DimensionMismatch("structure constant index out of range");
      if (!a.terms_.empty() && a.offsets_[ij] < a.terms_.size() && a.terms_.back().index == t.index) {
        a.terms_.back().coeff ^= t.coeff;
        if (a.terms_.back().coeff == 0) a.terms_.pop_back();
      } else if (t.coeff != 0) {
        a.terms_.push_back(t);
      }
      ++pos;
    }
  }
  if (pos != triples.size()) throw DimensionMismatch("structure constant pair index out of range");
  a.offsets_[dim * dim] = static_cast<std::uint32_t>(a.terms_.size());
  return a;
}

Algebra Algebra::from_matrices(FieldPtr field, const std::vector<Matrix>& basis,
                               const std::vector<std::size_t>& pivots) {
  const auto& f = *field;
  const std::size_t d = basis.size();
  if (pivots.size() != d) throw DimensionMismatch("one pivot per basis matrix required");
  auto coords = [&](const Matrix& m) {
    const auto flat = m.flat();
    Vector c(d);
    for (std::size_t k = 0; k < d; ++k) c[k] = flat[pivots[k]];
    // Verify membership: the reconstruction must match exactly.
    Vector check(flat.size(), 0);
    for (std::size_t k = 0; k < d; ++k) f.axpy(c[k], basis[k].flat(), check);
    if (!std::equal(check.begin(), check.end(), flat.begin())) {
      throw DimensionMismatch("matrix product left the span of the basis");
    }
    return c;
  };
  std::vector<std::vector<Term>> products(d * d);
  bool commutative = true;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix prod = blockomega::multiply(f, basis[i], basis[j]);
      const Vector c = coords(prod);
      for (std::size_t k = 0; k < d; ++k) {
        if (c[k] != 0) products[i * d + j].push_back({static_cast<std::uint32_t>(k), c[k]});
      }
    }
  }
  for (std::size_t i = 0; i < d && commutative; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto& a = products[i * d + j];
      const auto& b = products[j * d + i];
      if (a.size() != b.size() || !std::equal(a.begin(), a.end(), b.begin(), [](const Term& x, const Term& y) {
            return x.index == y.index && x.coeff == y.coeff;
          })) {
        commutative = false;
        break;
      }
    }
  }
  Vector unit;
  if (d > 0) unit = coords(Matrix::identity(basis[0].rows()));
  return Algebra(std::move(field), d, std::move(products), std::move(unit), commutative);
}

Vector Algebra::basis_vector(std::size_t i) const {
  Vector v(dim_, 0);
  v[i] = 1;
  return v;
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
  thread_local std::vector<std::uint32_t> nza, nzb;
  nza.clear();
  nzb.clear();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] != 0) nza.push_back(static_cast<std::uint32_t>(i));
    if (b[i] != 0) nzb.push_back(static_cast<std::uint32_t>(i));
  }
  Vector out(dim_, 0);
  const auto& f = *field_;
  for (auto i : nza) {
    const std::size_t row = i * dim_;
    for (auto j : nzb) {
      const auto lo = offsets_[row + j];
      const auto hi = offsets_[row + j + 1];
      if (lo == hi) continue;
      const Scalar s = f.mul(a[i], b[j]);
      for (auto t = lo; t < hi; ++t) {
        const auto& term = terms_[t];
        out[term.index] ^= term.coeff == 1 ? s : f.mul(s, term.coeff);
      }
    }
  }
  return out;
}

Vector Algebra::add(Vector a, const Vector& b) const {
  for (std::size_t i = 0; i < dim_; ++i) a[i] ^= b[i];
  return a;
}

Vector Algebra::scale(Scalar s, Vector a) const {
  field_->scale(s, a);
  return a;
}

Vector Algebra::evaluate(const Poly& p, const Vector& x, const Vector& one) const {
  Vector r = zero();
  for (int k = p.degree(); k >= 0; --k) {
    r = multiply(r, x);
    field_->axpy(p.coeff(static_cast<std::size_t>(k)), one, r);
  }
  return r;
}

Vector Algebra::power(const Vector& x, std::uint64_t e, const Vector& one) const {
  Vector result = one;
  Vector base = x;
  while (e > 0) {
    if (e & 1U) result = multiply(result, base);
    e >>= 1U;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

namespace {

using Reducer = std::function<Vector(Vector)>;

Poly krylov_min_poly(const Algebra& a, const Vector& x, const Vector& one, const Reducer* reduce) {
  EchelonBasis powers(a.field(), a.dimension(), true);
  Vector v = reduce != nullptr ? (*reduce)(one) : one;
  for (;;) {
    auto red = powers.reduce(v);
    if (red.in_span()) {
      Vector c = std::move(red.coefficients);
      c.resize(powers.inserted(), 0);
      c.push_back(1);
      return Poly(std::move(c));
    }
    powers.insert(v);
    v = a.multiply(v, x);
    if (reduce != nullptr) v = (*reduce)(std::move(v));
  }
}

Vector evaluate_reduced(const Algebra& a, const Poly& p, const Vector& x, const Vector& one,
                        const Reducer* reduce) {
  Vector r = a.evaluate(p, x, one);
  return reduce != nullptr ? (*reduce)(std::move(r)) : r;
}

std::vector<Vector> primary_split(const Algebra& a, const Vector& x, const Vector& one,
                                  const Factorization& fac, const Reducer* reduce) {
  const auto& f = a.field();
  if (fac.factors.size() <= 1) return {one};
  std::vector<Poly> parts;
  Poly full = Poly::constant(1);
  for (const auto& [p, mult] : fac.factors) {
    parts.push_back(poly_pow(f, p, mult));
    full = poly_mul(f, full, parts.back());
  }
  std::vector<Vector> out;
  for (const auto& q : parts) {
    const Poly cofactor = poly_div(f, full, q);
    const Poly inv = poly_inverse_mod(f, poly_mod(f, cofactor, q), q);
    const Poly u = poly_mod(f, poly_mul(f, cofactor, inv), full);
    out.push_back(evaluate_reduced(a, u, x, one, reduce));
  }
  return out;
}

Vector random_element(const Algebra& a, const std::vector<Vector>& span, std::mt19937_64& rng) {
  Vector x = a.zero();
  const Scalar mask = a.field().mask();
  for (const auto& b : span) a.field().axpy(static_cast<Scalar>(rng()) & mask, b, x);
  return x;
}

bool has_nonlinear_factor(const Factorization& fac) {
  return std::any_of(fac.factors.begin(), fac.factors.end(),
                     [](const auto& pf) { return pf.first.degree() > 1; });
}

unsigned lift_exponent(std::size_t dim) {
  unsigned s = 0;
  while ((std::size_t{1} << s) < std::max<std::size_t>(dim, 2)) ++s;
  return s;
}

// e split into a lifted idempotent f and its complement e + f.
std::vector<Vector> lift_pair(const Algebra& a, const Vector& e, const Vector& approx) {
  const Vector f = a.power(approx, std::uint64_t{1} << lift_exponent(a.dimension()), e);
  return {f, a.add(e, f)};
}

bool nontrivial_split(const Algebra& a, const Vector& e, const std::vector<Vector>& parts) {
  if (parts.size() < 2) return false;
  for (const auto& p : parts) {
    if (std::all_of(p.begin(), p.end(), [](Scalar s) { return s == 0; }) || p == e) return false;
  }
  (void)a;
  return true;
}

// Semisimple quotient methods once the radical is known.
std::optional<std::vector<Vector>> split_via_radical(const Algebra& a, const Vector& e,
                                                     const std::vector<Vector>& corner,
                                                     const std::vector<Vector>& rad) {
  const auto& f = a.field();
  EchelonBasis jbasis(f, a.dimension());
  for (const auto& r : rad) jbasis.insert(r);
  const Reducer reduce = [&jbasis](Vector v) { return jbasis.reduce(v).residual; };

  EchelonBasis qbasis(f, a.dimension());
  for (const auto& c : corner) qbasis.insert(reduce(c));
  const auto& q = qbasis.rows();
  if (q.size() <= 1) return std::nullopt;
  const Vector one = reduce(e);

  auto from_quotient = [&](const std::vector<Vector>& parts) -> std::optional<std::vector<Vector>> {
    for (const auto& p : parts) {
      if (p == one || std::all_of(p.begin(), p.end(), [](Scalar s) { return s == 0; })) continue;
      auto lifted = lift_pair(a, e, p);
      if (nontrivial_split(a, e, lifted)) return lifted;
    }
    return std::nullopt;
  };

  // Center of the quotient, then its Frobenius-fixed part: a split
  // commutative semisimple algebra of dimension = number of simple factors.
  const std::size_t r = q.size();
  Matrix comm(r, r * a.dimension());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t b = 0; b < r; ++b) {
      const Vector c = reduce(a.add(a.multiply(q[k], q[b]), a.multiply(q[b], q[k])));
      std::copy(c.begin(), c.end(), comm.row(k).begin() + static_cast<std::ptrdiff_t>(b * a.dimension()));
    }
  }
  const Matrix zc = nullspace(f, transpose(comm));
  std::vector<Vector> center;
  for (std::size_t i = 0; i < zc.rows(); ++i) {
    Vector z = a.zero();
    for (std::size_t k = 0; k < r; ++k) f.axpy(zc(i, k), q[k], z);
    center.push_back(std::move(z));
  }
  if (center.size() >= 2) {
    EchelonBasis zbasis(f, a.dimension());
    for (const auto& z : center) zbasis.insert(z);
    const auto& zr = zbasis.rows();
    Matrix phi(zr.size(), zr.size());
    for (std::size_t i = 0; i < zr.size(); ++i) {
      Vector y = zr[i];
      for (unsigned s = 0; s < f.degree(); ++s) y = reduce(a.multiply(y, y));
      const auto coords = zbasis.row_coordinates(y);
      if (!coords) throw DecompositionFailed("quotient center is not closed under Frobenius");
      std::copy(coords->begin(), coords->end(), phi.row(i).begin());
      phi(i, i) ^= 1;
    }
    const Matrix fixed = nullspace(f, transpose(phi));
    for (std::size_t i = 0; i < fixed.rows(); ++i) {
      Vector z = a.zero();
      for (std::size_t k = 0; k < zr.size(); ++k) f.axpy(fixed(i, k), zr[k], z);
      const Poly p = krylov_min_poly(a, z, one, &reduce);
      if (p.degree() < 2) continue;
      const auto fac = factor(f, p);
      if (auto out = from_quotient(primary_split(a, z, one, fac, &reduce))) return out;
    }
  }

  // Simple quotient: look for an element with reducible minimal polynomial
  // or a nilpotent, over basis elements and pairwise sums.
  auto try_element = [&](const Vector& y) -> std::optional<std::vector<Vector>> {
    const Poly p = krylov_min_poly(a, y, one, &reduce);
    if (p.degree() < 2) return std::nullopt;
    const auto fac = factor(f, p);
    if (fac.factors.size() >= 2) return from_quotient(primary_split(a, y, one, fac, &reduce));
    const auto& [base, mult] = fac.factors.front();
    if (base.degree() != 1 || mult < 2) return std::nullopt;
    Vector n = y;
    f.axpy(base.coeff(0), one, n);
    std::vector<Vector> right;
    EchelonBasis rb(f, a.dimension());
    for (const auto& qb : q) {
      const Vector v = reduce(a.multiply(n, qb));
      if (rb.insert(v)) right.push_back(v);
    }
    if (right.empty() || right.size() >= q.size()) return std::nullopt;
    // Left identity of the right ideal nQ: sum c_j r_j with (sum c_j r_j) r_i = r_i.
    const std::size_t nr = right.size();
    const std::size_t w = a.dimension();
    Matrix lhs(nr * w, nr);
    Matrix rhs(nr * w, 1);
    for (std::size_t j = 0; j < nr; ++j) {
      for (std::size_t i = 0; i < nr; ++i) {
        const Vector prod = reduce(a.multiply(right[j], right[i]));
        for (std::size_t c = 0; c < w; ++c) lhs(i * w + c, j) = prod[c];
      }
    }
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t c = 0; c < w; ++c) rhs(i * w + c, 0) = right[i][c];
    }
    try {
      const Matrix sol = solve(f, lhs, rhs);
      Vector idem = a.zero();
      for (std::size_t j = 0; j < nr; ++j) f.axpy(sol(j, 0), right[j], idem);
      return from_quotient({idem});
    } catch (const Inconsistent&) {
      return std::nullopt;
    }
  };
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (auto out = try_element(q[i])) return out;
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (auto out = try_element(a.add(q[i], q[j]))) return out;
      Vector mixed = q[i];
      f.axpy(f.generator() != 0 ? f.generator() : 1, q[j], mixed);
      if (auto out = try_element(mixed)) return out;
    }
  }
  return std::nullopt;
}

std::vector<Vector> deterministic_split(const Algebra& a, const Vector& e, const std::vector<Vector>& corner,
                                        const SplitOptions& options) {
  const auto& f = a.field();
  for (const auto& b : corner) {
    const Poly p = a.min_poly(b, e);
    const auto fac = factor(f, p, options.seed);
    if (a.is_commutative() && has_nonlinear_factor(fac)) {
      throw SplittingFieldTooSmall("minimal polynomial " + p.to_string() + " does not split");
    }
    if (fac.factors.size() >= 2) return primary_split(a, b, e, fac, nullptr);
  }
  if (a.is_commutative()) {
    // A commutative non-local algebra with residue fields k always has a
    // basis element whose residues differ across the local factors.
    throw DecompositionFailed("commutative corner is not local but no basis element splits it");
  }
  if (corner.size() * f.degree() <= options.radical_cap) {
    const auto rad = radical(a, corner, options.radical_cap);
    if (auto out = split_via_radical(a, e, corner, rad)) return *out;
  }
  throw DecompositionFailed("no splitting element found for a non-local corner of dimension " +
                            std::to_string(corner.size()));
}

}  // namespace

Poly Algebra::min_poly(const Vector& x, const Vector& one) const { return krylov_min_poly(*this, x, one, nullptr); }

bool Algebra::is_nilpotent(const Vector& x) const {
  Vector y = x;
  for (unsigned s = 0; s <= lift_exponent(dim_); ++s) {
    if (std::all_of(y.begin(), y.end(), [](Scalar v) { return v == 0; })) return true;
    y = multiply(y, y);
  }
  return std::all_of(y.begin(), y.end(), [](Scalar v) { return v == 0; });
}

std::vector<Vector> Algebra::sandwich_basis(const Vector& e, const Vector& f,
                                            const std::vector<Vector>* spanning) const {
  EchelonBasis basis(*field_, dim_);
  if (spanning != nullptr) {
    for (const auto& s : *spanning) basis.insert(multiply(multiply(e, s), f));
  } else {
    for (std::size_t i = 0; i < dim_; ++i) basis.insert(multiply(multiply(e, basis_vector(i)), f));
  }
  return basis.rows();
}

std::vector<Vector> primary_idempotents(const Algebra& a, const Vector& x, const Vector& e,
                                        const Factorization& fac) {
  return primary_split(a, x, e, fac, nullptr);
}

bool is_local_corner(const Algebra& a, const Vector& e, const std::vector<Vector>& corner) {
  const auto& f = a.field();
  EchelonBasis rad(f, a.dimension());
  for (const auto& b : corner) {
    const Poly p = a.min_poly(b, e);
    const auto fac = factor(f, p);
    if (fac.factors.size() != 1 || fac.factors.front().first.degree() != 1) return false;
    Vector n = b;
    f.axpy(fac.factors.front().first.coeff(0), e, n);
    rad.insert(n);
  }
  if (rad.size() + 1 != corner.size()) return false;
  const auto& n = rad.rows();
  for (const auto& x : n) {
    for (const auto& y : n) {
      if (!rad.contains(a.multiply(x, y))) return false;
    }
  }
  // Powers N, N^2, ... must reach zero.
  std::vector<Vector> level = n;
  while (!level.empty()) {
    EchelonBasis next(f, a.dimension());
    for (const auto& x : level) {
      for (const auto& y : n) next.insert(a.multiply(x, y));
    }
    if (next.size() >= level.size()) return false;
    level = next.rows();
  }
  return true;
}

std::optional<std::vector<Vector>> split_idempotent(const Algebra& a, const Vector& e,
                                                    const std::vector<Vector>& corner,
                                                    const SplitOptions& options) {
  if (corner.size() <= 1) return std::nullopt;
  const auto& f = a.field();
  std::mt19937_64 rng(options.seed);
  for (int draw = 0; draw < options.random_draws; ++draw) {
    const Vector x = random_element(a, corner, rng);
    const Poly p = a.min_poly(x, e);
    if (p.degree() < 2) continue;
    const auto fac = factor(f, p, derive_seed(options.seed, static_cast<std::uint64_t>(draw)));
    if (a.is_commutative() && has_nonlinear_factor(fac)) {
      throw SplittingFieldTooSmall("minimal polynomial " + p.to_string() + " does not split over GF(2^" +
                                   std::to_string(f.degree()) + ")");
    }
    if (fac.factors.size() >= 2) return primary_split(a, x, e, fac, nullptr);
  }
  if (is_local_corner(a, e, corner)) return std::nullopt;
  return deterministic_split(a, e, corner, options);
}

std::vector<Vector> primitive_idempotents(const Algebra& a, const Vector& e, const SplitOptions& options) {
  std::vector<Vector> done;
  struct Pending {
    Vector idem;
    std::vector<Vector> corner;
    std::uint64_t seed;
  };
  std::vector<Pending> stack;
  stack.push_back({e, a.sandwich_basis(e, e), options.seed});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    SplitOptions local = options;
    local.seed = cur.seed;
    auto parts = split_idempotent(a, cur.idem, cur.corner, local);
    if (!parts) {
      done.push_back(std::move(cur.idem));
      continue;
    }
    for (std::size_t i = parts->size(); i-- > 0;) {
      auto& p = (*parts)[i];
      auto corner = a.sandwich_basis(p, p, &cur.corner);
      stack.push_back({std::move(p), std::move(corner), derive_seed(cur.seed, i)});
    }
  }
  return done;
}

// Radical by the iterated trace forms g_i(x) = (Tr(lift(L_x)^(2^i)) / 2^i) mod 2
// on the GF(2)-algebra obtained by restriction of scalars.
std::vector<Vector> radical(const Algebra& a, const std::vector<Vector>& basis, std::size_t cap) {
  const auto& f = a.field();
  const unsigned m = f.degree();
  EchelonBasis kb(f, a.dimension());
  for (const auto& b : basis) kb.insert(b);
  const auto& c = kb.rows();
  const std::size_t d = c.size();
  const std::size_t big = d * m;
  if (big > cap) {
    throw CapExceeded("radical computation needs GF(2)-dimension " + std::to_string(big) + " > " +
                      std::to_string(cap));
  }
  if (big == 0) return {};

  auto f2_coords = [&](const Vector& v) {
    const auto coords = kb.row_coordinates(v);
    if (!coords) throw DimensionMismatch("radical: product left the subalgebra");
    std::vector<std::uint8_t> out(big, 0);
    for (std::size_t i = 0; i < d; ++i) {
      for (unsigned s = 0; s < m; ++s) out[i * m + s] = static_cast<std::uint8_t>(((*coords)[i] >> s) & 1U);
    }
    return out;
  };
  auto f2_element = [&](const std::vector<std::uint8_t>& bits) {
    Vector v = a.zero();
    for (std::size_t i = 0; i < d; ++i) {
      Scalar s = 0;
      for (unsigned t = 0; t < m; ++t) s |= static_cast<Scalar>(bits[i * m + t]) << t;
      f.axpy(s, c[i], v);
    }
    return v;
  };
  std::vector<Vector> f2_basis;
  for (std::size_t i = 0; i < d; ++i) {
    for (unsigned s = 0; s < m; ++s) f2_basis.push_back(a.scale(static_cast<Scalar>(1U << s), c[i]));
  }

  auto trace_form = [&](const Vector& x, unsigned level) -> std::uint8_t {
    const std::uint32_t mod_mask = (2U << level) - 1U;
    std::vector<std::uint32_t> mat(big * big);
    for (std::size_t r = 0; r < big; ++r) {
      const auto row = f2_coords(a.multiply(x, f2_basis[r]));
      for (std::size_t col = 0; col < big; ++col) mat[r * big + col] = row[col];
    }
    std::vector<std::uint32_t> tmp(big * big);
    for (unsigned s = 0; s < level; ++s) {
      std::fill(tmp.begin(), tmp.end(), 0U);
      for (std::size_t i = 0; i < big; ++i) {
        for (std::size_t k = 0; k < big; ++k) {
          const std::uint32_t v = mat[i * big + k];
          if (v == 0) continue;
          for (std::size_t j = 0; j < big; ++j) tmp[i * big + j] += v * mat[k * big + j];
        }
      }
      for (auto& v : tmp) v &= mod_mask;
      mat.swap(tmp);
    }
    std::uint32_t tr = 0;
    for (std::size_t i = 0; i < big; ++i) tr += mat[i * big + i];
    return static_cast<std::uint8_t>(((tr & mod_mask) >> level) & 1U);
  };

  // Current ideal I as GF(2)-vectors.
  std::vector<std::vector<std::uint8_t>> ideal;
  for (std::size_t i = 0; i < big; ++i) {
    std::vector<std::uint8_t> v(big, 0);
    v[i] = 1;
    ideal.push_back(std::move(v));
  }
  const auto f2 = field_ctx(1);
  const unsigned levels = static_cast<unsigned>(std::bit_width(big)) - 1U;
  for (unsigned level = 0; level <= levels && !ideal.empty(); ++level) {
    Matrix forms(ideal.size(), big);
    for (std::size_t j = 0; j < ideal.size(); ++j) {
      const Vector x = f2_element(ideal[j]);
      for (std::size_t b = 0; b < big; ++b) forms(j, b) = trace_form(a.multiply(x, f2_basis[b]), level);
    }
    const Matrix kernel = nullspace(*f2, transpose(forms));
    std::vector<std::vector<std::uint8_t>> next;
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
      std::vector<std::uint8_t> v(big, 0);
      for (std::size_t j = 0; j < ideal.size(); ++j) {
        if (kernel(r, j) == 0) continue;
        for (std::size_t t = 0; t < big; ++t) v[t] ^= ideal[j][t];
      }
      next.push_back(std::move(v));
    }
    ideal = std::move(next);
  }
  EchelonBasis out(f, a.dimension());
  for (const auto& v : ideal) out.insert(f2_element(v));
  return out.rows();
}

bool idempotents_equivalent(const Algebra& a, const Vector& e, const Vector& f) {
  const auto ef = a.sandwich_basis(e, f);
  if (ef.empty()) return false;
  const auto fe = a.sandwich_basis(f, e);
  for (const auto& x : ef) {
    for (const auto& y : fe) {
      if (!a.is_nilpotent(a.multiply(x, y))) return true;
    }
  }
  return false;
}

}  // namespace blockomega
