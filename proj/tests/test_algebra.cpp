#include <doctest.h>

#include <random>

#include "blockomega/algebra.hpp"
#include "blockomega/blocks.hpp"
#include "blockomega/errors.hpp"
#include "blockomega/gmodule.hpp"
#include "support.hpp"

using namespace blockomega;

namespace {

Algebra upper_triangular(const FieldPtr& f, std::size_t n) {
  std::vector<Matrix> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Matrix e(n, n);
      e(i, j) = 1;
      basis.push_back(e);
      pivots.push_back(i * n + j);
    }
  }
  return Algebra::from_matrices(f, basis, pivots);
}

Algebra regular_ring(const GroupData& g, const FieldPtr& f) {
  auto ring = EndomorphismRing::orbital(coset_action(g, make_subgroup(g, {0})), f);
  return ring.algebra();
}

// Every element of the algebra over a small field, as coordinate vectors.
std::vector<Vector> all_elements(const Algebra& a) {
  const std::size_t q = a.field().size();
  std::vector<Vector> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < a.dimension(); ++i) total *= q;
  for (std::size_t code = 0; code < total; ++code) {
    Vector v(a.dimension());
    std::size_t c = code;
    for (auto& x : v) {
      x = static_cast<Scalar>(c % q);
      c /= q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool slow_nilpotent(const Algebra& a, const Vector& x) {
  Vector p = x;
  for (std::size_t k = 0; k <= a.dimension(); ++k) {
    if (std::all_of(p.begin(), p.end(), [](Scalar s) { return s == 0; })) return true;
    p = a.multiply(p, x);
  }
  return false;
}

// J(A) = {x : xy nilpotent for every y}.
std::vector<Vector> slow_radical(const Algebra& a) {
  const auto elems = all_elements(a);
  std::vector<Vector> rad;
  for (const auto& x : elems) {
    bool in = true;
    for (const auto& y : elems) {
      if (!slow_nilpotent(a, a.multiply(x, y))) {
        in = false;
        break;
      }
    }
    if (in) rad.push_back(x);
  }
  return rad;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

void check_complete_set(const Algebra& a, const Vector& e, const std::vector<Vector>& idems) {
  Vector sum = a.zero();
  for (std::size_t i = 0; i < idems.size(); ++i) {
    CHECK(a.multiply(idems[i], idems[i]) == idems[i]);
    CHECK_FALSE(is_zero(idems[i]));
    for (std::size_t j = 0; j < idems.size(); ++j) {
      if (i != j) CHECK(is_zero(a.multiply(idems[i], idems[j])));
    }
    CHECK(is_local_corner(a, idems[i], a.sandwich_basis(idems[i], idems[i])));
    sum = a.add(sum, idems[i]);
  }
  CHECK(sum == e);
}

}  // namespace

TEST_CASE("seed derivation") {
  CHECK(derive_seed(0, 0) != derive_seed(0, 1));
  CHECK(derive_seed(5, 3) == derive_seed(5, 3));
  CHECK(derive_seed(1, 0) != derive_seed(0, 1));
}

TEST_CASE("structure constants from matrices") {
  const auto f = field_ctx(1);
  const auto a = upper_triangular(f, 3);
  CHECK(a.dimension() == 6);
  CHECK_FALSE(a.is_commutative());
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Vector x(6), y(6), z(6);
    for (std::size_t i = 0; i < 6; ++i) {
      x[i] = rng() & 1;
      y[i] = rng() & 1;
      z[i] = rng() & 1;
    }
    CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
    CHECK(a.multiply(a.unit(), x) == x);
    CHECK(a.multiply(x, a.unit()) == x);
  }
  CHECK(center_structure(testsupport::group("C6"), f).algebra->is_commutative());
  CHECK_FALSE(regular_ring(testsupport::group("S3"), f).is_commutative());
}

TEST_CASE("radical against brute force") {
  const auto f1 = field_ctx(1);
  const auto f2 = field_ctx(2);
  std::vector<std::pair<std::string, Algebra>> cases;
  cases.emplace_back("upper triangular 3x3 / GF(2)", upper_triangular(f1, 3));
  cases.emplace_back("GF(2)[S3]", regular_ring(testsupport::group("S3"), f1));
  cases.emplace_back("GF(2)[C2]", regular_ring(testsupport::group("C2"), f1));
  cases.emplace_back("GF(4)[C2]", regular_ring(testsupport::group("C2"), f2));
  cases.emplace_back("GF(4)[C3]", regular_ring(testsupport::group("C3"), f2));
  cases.emplace_back("upper triangular 2x2 / GF(4)", upper_triangular(f2, 2));
  cases.emplace_back("GF(2)[D8]", regular_ring(testsupport::group("D8"), f1));
  for (const auto& [name, a] : cases) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < a.dimension(); ++i) basis.push_back(a.basis_vector(i));
    const auto fast = radical(a, basis);
    const auto slow = slow_radical(a);
    // slow holds every element of the radical, so its size is q^dim.
    std::size_t expected = 1;
    for (std::size_t i = 0; i < fast.size(); ++i) expected *= a.field().size();
    CHECK_MESSAGE(slow.size() == expected, name);
    EchelonBasis span(a.field(), a.dimension());
    for (const auto& r : fast) span.insert(r);
    for (const auto& x : slow) CHECK_MESSAGE(span.contains(x), name);
  }
  const auto big = regular_ring(testsupport::group("S4"), f1);
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < big.dimension(); ++i) basis.push_back(big.basis_vector(i));
  CHECK_THROWS_AS(radical(big, basis, 16), CapExceeded);
}

TEST_CASE("primitive idempotents of group algebras") {
  for (const auto& name : {"C3", "S3", "D10", "A4", "C6"}) {
    const auto g = testsupport::group(name);
    const auto f = field_ctx(splitting_degree(g));
    const auto a = regular_ring(g, f);
    const auto idems = primitive_idempotents(a, a.unit());
    check_complete_set(a, a.unit(), idems);
    // Random splitting and the deterministic fallback find the same number of pieces.
    SplitOptions fallback;
    fallback.random_draws = 0;
    const auto det = primitive_idempotents(a, a.unit(), fallback);
    check_complete_set(a, a.unit(), det);
    CHECK_MESSAGE(det.size() == idems.size(), name);
  }
  // GF(2)[S3] = GF(2)[C2]-block + M_2(GF(2)): 1 + 2 primitive idempotents.
  const auto s3 = regular_ring(testsupport::group("S3"), field_ctx(1));
  CHECK(primitive_idempotents(s3, s3.unit()).size() == 3);
}

TEST_CASE("fallback alone splits noncommutative corners") {
  const auto f = field_ctx(1);
  const auto a = upper_triangular(f, 3);
  SplitOptions fallback;
  fallback.random_draws = 0;
  const auto idems = primitive_idempotents(a, a.unit(), fallback);
  CHECK(idems.size() == 3);
  check_complete_set(a, a.unit(), idems);
  // The diagonal matrix units e_11, e_22 are not equivalent in upper triangular matrices.
  CHECK_FALSE(idempotents_equivalent(a, idems[0], idems[1]));
  const auto m2 = regular_ring(testsupport::group("S3"), field_ctx(2));
  const auto p = primitive_idempotents(m2, m2.unit(), fallback);
  std::size_t equivalent_pairs = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) equivalent_pairs += idempotents_equivalent(m2, p[i], p[j]);
  }
  CHECK(equivalent_pairs == 1);  // the two copies of the 2-dimensional simple
}

TEST_CASE("commutative mode needs a splitting field") {
  const auto g = testsupport::group("C3");
  const auto ca = center_structure(g, field_ctx(1));
  const auto& a = *ca.algebra;
  CHECK_THROWS_AS(primitive_idempotents(a, a.unit()), SplittingFieldTooSmall);
  const auto cb = center_structure(g, field_ctx(2));
  const auto& b = *cb.algebra;
  CHECK(primitive_idempotents(b, b.unit()).size() == 3);
}

TEST_CASE("local corners and minimal polynomials") {
  const auto f = field_ctx(1);
  const auto c2 = regular_ring(testsupport::group("C2"), f);
  CHECK(is_local_corner(c2, c2.unit(), c2.sandwich_basis(c2.unit(), c2.unit())));
  const auto c3 = regular_ring(testsupport::group("C3"), field_ctx(2));
  CHECK_FALSE(is_local_corner(c3, c3.unit(), c3.sandwich_basis(c3.unit(), c3.unit())));
  for (std::size_t i = 0; i < c3.dimension(); ++i) {
    const Vector x = c3.basis_vector(i);
    const Poly p = c3.min_poly(x, c3.unit());
    CHECK(is_zero(c3.evaluate(p, x, c3.unit())));
  }
  CHECK(c2.is_nilpotent(c2.add(c2.basis_vector(0), c2.basis_vector(1))));
}
