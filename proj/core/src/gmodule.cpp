#include "blockomega/gmodule.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "blockomega/errors.hpp"
#include "blockomega/poly.hpp"

namespace blockomega {

namespace {

std::vector<std::uint32_t> inverse_permutation(const std::vector<std::uint32_t>& perm) {
  std::vector<std::uint32_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<std::uint32_t>(i);
  return inv;
}

// Restricted generator actions on the row space of an echelon basis inside
// k[points]; the image of row i under g has entry a_i[g^-1(p)] at point p.
std::vector<Matrix> restricted_perm_actions(const FieldCtx& f, const PermAction& action, const Matrix& basis,
                                            const std::vector<std::size_t>& pivots) {
  const std::size_t s = basis.rows();
  const std::size_t n = basis.cols();
  std::vector<Matrix> out;
  std::mt19937_64 rng(0x5eed);
  for (const auto& img : action.generator_images) {
    const auto inv = inverse_permutation(img);
    Matrix x(s, s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) x(i, j) = basis(i, inv[pivots[j]]);
    }
    // Invariance spot check with one random combination of the rows.
    Vector r(s);
    for (auto& c : r) c = static_cast<Scalar>(rng()) & f.mask();
    const Vector v = vec_mat(f, r, basis);
    Vector moved(n, 0);
    for (std::size_t p = 0; p < n; ++p) moved[img[p]] = v[p];
    const Vector expect = vec_mat(f, vec_mat(f, r, x), basis);
    if (moved != expect) throw InvalidAction("subspace is not invariant under the group");
    out.push_back(std::move(x));
  }
  return out;
}

Matrix stack_rows(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), std::max(a.cols(), b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::copy(b.row(i).begin(), b.row(i).end(), out.row(a.rows() + i).begin());
  }
  return out;
}

}  // namespace

GModule::GModule(FieldPtr field, std::size_t dimension, std::vector<Matrix> generator_actions, std::string label)
    : field_(std::move(field)), dim_(dimension), actions_(std::move(generator_actions)), label_(std::move(label)) {
  for (const auto& a : actions_) {
    if (a.rows() != dim_ || a.cols() != dim_) throw DimensionMismatch("generator action has wrong size");
  }
}

bool GModule::is_full_permutation_module() const noexcept {
  return embedding_.has_value() && embedding_->action != nullptr && embedding_->action->degree == dim_ &&
         embedding_->basis.rows() == dim_;
}

GModule perm_module(const GroupData& group, const PermAction& action, FieldPtr field, std::string label) {
  if (action.generator_images.size() != group.generator_count()) {
    throw InvalidAction("action table needs one row per group generator");
  }
  const std::size_t n = action.degree;
  std::vector<Matrix> mats;
  for (const auto& img : action.generator_images) {
    if (img.size() != n) throw InvalidAction("action row has wrong length");
    std::vector<bool> seen(n, false);
    Matrix m(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      if (img[p] >= n || seen[img[p]]) throw InvalidAction("action row is not a permutation");
      seen[img[p]] = true;
      m(p, img[p]) = 1;
    }
    mats.push_back(std::move(m));
  }
  GModule mod(std::move(field), n, std::move(mats), std::move(label));
  std::vector<std::size_t> pivots(n);
  std::iota(pivots.begin(), pivots.end(), std::size_t{0});
  mod.set_embedding({std::make_shared<const PermAction>(action), Matrix::identity(n), std::move(pivots)});
  return mod;
}

GModule trivial_module(const GroupData& group, FieldPtr field) {
  PermAction point;
  point.degree = 1;
  point.generator_images.assign(group.generator_count(), std::vector<std::uint32_t>{0});
  return perm_module(group, point, std::move(field), "k_G");
}

GModule direct_sum(const GModule& a, const GModule& b) {
  if (a.generator_count() != b.generator_count()) throw DimensionMismatch("direct sum of modules for different groups");
  const std::size_t n = a.dimension() + b.dimension();
  std::vector<Matrix> mats;
  for (std::size_t g = 0; g < a.generator_count(); ++g) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      for (std::size_t j = 0; j < a.dimension(); ++j) m(i, j) = a.action(g)(i, j);
    }
    for (std::size_t i = 0; i < b.dimension(); ++i) {
      for (std::size_t j = 0; j < b.dimension(); ++j) m(a.dimension() + i, a.dimension() + j) = b.action(g)(i, j);
    }
    mats.push_back(std::move(m));
  }
  return GModule(a.field_ptr(), n, std::move(mats), a.label() + "+" + b.label());
}

GModule dual(const GModule& m) {
  std::vector<Matrix> mats;
  for (const auto& a : m.actions()) {
    auto inv = inverse(m.field(), a);
    if (!inv) throw InvalidAction("generator action is not invertible");
    mats.push_back(transpose(*inv));
  }
  return GModule(m.field_ptr(), m.dimension(), std::move(mats), m.label() + "*");
}

Matrix element_action(const GroupData& group, const GModule& m, std::size_t element) {
  Matrix x = Matrix::identity(m.dimension());
  for (auto g : group.word(element)) x = multiply(m.field(), x, m.action(g));
  return x;
}

Matrix class_function_action(const GroupData& group, const GModule& m, const Vector& coeff) {
  const auto& f = m.field();
  auto class_coeff = [&](std::size_t x) { return coeff[group.class_of(x)]; };
  if (m.embedding()) {
    const auto& emb = *m.embedding();
    const std::size_t n = emb.action->degree;
    Matrix ambient(n, n);
    for (std::uint32_t p = 0; p < n; ++p) {
      const auto img = point_images(group, *emb.action, p);
      auto row = ambient.row(p);
      for (std::size_t x = 0; x < group.order(); ++x) row[img[x]] ^= class_coeff(x);
    }
    if (m.is_full_permutation_module()) return ambient;
    const Matrix moved = multiply(f, emb.basis, ambient);
    Matrix out(m.dimension(), m.dimension());
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      for (std::size_t j = 0; j < m.dimension(); ++j) out(i, j) = moved(i, emb.pivots[j]);
    }
    return out;
  }
  const std::size_t d = m.dimension();
  if (group.order() * d * d > std::size_t{50'000'000}) {
    throw CapExceeded("class function action too large for a non-permutation module");
  }
  std::vector<Matrix> rho(group.order());
  rho[0] = Matrix::identity(d);
  Matrix total(d, d);
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (x > 0) rho[x] = multiply(f, rho[group.parent(x)], m.action(group.parent_generator(x)));
    const Scalar c = class_coeff(x);
    if (c != 0) f.axpy(c, rho[x].flat(), total.flat());
  }
  return total;
}

GModule submodule(const GModule& m, const Matrix& rows, std::string label) {
  const auto& f = m.field();
  if (rows.cols() != m.dimension()) throw DimensionMismatch("submodule rows have wrong width");
  if (m.embedding()) {
    const auto& emb = *m.embedding();
    const Matrix ambient = m.is_full_permutation_module() ? rows : multiply(f, rows, emb.basis);
    auto red = row_reduce(f, ambient);
    auto actions = restricted_perm_actions(f, *emb.action, red.rref, red.pivots);
    GModule sub(m.field_ptr(), red.rref.rows(), std::move(actions), std::move(label));
    sub.set_embedding({emb.action, std::move(red.rref), std::move(red.pivots)});
    return sub;
  }
  const auto red = row_reduce(f, rows);
  const std::size_t s = red.rref.rows();
  std::vector<Matrix> actions;
  for (const auto& a : m.actions()) {
    const Matrix moved = multiply(f, red.rref, a);
    Matrix x(s, s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) x(i, j) = moved(i, red.pivots[j]);
    }
    if (!(multiply(f, x, red.rref) == moved)) throw InvalidAction("subspace is not invariant under the group");
    actions.push_back(std::move(x));
  }
  return GModule(m.field_ptr(), s, std::move(actions), std::move(label));
}

std::vector<Matrix> hom_space(const GModule& m, const GModule& n) {
  if (!(m.field() == n.field())) throw DimensionMismatch("hom_space: modules over different fields");
  if (m.generator_count() != n.generator_count()) throw DimensionMismatch("hom_space: different groups");
  const auto& f = m.field();
  const std::size_t dm = m.dimension();
  const std::size_t dn = n.dimension();
  if (dm == 0 || dn == 0) return {};

  // Spin M from standard basis vectors; phi(node_k) = y_{seed_k} T_k.
  struct Node {
    std::size_t seed;
    Vector vec;
    Matrix t;
  };
  std::vector<Node> nodes;
  EchelonBasis span(f, dm, true);
  std::size_t seeds = 0;
  struct Relation {
    std::size_t seed;
    Matrix t;
    Vector coeffs;
  };
  std::vector<Relation> relations;
  for (std::size_t s = 0; s < dm && span.size() < dm; ++s) {
    Vector e(dm, 0);
    e[s] = 1;
    if (span.contains(e)) continue;
    span.insert(e);
    nodes.push_back({seeds++, e, Matrix::identity(dn)});
    for (std::size_t head = nodes.size() - 1; head < nodes.size(); ++head) {
      for (std::size_t g = 0; g < m.generator_count(); ++g) {
        Vector w = vec_mat(f, nodes[head].vec, m.action(g));
        Matrix tw = multiply(f, nodes[head].t, n.action(g));
        auto red = span.reduce(w);
        if (red.in_span()) {
          red.coefficients.resize(nodes.size(), 0);
          relations.push_back({nodes[head].seed, std::move(tw), std::move(red.coefficients)});
        } else {
          span.insert(w);
          nodes.push_back({nodes[head].seed, std::move(w), std::move(tw)});
        }
      }
    }
  }

  // Each relation: y_seed T = sum_k c_k y_{seed_k} T_k, dn equations.
  const std::size_t unknowns = seeds * dn;
  EchelonBasis equations(f, unknowns);
  for (const auto& rel : relations) {
    std::vector<Matrix> blocks(seeds, Matrix(dn, dn));
    f.axpy(1, rel.t.flat(), blocks[rel.seed].flat());
    for (std::size_t k = 0; k < rel.coeffs.size(); ++k) {
      if (rel.coeffs[k] != 0) f.axpy(rel.coeffs[k], nodes[k].t.flat(), blocks[nodes[k].seed].flat());
    }
    Vector eq(unknowns);
    for (std::size_t b = 0; b < dn; ++b) {
      for (std::size_t j = 0; j < seeds; ++j) {
        for (std::size_t a = 0; a < dn; ++a) eq[j * dn + a] = blocks[j](a, b);
      }
      equations.insert(eq);
      if (equations.size() == unknowns) return {};
    }
  }
  Matrix system(equations.size(), unknowns);
  for (std::size_t i = 0; i < equations.size(); ++i) {
    std::copy(equations.rows()[i].begin(), equations.rows()[i].end(), system.row(i).begin());
  }
  const Matrix solutions = nullspace(f, system);
  if (solutions.rows() == 0) return {};

  Matrix b(dm, dm);
  for (std::size_t k = 0; k < dm; ++k) std::copy(nodes[k].vec.begin(), nodes[k].vec.end(), b.row(k).begin());
  const auto binv = inverse(f, b);
  if (!binv) throw Inconsistent("hom_space: spun vectors are not a basis");

  Matrix flat(solutions.rows(), dm * dn);
  for (std::size_t s = 0; s < solutions.rows(); ++s) {
    Matrix phi(dm, dn);
    for (std::size_t k = 0; k < dm; ++k) {
      const auto y = solutions.row(s).subspan(nodes[k].seed * dn, dn);
      const Vector img = vec_mat(f, y, nodes[k].t);
      std::copy(img.begin(), img.end(), phi.row(k).begin());
    }
    const Matrix x = multiply(f, *binv, phi);
    std::copy(x.flat().begin(), x.flat().end(), flat.row(s).begin());
  }
  const auto red = row_reduce(f, flat);
  std::vector<Matrix> out;
  for (std::size_t s = 0; s < red.rref.rows(); ++s) {
    Matrix x(dm, dn);
    std::copy(red.rref.row(s).begin(), red.rref.row(s).end(), x.flat().begin());
    out.push_back(std::move(x));
  }
  return out;
}

// EndomorphismRing -----------------------------------------------------------

EndomorphismRing EndomorphismRing::generic(const GModule& m) {
  EndomorphismRing r;
  r.module_dim_ = m.dimension();
  r.basis_ = hom_space(m, m);
  for (const auto& x : r.basis_) {
    const auto flat = x.flat();
    const auto it = std::find_if(flat.begin(), flat.end(), [](Scalar s) { return s != 0; });
    r.pivots_.push_back(static_cast<std::size_t>(it - flat.begin()));
  }
  r.algebra_ = std::make_shared<const Algebra>(Algebra::from_matrices(m.field_ptr(), r.basis_, r.pivots_));
  return r;
}

EndomorphismRing EndomorphismRing::orbital(const PermAction& action, FieldPtr field) {
  EndomorphismRing r;
  r.orbital_ = true;
  const std::size_t n = action.degree;
  r.module_dim_ = n;
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  r.pair_orbital_.assign(n * n, kUnset);
  std::vector<std::uint64_t> queue;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (r.pair_orbital_[p * n + q] != kUnset) continue;
      const auto k = static_cast<std::uint32_t>(r.reps_.size());
      r.reps_.push_back({static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)});
      r.pair_orbital_[p * n + q] = k;
      queue.assign(1, p * n + q);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t a = queue[head] / n;
        const std::size_t b = queue[head] % n;
        for (const auto& img : action.generator_images) {
          const std::size_t key = std::size_t{img[a]} * n + img[b];
          if (r.pair_orbital_[key] == kUnset) {
            r.pair_orbital_[key] = k;
            queue.push_back(key);
          }
        }
      }
    }
  }
  const std::size_t dim = r.reps_.size();
  r.transpose_.resize(dim);
  Vector unit(dim, 0);
  for (std::size_t k = 0; k < dim; ++k) {
    const auto [p, q] = r.reps_[k];
    r.transpose_[k] = r.pair_orbital_[std::size_t{q} * n + p];
    if (p == q) {
      unit[k] = 1;
      r.diagonal_.push_back(static_cast<std::uint32_t>(k));
    }
  }
  // A_i A_j = sum_k c_ijk A_k with c_ijk = #{q : (p,q) in O_i, (q,r) in O_j} for (p,r) in O_k.
  std::vector<std::pair<std::uint64_t, Term>> triples;
  std::vector<std::uint8_t> parity(dim * dim, 0);
  std::vector<std::uint64_t> touched;
  for (std::size_t k = 0; k < dim; ++k) {
    const auto [p, rr] = r.reps_[k];
    touched.clear();
    for (std::size_t q = 0; q < n; ++q) {
      const std::uint64_t key = std::uint64_t{r.pair_orbital_[std::size_t{p} * n + q]} * dim +
                                r.pair_orbital_[q * n + rr];
      // bit 1 marks the key as touched, bit 0 is the count mod 2
      if ((parity[key] & 2U) == 0) {
        touched.push_back(key);
        parity[key] = 2U;
      }
      parity[key] ^= 1U;
    }
    for (auto key : touched) {
      if ((parity[key] & 1U) != 0) triples.push_back({key, Term{static_cast<std::uint32_t>(k), 1}});
      parity[key] = 0;
    }
  }
  r.algebra_ = std::make_shared<const Algebra>(
      Algebra::from_triples(std::move(field), dim, std::move(triples), std::move(unit), false));
  return r;
}

Matrix EndomorphismRing::to_matrix(const Vector& c) const {
  const auto& f = algebra_->field();
  Matrix x(module_dim_, module_dim_);
  if (orbital_) {
    auto flat = x.flat();
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = c[pair_orbital_[i]];
    return x;
  }
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (c[k] != 0) f.axpy(c[k], basis_[k].flat(), x.flat());
  }
  return x;
}

Vector EndomorphismRing::from_matrix(const Matrix& x) const {
  if (x.rows() != module_dim_ || x.cols() != module_dim_) throw DimensionMismatch("endomorphism has wrong size");
  Vector c(dimension(), 0);
  if (orbital_) {
    for (std::size_t k = 0; k < reps_.size(); ++k) c[k] = x(reps_[k].first, reps_[k].second);
  } else {
    for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = x.flat()[pivots_[k]];
  }
  if (!(to_matrix(c) == x)) throw InvalidAction("matrix is not an endomorphism of the module");
  return c;
}

std::vector<Vector> EndomorphismRing::initial_idempotents() const {
  if (!orbital_) return {algebra_->unit()};
  std::vector<Vector> out;
  for (auto k : diagonal_) out.push_back(algebra_->basis_vector(k));
  return out;
}

Vector EndomorphismRing::transpose(const Vector& c) const {
  if (!orbital_) throw InvalidAction("transpose is only available for orbital rings");
  Vector t(c.size(), 0);
  for (std::size_t k = 0; k < c.size(); ++k) t[transpose_[k]] = c[k];
  return t;
}

Vector class_function_in_ring(const GroupData& group, const EndomorphismRing& ring, const PermAction& action,
                              const Vector& coeff) {
  if (!ring.is_orbital()) {
    throw InvalidAction("class_function_in_ring expects an orbital ring");
  }
  const auto& reps = ring.representatives();
  std::vector<std::vector<std::size_t>> by_point(action.degree);
  for (std::size_t k = 0; k < reps.size(); ++k) by_point[reps[k].first].push_back(k);
  Vector c(reps.size(), 0);
  Vector acc(action.degree, 0);
  for (std::uint32_t p = 0; p < action.degree; ++p) {
    if (by_point[p].empty()) continue;
    std::fill(acc.begin(), acc.end(), 0);
    const auto img = point_images(group, action, p);
    for (std::size_t x = 0; x < group.order(); ++x) acc[img[x]] ^= coeff[group.class_of(x)];
    for (auto k : by_point[p]) c[k] = acc[reps[k].second];
  }
  return c;
}

std::vector<GModule> split_by_element(const GModule& m, const Matrix& fmat, std::uint64_t seed) {
  const auto& f = m.field();
  for (const auto& a : m.actions()) {
    if (!(multiply(f, a, fmat) == multiply(f, fmat, a))) throw InvalidAction("element is not an endomorphism");
  }
  const Poly p = min_poly(f, fmat, seed);
  const auto fac = factor(f, p, seed);
  if (fac.factors.size() <= 1) return {m};
  std::vector<Poly> parts;
  for (const auto& [q, mult] : fac.factors) parts.push_back(poly_pow(f, q, mult));
  std::vector<GModule> out;
  for (const auto& q : parts) {
    const Poly cof = poly_div(f, p, q);
    const Poly u = poly_mod(f, poly_mul(f, cof, poly_inverse_mod(f, poly_mod(f, cof, q), q)), p);
    out.push_back(submodule(m, evaluate(f, u, fmat), m.label()));
  }
  return out;
}

// Decomposition ------------------------------------------------------------------

Decomposition decompose(const GModule& m, const DecomposeOptions& options) {
  if (m.dimension() > options.module_cap) {
    throw CapExceeded("module dimension " + std::to_string(m.dimension()) + " exceeds cap " +
                      std::to_string(options.module_cap));
  }
  Decomposition d;
  if (m.dimension() == 0) {
    d.change_of_basis = Matrix(0, 0);
    return d;
  }
  const bool orbital = m.is_full_permutation_module();
  d.ring = std::make_shared<const EndomorphismRing>(orbital ? EndomorphismRing::orbital(*m.embedding()->action, m.field_ptr())
                                                            : EndomorphismRing::generic(m));
  const auto& ring = *d.ring;
  const auto& alg = ring.algebra();
  const auto& f = m.field();

  std::vector<Vector> prims;
  const auto starts = ring.initial_idempotents();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    SplitOptions so;
    so.seed = derive_seed(options.seed, i);
    so.random_draws = options.random_draws;
    auto part = primitive_idempotents(alg, starts[i], so);
    prims.insert(prims.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }

  struct Copy {
    Vector idem;
    RowReduction space;
  };
  std::vector<std::vector<Copy>> classes;
  std::size_t total = 0;
  for (auto& e : prims) {
    auto space = row_reduce(f, ring.to_matrix(e));
    total += space.rref.rows();
    bool placed = false;
    for (auto& cls : classes) {
      if (cls.front().space.rref.rows() != space.rref.rows()) continue;
      if (idempotents_equivalent(alg, cls.front().idem, e)) {
        cls.push_back({std::move(e), std::move(space)});
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({{std::move(e), std::move(space)}});
  }
  if (total != m.dimension()) {
    throw DecompositionFailed("summand dimensions add to " + std::to_string(total) + ", expected " +
                              std::to_string(m.dimension()));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return a.front().space.rref.rows() < b.front().space.rref.rows();
  });
  Matrix change(0, m.dimension());
  for (auto& cls : classes) {
    Summand s;
    s.multiplicity = cls.size();
    s.module = submodule(m, cls.front().space.rref, m.label() + " summand");
    for (auto& c : cls) {
      change = stack_rows(change, c.space.rref);
      s.idempotents.push_back(std::move(c.idem));
    }
    d.summands.push_back(std::move(s));
  }
  d.change_of_basis = std::move(change);
  return d;
}

bool summands_isomorphic(const Decomposition& d, const Vector& e, const Vector& f) {
  return idempotents_equivalent(d.ring->algebra(), e, f);
}

bool summand_self_dual(const Decomposition& d, const Vector& e) {
  return idempotents_equivalent(d.ring->algebra(), e, d.ring->transpose(e));
}

bool is_isomorphic(const GModule& a, const GModule& b, std::uint64_t seed) {
  if (a.dimension() != b.dimension()) return false;
  if (!(a.field() == b.field())) return false;
  if (a.dimension() == 0) return true;
  const auto& f = a.field();
  const auto homs = hom_space(a, b);
  if (homs.empty()) return false;
  const std::size_t d = a.dimension();
  std::mt19937_64 rng(seed);
  for (int draw = 0; draw < 256; ++draw) {
    Matrix x(d, d);
    for (const auto& h : homs) f.axpy(static_cast<Scalar>(rng()) & f.mask(), h.flat(), x.flat());
    if (rank(f, x) == d) return true;
  }
  // Greedy rank maximisation over basis elements and scalar multiples.
  Matrix x(d, d);
  std::size_t best = 0;
  for (const auto& h : homs) {
    for (Scalar s = 1; s <= std::min<Scalar>(f.mask(), 16); ++s) {
      Matrix y = x;
      f.axpy(s, h.flat(), y.flat());
      const auto r = rank(f, y);
      if (r > best) {
        best = r;
        x = std::move(y);
        if (best == d) return true;
        break;
      }
    }
  }
  return false;
}

// Projectivity -------------------------------------------------------------

namespace {

std::vector<Matrix> sylow_actions(const GroupData& group, const SubgroupData& sylow, const GModule& m) {
  std::vector<Matrix> out;
  out.reserve(sylow.members.size());
  for (auto p : sylow.members) out.push_back(element_action(group, m, p));
  return out;
}

}  // namespace

bool higman_projective(const GroupData& group, const SubgroupData& sylow, const GModule& m) {
  const auto& f = m.field();
  const std::size_t d = m.dimension();
  if (d == 0) return true;
  const auto rho = sylow_actions(group, sylow, m);
  std::vector<Matrix> rho_inv;
  for (auto p : sylow.members) rho_inv.push_back(element_action(group, m, group.inverse(p)));
  // Row (i,j) of the system is entry (i,j) of sum_p A_p X B_p; column (a,b) is X[a][b].
  Matrix system(d * d, d * d);
  for (std::size_t k = 0; k < rho.size(); ++k) {
    const auto& A = rho_inv[k];
    const auto& B = rho[k];
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t a = 0; a < d; ++a) {
        const Scalar ia = A(i, a);
        if (ia == 0) continue;
        for (std::size_t b = 0; b < d; ++b) {
          for (std::size_t j = 0; j < d; ++j) {
            const Scalar bj = B(b, j);
            if (bj != 0) system(i * d + j, a * d + b) ^= f.mul(ia, bj);
          }
        }
      }
    }
  }
  Matrix rhs(d * d, 1);
  for (std::size_t i = 0; i < d; ++i) rhs(i * d + i, 0) = 1;
  try {
    solve(f, system, rhs);
    return true;
  } catch (const Inconsistent&) {
    return false;
  }
}

bool norm_rank_projective(const GroupData& group, const SubgroupData& sylow, const GModule& m) {
  const auto& f = m.field();
  const std::size_t d = m.dimension();
  if (d == 0) return true;
  if (d % sylow.order != 0) return false;
  std::size_t r = 0;
  if (m.embedding()) {
    const auto& emb = *m.embedding();
    const std::size_t n = emb.action->degree;
    Matrix image(d, n);
    for (auto p : sylow.members) {
      const auto perm = element_permutation(group, *emb.action, p);
      for (std::size_t i = 0; i < d; ++i) {
        auto out = image.row(i);
        const auto in = emb.basis.row(i);
        for (std::size_t q = 0; q < n; ++q) out[perm[q]] ^= in[q];
      }
    }
    r = rank(f, image);
  } else {
    Matrix norm(d, d);
    for (const auto& x : sylow_actions(group, sylow, m)) f.axpy(1, x.flat(), norm.flat());
    r = rank(f, norm);
  }
  return r * sylow.order == d;
}

bool is_projective(const GroupData& group, const SubgroupData& sylow, const GModule& m) {
  return m.dimension() <= 24 ? higman_projective(group, sylow, m) : norm_rank_projective(group, sylow, m);
}

std::vector<std::pair<GModule, std::size_t>> projective_components(const GroupData& group,
                                                                   const SubgroupData& sylow,
                                                                   const GModule& m,
                                                                   const DecomposeOptions& options) {
  std::vector<std::pair<GModule, std::size_t>> out;
  for (auto& s : decompose(m, options).summands) {
    if (is_projective(group, sylow, s.module)) out.emplace_back(std::move(s.module), s.multiplicity);
  }
  return out;
}

}  // namespace blockomega
