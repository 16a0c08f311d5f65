#include "blockomega/matrix.hpp"

#include <algorithm>
#include <string>

#include "blockomega/errors.hpp"

namespace blockomega {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

bool Matrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1U : 0U)) return false;
    }
  }
  return true;
}

Matrix multiply(const FieldCtx& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: " + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) f.axpy(a(i, k), b.row(k), out);
  }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("add");
  Matrix c = a;
  auto cd = c.flat();
  auto bd = b.flat();
  for (std::size_t i = 0; i < cd.size(); ++i) cd[i] ^= bd[i];
  return c;
}

Matrix scaled(const FieldCtx& f, Scalar s, Matrix a) {
  f.scale(s, a.flat());
  return a;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

Vector vec_mat(const FieldCtx& f, std::span<const Scalar> v, const Matrix& a) {
  if (v.size() != a.rows()) throw DimensionMismatch("vec_mat");
  Vector out(a.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) f.axpy(v[k], a.row(k), out);
  return out;
}

RowReduction row_reduce(const FieldCtx& f, Matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      auto rp = a.row(p);
      auto rr = a.row(r);
      std::swap_ranges(rp.begin(), rp.end(), rr.begin());
    }
    f.scale(f.inv(a(r, c)), a.row(r));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && a(i, c) != 0) f.axpy(a(i, c), a.row(r), a.row(i));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix rref(r, a.cols());
  for (std::size_t i = 0; i < r; ++i) std::copy(a.row(i).begin(), a.row(i).end(), rref.row(i).begin());
  return {std::move(rref), std::move(pivots)};
}

std::size_t rank(const FieldCtx& f, const Matrix& a) {
  EchelonBasis basis(f, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) basis.insert(a.row(i));
  return basis.size();
}

Matrix nullspace(const FieldCtx& f, const Matrix& a) {
  const auto red = row_reduce(f, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = red.rref(i, free);
    basis.push_back(std::move(v));
  }
  // Free-variable basis vectors are echelonised in reverse; reduce once more.
  return row_reduce(f, Matrix::from_rows(basis, a.cols())).rref;
}

Matrix solve(const FieldCtx& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), aug.row(i).begin());
    std::copy(b.row(i).begin(), b.row(i).end(), aug.row(i).begin() + static_cast<std::ptrdiff_t>(n));
  }
  const auto red = row_reduce(f, std::move(aug));
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    const std::size_t p = red.pivots[i];
    if (p >= n) throw Inconsistent("solve: system has no solution");
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = red.rref(i, n + j);
  }
  return x;
}

std::optional<Matrix> inverse(const FieldCtx& f, const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  try {
    Matrix x = solve(f, a, Matrix::identity(a.rows()));
    if (!multiply(f, a, x).is_identity()) return std::nullopt;
    return x;
  } catch (const Inconsistent&) {
    return std::nullopt;
  }
}

EchelonBasis::EchelonBasis(const FieldCtx& f, std::size_t width, bool track)
    : field_(&f), width_(width), track_(track) {}

bool EchelonBasis::Reduction::in_span() const noexcept {
  return std::all_of(residual.begin(), residual.end(), [](Scalar s) { return s == 0; });
}

EchelonBasis::Reduction EchelonBasis::reduce(std::span<const Scalar> v) const {
  if (v.size() != width_) throw DimensionMismatch("echelon width");
  Reduction out{Vector(v.begin(), v.end()), {}};
  if (track_) out.coefficients.assign(inserted_, 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = out.residual[pivots_[k]];
    if (c == 0) continue;
    field_->axpy(c, rows_[k], out.residual);
    if (track_) field_->axpy(c, combos_[k], std::span(out.coefficients).first(combos_[k].size()));
  }
  return out;
}

bool EchelonBasis::contains(std::span<const Scalar> v) const { return reduce(v).in_span(); }

bool EchelonBasis::insert(std::span<const Scalar> v) {
  auto red = reduce(v);
  const std::size_t index = inserted_;
  if (track_) ++inserted_;
  auto it = std::find_if(red.residual.begin(), red.residual.end(), [](Scalar s) { return s != 0; });
  if (it == red.residual.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - red.residual.begin());
  const Scalar inv = field_->inv(*it);
  field_->scale(inv, red.residual);
  if (track_) {
    // residual = v - sum coeffs * inserted, so row = inv * (e_index - coeffs).
    Vector combo = std::move(red.coefficients);
    combo.resize(index + 1, 0);
    combo[index] ^= 1;
    field_->scale(inv, combo);
    combos_.push_back(std::move(combo));
  }
  rows_.push_back(std::move(red.residual));
  pivots_.push_back(pivot);
  return true;
}

std::optional<Vector> EchelonBasis::row_coordinates(std::span<const Scalar> v) const {
  if (v.size() != width_) throw DimensionMismatch("echelon width");
  Vector residual(v.begin(), v.end());
  Vector coords(rows_.size(), 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = residual[pivots_[k]];
    if (c == 0) continue;
    coords[k] = c;
    field_->axpy(c, rows_[k], residual);
  }
  if (std::any_of(residual.begin(), residual.end(), [](Scalar s) { return s != 0; })) {
    return std::nullopt;
  }
  return coords;
}

}  // namespace blockomega
